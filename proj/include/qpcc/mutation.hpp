#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpcc/potential.hpp"

namespace qpcc {

bool is_mutable(const QuiverWithPotential& qp, int k);

/// Reverse the arrows at k (a -> a*), add [xy] for every x into k and y out
/// of k, replace such pairs inside W and add sum y* x* [xy].
/// Throws std::domain_error("vertex not mutable") when k has a loop or a 2-cycle.
QuiverWithPotential premutate(const QuiverWithPotential& qp, int k);

/// Arrow images of an algebra endomorphism fixing the idempotents.
using ArrowMap = std::vector<AlgebraElement>;

ArrowMap identity_map(const QuiverPtr& q, int cap);
/// w(phi): every arrow a replaced by phi[a], truncated at w's cap.
Potential substitute(const Potential& w, const ArrowMap& phi);
AlgebraElement substitute(const AlgebraElement& x, const ArrowMap& phi);
/// (first then second): a -> second applied to first[a].
ArrowMap compose(const ArrowMap& first, const ArrowMap& second);
/// Inverse of a map whose linear part is unipotent, by fixed-point iteration.
ArrowMap invert(const ArrowMap& phi);

struct Substitution {
  std::string arrow;
  AlgebraElement image;
};

struct SplitResult {
  QuiverWithPotential input;
  QuiverWithPotential trivial;  // same vertices, paired arrows, quadratic potential
  QuiverWithPotential reduced;  // same vertices, remaining arrows
  std::vector<std::pair<int, int>> pairs;  // arrow ids of the input quiver
  std::vector<Substitution> log;           // elementary substitutions, in order
  ArrowMap phi;                            // input(phi) = trivial + reduced (on input arrows)
  ArrowMap phi_inverse;
};

/// Pairs off the 2-cycles of the quadratic part and removes them from the
/// higher terms degree by degree. Refuses loops with quadratic terms and
/// linear terms.
SplitResult split_trivial_reduced(const QuiverWithPotential& qp);

/// W_triv + W_red written on the input quiver.
Potential reassembled(const SplitResult& s);

QuiverWithPotential mutate(const QuiverWithPotential& qp, int k);
QuiverWithPotential mutate_sequence(const QuiverWithPotential& qp, const std::vector<int>& ks);

enum class InvolutionStatus { Pass, Inconclusive, Fail };
std::string to_string(InvolutionStatus s);

struct InvolutionReport {
  InvolutionStatus status = InvolutionStatus::Fail;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> matching;  // original arrow -> mu^2 arrow
  QuiverWithPotential result;
  std::size_t candidates_tried = 0;
};

/// Searches vertex-fixing arrow bijections between mu_k^2(qp) and qp that
/// identify the potentials; gives up beyond 10! candidates.
InvolutionReport check_involution(const QuiverWithPotential& qp, int k);

/// Arrow bijection (per source/target class) carrying a's potential onto b's.
/// Returns false without a match; `tried` counts candidates.
bool find_qp_isomorphism(const QuiverWithPotential& a, const QuiverWithPotential& b, std::vector<int>& map,
                         std::size_t& tried, bool& bailed);

QuiverWithPotential direct_sum(const QuiverWithPotential& a, const QuiverWithPotential& b);

}  // namespace qpcc
