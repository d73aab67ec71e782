#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpcc/potential.hpp"

namespace qpcc {

/// Coefficients of the 2-cyclic A_n family with loops at 1..m.
struct FamilyParams {
  int n = 1;
  int m = 0;
  std::vector<Rational> k;  // m entries
  std::vector<Rational> t;  // n-1 entries

  void validate() const;  // throws std::invalid_argument
  std::string to_string() const;
};

/// Arrows a_i: i->i+1, b_i: i+1->i (1 <= i < n), then loops E_i at each i in
/// `loops` (ascending). Names are "a1", "b1", "E1", ...
Quiver build_anm_loops(int n, const std::set<int>& loops);
Quiver build_anm(int n, int m);

/// sum k_i E_i^3 + sum t_i (a_i b_i)^3 + 3 sum E_i a_i b_i
///   + 3 sum_{i>=2} E_i b_{i-1} a_{i-1} + 3 sum_{i=m}^{n-2} a_i a_{i+1} b_{i+1} b_i,
/// with terms whose indices fall outside the quiver dropped.
QuiverWithPotential build_wnm(const FamilyParams& p, int cap);

/// The A2 example with two loops as printed in the case study: no t_1 term.
QuiverWithPotential build_a2_12_display(int cap);

struct FdCheck {
  bool satisfied = true;   // all alternating sums nonzero
  bool parity = true;      // n ≡ m (mod 2)
  int i_prime = 0;         // first violation, 0 if none
  int s_prime = 0;
  std::string witness;
  bool applies() const { return satisfied && parity; }
};

FdCheck check_fd_condition(const FamilyParams& p);

/// Sum_{i=i'}^m (-1)^i k_i + Sum_{s=1}^{s'} (-1)^s t_{m+2s-1}; indices 1-based.
Rational fd_sum(const FamilyParams& p, int i_prime, int s_prime);

FamilyParams generic_params(int n, int m);

/// nth prime, 1-based (prime(1) = 2).
long nth_prime(int k);

// ---- Z3 covers ----

enum class CycleType { One = 1, Two = 2 };

struct CoverQuiver {
  QuiverPtr quiver;
  QuiverPtr base;                 // build_anm_loops(n, I)
  std::vector<int> vertex_fiber;  // cover vertex -> base vertex
  std::vector<int> arrow_fiber;   // cover arrow -> base arrow
  std::vector<CycleType> c_type;  // C_{i,i+1} for i = 1..n-1 (index i-1)
  std::vector<std::optional<CycleType>> l_type;  // L_i per level (index i-1)
};

/// Vertex i_j (1-based i, j) is numbered 3(i-1) + (j-1). Arrow names carry the
/// fiber index after an underscore: "a1_2" is a_{1,2}.
CoverQuiver build_c3_quiver(int n, const std::set<int>& loops);

/// Each base cycle is lifted along the cover; a closed lift whose three
/// translates are distinct cycles receives a third of the coefficient each,
/// a lift fixed by the rotation keeps it. Throws std::logic_error if some
/// base cycle does not lift to a closed cycle.
struct CoverQP {
  CoverQuiver cover;
  QuiverWithPotential qp;
};
CoverQP build_c3_potential(const FamilyParams& p, int cap);

struct GroupAction {
  int order = 1;
  std::vector<int> vertex_perm;  // generator on vertices
  std::vector<int> arrow_perm;   // generator on arrows

  static GroupAction identity(const Quiver& q);
};

/// i_j -> i_{j+1}, X_{i,j} -> X_{i,j+1}.
GroupAction z3_rotation(const CoverQuiver& c);

/// Throws std::invalid_argument when the action is not an automorphism of
/// order `order` or does not preserve the potential termwise.
bool check_admissible(const QuiverWithPotential& qp, const GroupAction& act);

/// Orbit quiver with W_G the image of W under the projection (an orbit of
/// size s and coefficient c contributes s*c). Orbit vertices are numbered by
/// smallest member; orbit arrows are ordered by smallest member and named by
/// the representative's name with a trailing "_<digits>" removed when all
/// members agree on that stem.
QuiverWithPotential orbit_quotient(const QuiverWithPotential& qp, const GroupAction& act);

/// Equality up to renumbering arrows: matched by name, same vertex indices.
bool qp_equal_by_names(const QuiverWithPotential& a, const QuiverWithPotential& b, std::string* why = nullptr);

}  // namespace qpcc
