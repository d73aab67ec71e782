#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpcc/families.hpp"
#include "qpcc/groebner.hpp"
#include "qpcc/linalg.hpp"

namespace qpcc {

/// d_a W for every arrow a, in arrow order.
std::vector<AlgebraElement> ideal_generators(const QuiverWithPotential& qp);

enum class Certificate { Finite, Undetermined };

class JacobianModel {
 public:
  QuiverWithPotential qp;  // at the cap actually used
  Certificate certificate = Certificate::Undetermined;
  int cap = 0;
  int d0 = -1;             // no standard word of this length (Finite only)
  int dim = 0;             // number of basis paths
  int max_generator_degree = 0;
  std::vector<Path> basis;  // by length, then arrow word, then vertex
  std::vector<AlgebraElement> generators;
  std::shared_ptr<const TruncatedGroebner> engine;

  bool finite() const { return certificate == Certificate::Finite; }
  const QuiverPtr& quiver() const { return qp.quiver; }
  int num_vertices() const { return qp.quiver->num_vertices(); }

  /// -1 when p is not a basis path.
  int basis_index(const Path& p) const;
  /// Coordinates of nf(x) in the basis.
  VecQ coords(const AlgebraElement& x) const;
  AlgebraElement from_coords(const VecQ& v) const;
  /// Basis paths starting (resp. ending) at v.
  std::vector<int> basis_from(int v) const;

  explicit JacobianModel(QuiverWithPotential q) : qp(std::move(q)) {}

 private:
  std::map<Path, int, LeadFirst> index_;
  friend JacobianModel build_model_at(const QuiverWithPotential& qp, bool provenance);
};

struct ModelOptions {
  std::optional<int> ceiling;   // escalate the cap by 4 up to this value
  bool track_provenance = false;
};

/// Certified finite-dimensional model if a length d0 with no standard word
/// exists and d0 + max generator degree <= cap; Undetermined otherwise.
/// Throws std::invalid_argument if cap < 2 * (max generator degree).
JacobianModel truncated_model(const QuiverWithPotential& qp, const ModelOptions& opt = {});

AlgebraElement normal_form(const JacobianModel& model, const AlgebraElement& x);
/// nf of x together with cofactors over the generators with x - nf(x) = sum.
AlgebraElement normal_form_traced(const JacobianModel& model, const AlgebraElement& x, std::vector<Cofactor>& cofactors);

int max_basis_length(const JacobianModel& model);

/// Default cap for the A_n family.
inline int default_family_cap(int n) { return 2 * n + 8; }

// ---- verification of the family relations ----

struct RelationCheck {
  std::string name;
  std::string status;  // PASS, FAIL, SKIPPED
  int witness_degree = 0;
  std::string detail;
};

struct RelationReport {
  std::string family;
  std::vector<RelationCheck> checks;
  bool all_pass() const;  // no FAIL entries
};

/// Zero relations of the family: (a1b1)^2 a1..a_{n-1}, (a1b1) a1..a_{n-1},
/// E1^2 a1..a_{n-1} and E1^3 a1..a_{n-2}, each under its own hypotheses.
RelationReport verify_zero_relations(const FamilyParams& p, const JacobianModel& model);
RelationReport verify_zero_relations(const FamilyParams& p, int cap);

/// Membership statements relating a1..a_{i-1} X to powers of E1 (or of a1b1
/// when there are no loops) times a1..a_i.
RelationReport verify_lemma_relations(const FamilyParams& p, const JacobianModel& model);
RelationReport verify_lemma_relations(const FamilyParams& p, int cap);

/// Is nf(x) in the span of nf(s) for s in `span`?
bool in_ideal_plus_span(const JacobianModel& model, const AlgebraElement& x, const std::vector<AlgebraElement>& span);

}  // namespace qpcc
