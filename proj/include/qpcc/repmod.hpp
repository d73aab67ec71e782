#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpcc/jacobian.hpp"
#include "qpcc/linalg.hpp"

namespace qpcc {

/// Finite-dimensional representation: a vector space per vertex and a
/// d_t x d_s matrix per arrow. A path p acts M_{s(p)} -> M_{t(p)} by composing
/// its arrows left to right (so these are right modules over the path algebra).
template <class S>
struct BasicRepresentation {
  QuiverPtr quiver;
  std::vector<int> dims;
  std::vector<Mat<S>> maps;

  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
  int dim(int v) const { return dims.at(static_cast<std::size_t>(v)); }
  const Mat<S>& map(int a) const { return maps.at(static_cast<std::size_t>(a)); }
  bool is_zero() const { return total_dim() == 0; }
};

using Representation = BasicRepresentation<Rational>;
using RepresentationP = BasicRepresentation<ModP>;

Representation zero_module(const QuiverPtr& q);
Representation simple_module(const QuiverPtr& q, int v);
/// Uniserial module along a walk of vertices (top first); consecutive vertices
/// must be joined by exactly one arrow, which acts as the 0/1 shift.
Representation string_module(const QuiverPtr& q, const std::vector<int>& walk);
Representation direct_sum(const Representation& a, const Representation& b);
/// Throws std::domain_error if p divides a denominator.
RepresentationP reduce_mod(const Representation& r, std::uint32_t p);

/// Matrix of a path, d_t x d_s.
MatQ path_matrix(const Representation& r, const Path& p);
/// Matrix of an element whose terms share source and target.
MatQ element_matrix(const Representation& r, const AlgebraElement& x);

struct Validation {
  bool ok = true;
  std::string first_violation;  // empty when ok
};

/// Shapes, nilpotency and the vanishing of every generator of the model.
Validation rep_validate(const Representation& r, const JacobianModel& model);

/// P_i on the basis paths starting at i; arrows act by extension and normal form.
std::vector<Representation> projectives(const JacobianModel& model);

/// Submodule spanned per vertex by the columns of `basis[v]`, which must be closed.
Representation submodule(const Representation& r, const std::vector<MatQ>& basis);

struct Presentation {
  std::vector<int> a;  // multiplicity of P_i in P0
  std::vector<int> b;  // multiplicity of P_i in P1
  std::vector<int> p0_vertices;  // summands of P0 in order
  std::vector<int> p1_vertices;
  std::vector<VecQ> p0_generators;  // in M, at vertex p0_vertices[s]
  std::vector<VecQ> p1_generators;  // in P0 (concatenated summand coords), at vertex p1_vertices[l]
  Representation p0;                // the module P0
  MatQ cover;                       // P0 -> M, total_dim(M) x total_dim(P0)
};

Presentation min_presentation(const Representation& m, const JacobianModel& model);
std::vector<int> g_vector(const Representation& m, const JacobianModel& model);

/// tau M = ker(nu P1 -> nu P0) with nu the Nakayama functor.
Representation tau(const Representation& m, const JacobianModel& model);
int hom_dim(const Representation& m, const Representation& n);
bool is_tau_rigid(const Representation& m, const JacobianModel& model);

// ---- submodules over F_p and Grassmannian Euler characteristics ----

using DimVector = std::vector<int>;

/// Number of submodules of each dimension vector, by walking up the lattice
/// one simple composition factor at a time. Refuses total dimension > max_dim.
std::map<DimVector, long long> submodule_counts(const RepresentationP& r, std::uint32_t p, int max_dim = 14);
std::map<DimVector, long long> submodule_counts(const Representation& r, std::uint32_t p, int max_dim = 14);

struct GrassCount {
  DimVector e;
  std::vector<std::pair<std::uint32_t, long long>> samples;  // (q, N_q)
  std::vector<Rational> poly;                                 // coefficients, low degree first
  Rational chi;                                               // poly(1)
};

struct GrassOptions {
  int max_dim = 14;
  std::vector<std::uint32_t> primes;  // override; empty = automatic
  int check_primes = 2;
  bool parallel = true;
};

class PolynomialityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// max over e of sum e_i (d_i - e_i).
int grass_degree_bound(const DimVector& d);
/// First primes >= 5 not dividing any denominator of r.
std::vector<std::uint32_t> sampling_primes(const Representation& r, int count);

/// Counts at every sampling prime, interpolated per e; entries for every e
/// with a nonzero count at some prime. Throws PolynomialityError when a
/// check prime disagrees with the interpolant.
std::vector<GrassCount> grassmannian_table(const Representation& r, const GrassOptions& opt = {});
Rational gr_euler(const Representation& r, const DimVector& e, const GrassOptions& opt = {});

// ---- catalog of the case studies ----

struct CaseModel {
  std::string id;       // A2-empty, A2-12, A3-empty
  std::string variant;  // which potential was used
  QuiverWithPotential qp;
  std::shared_ptr<const JacobianModel> model;
};

std::vector<std::string> case_ids();
/// A2-12 has variants "family" (with the t1 term) and "display" (without).
std::vector<std::string> case_variants(const std::string& id);
CaseModel case_model(const std::string& id, const std::string& variant = "");
std::vector<std::string> catalog_names(const std::string& id);
/// Throws std::invalid_argument on unknown names, std::logic_error if the
/// constructed module fails validation.
Representation catalog_module(const CaseModel& c, const std::string& name);

std::string dims_to_string(const std::vector<int>& v);

}  // namespace qpcc
