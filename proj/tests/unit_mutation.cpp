#include <set>

#include "doctest.h"
#include "qpcc/mutation.hpp"
#include "support.hpp"

using namespace qpcc;
using namespace qpcc::testing;

namespace {

std::set<std::string> arrow_names(const Quiver& q) {
  std::set<std::string> s;
  for (const auto& a : q.arrows()) s.insert(a.name);
  return s;
}

bool two_acyclic(const Quiver& q) {
  for (int v = 0; v < q.num_vertices(); ++v)
    if (q.has_loop_at(v) || q.has_two_cycle_through(v)) return false;
  return true;
}

void check_split_invariants(const SplitResult& s) {
  for (const auto& [p, c] : s.trivial.potential.terms()) CHECK(p.length() == 2);
  CHECK((s.reduced.potential.is_zero() || s.reduced.potential.order() >= 3));
  CHECK(substitute(s.input.potential, s.phi) == reassembled(s));
  // unit coefficient on the arrow's own image
  const Quiver& q = *s.input.quiver;
  for (int a = 0; a < q.num_arrows(); ++a) CHECK(s.phi[static_cast<std::size_t>(a)].coeff(Path::of({a})) == 1);
  // phi_inverse undoes phi on every arrow
  ArrowMap round = compose(s.phi, s.phi_inverse);
  for (int a = 0; a < q.num_arrows(); ++a)
    CHECK(round[static_cast<std::size_t>(a)] == AlgebraElement::path(s.input.quiver, s.input.cap(), Path::of({a})));
}

}  // namespace

TEST_CASE("mutable vertices") {
  CHECK_FALSE(is_mutable(build_wnm(FamilyParams{2, 0, {}, {1}}, 12), 0));
  CHECK(is_mutable(plain_qp(3, {{0, 1}, {1, 2}}), 1));
  CHECK_FALSE(is_mutable(build_wnm(generic_params(1, 1), 10), 0));
}

TEST_CASE("premutation of the linear A3 quiver at its middle vertex") {
  QuiverWithPotential mu = premutate(plain_qp(3, {{0, 1}, {1, 2}}), 1);
  const Quiver& q = *mu.quiver;
  CHECK(arrow_names(q) == std::set<std::string>{"a*", "b*", "[a,b]"});
  const Arrow& c = q.arrow(q.arrow_id("[a,b]"));
  CHECK(c.source == 0);
  CHECK(c.target == 2);
  REQUIRE(mu.potential.terms().size() == 1);
  CHECK(mu.potential.coeff(cyclic_canonical(q, word(q, {"b*", "a*", "[a,b]"}))) == 1);
  CHECK(two_acyclic(q));
}

TEST_CASE("premutation at an isolated vertex changes nothing") {
  auto qp = with_terms(plain_qp(4, {{0, 1}, {1, 2}, {2, 0}}), {{2, {"a", "b", "c"}}});
  QuiverWithPotential mu = premutate(qp, 3);
  std::string why;
  CHECK(qp_equal_by_names(mu, qp, &why));
}

TEST_CASE("arrow count after premutation") {
  auto qp = plain_qp(4, {{0, 1}, {2, 1}, {1, 3}, {1, 3}, {0, 2}});
  QuiverWithPotential mu = premutate(qp, 1);
  // 1 untouched, 4 reversed, 2 x 2 composites
  CHECK(mu.quiver->num_arrows() == 1 + 4 + 4);
  CHECK(mu.quiver->num_vertices() == 4);
}

TEST_CASE("non-mutable and out-of-range vertices are refused") {
  auto loop = build_wnm(generic_params(1, 1), 10);
  CHECK_THROWS_AS(premutate(loop, 0), std::domain_error);
  CHECK_THROWS_AS(mutate(loop, 0), std::domain_error);
  CHECK_THROWS_AS(premutate(plain_qp(2, {{0, 1}}), 2), std::out_of_range);
}

TEST_CASE("split of a single quadratic 2-cycle") {
  auto qp = with_terms(plain_qp(2, {{0, 1}, {1, 0}}), {{1, {"a", "b"}}});
  SplitResult s = split_trivial_reduced(qp);
  CHECK(s.trivial.quiver->num_arrows() == 2);
  CHECK(s.reduced.quiver->num_arrows() == 0);
  CHECK(s.reduced.potential.is_zero());
  CHECK(s.trivial.potential.coeff(word(*s.trivial.quiver, {"a", "b"})) == 1);
  JacobianModel m = truncated_model(s.trivial);
  REQUIRE(m.finite());
  CHECK(m.dim == 2);
  check_split_invariants(s);
}

TEST_CASE("split leaves cubic potentials alone") {
  auto qp = with_terms(plain_qp(3, {{0, 1}, {1, 2}, {2, 0}}), {{1, {"a", "b", "c"}}});
  SplitResult s = split_trivial_reduced(qp);
  CHECK(s.trivial.quiver->num_arrows() == 0);
  CHECK(s.pairs.empty());
  std::string why;
  CHECK(qp_equal_by_names(s.reduced, qp, &why));
  check_split_invariants(s);
}

TEST_CASE("split clears higher terms through a 2-cycle") {
  // a,c: 1->2 and b,d: 2->1; W = ab + 2 cd + a d c b + c b a d + (cd)^2
  auto qp = with_terms(plain_qp(2, {{0, 1}, {1, 0}, {0, 1}, {1, 0}}, 10),
                       {{1, {"a", "b"}}, {2, {"c", "d"}}, {1, {"a", "d", "c", "b"}}, {1, {"c", "b", "a", "d"}},
                        {1, {"c", "d", "c", "d"}}});
  SplitResult s = split_trivial_reduced(qp);
  CHECK(s.pairs.size() == 2);
  CHECK(s.reduced.quiver->num_arrows() == 0);
  check_split_invariants(s);
}

TEST_CASE("split refuses linear and loop-quadratic terms") {
  auto loop = with_terms(plain_qp(1, {{0, 0}}), {{1, {"a", "a"}}});
  CHECK_THROWS_AS(split_trivial_reduced(loop), std::domain_error);
}

TEST_CASE("premutating twice at a source") {
  auto qp = plain_qp(2, {{0, 1}});
  QuiverWithPotential twice = premutate(premutate(qp, 0), 0);
  CHECK(twice.quiver->num_arrows() == 1);  // a** only: no composites through a source or sink
  CHECK(twice.potential.is_zero());
  SplitResult s = split_trivial_reduced(twice);
  std::vector<int> map;
  std::size_t tried = 0;
  bool bailed = false;
  CHECK(find_qp_isomorphism(s.reduced, qp, map, tried, bailed));
}

TEST_CASE("premutating twice through a middle vertex creates 2-cycles that split away") {
  auto qp = plain_qp(3, {{0, 1}, {1, 2}});
  QuiverWithPotential twice = premutate(premutate(qp, 1), 1);
  bool has_two_cycle = false;
  for (int v = 0; v < 3; ++v) has_two_cycle = has_two_cycle || twice.quiver->has_two_cycle_through(v);
  CHECK(has_two_cycle);
  CHECK(twice.potential.order() == 2);
  SplitResult s = split_trivial_reduced(twice);
  check_split_invariants(s);
  std::vector<int> map;
  std::size_t tried = 0;
  bool bailed = false;
  CHECK(find_qp_isomorphism(s.reduced, qp, map, tried, bailed));
}

TEST_CASE("mutation of the linear A3 quiver") {
  QuiverWithPotential mu = mutate(plain_qp(3, {{0, 1}, {1, 2}}), 1);
  CHECK(mu.quiver->num_arrows() == 3);
  CHECK(mu.potential.terms().size() == 1);
  CHECK(mu.potential.order() == 3);
  CHECK(two_acyclic(*mu.quiver));
}

TEST_CASE("involution on the small golden set") {
  CHECK(check_involution(plain_qp(2, {{0, 1}}), 0).status == InvolutionStatus::Pass);
  CHECK(check_involution(plain_qp(3, {{0, 1}, {1, 2}}), 1).status == InvolutionStatus::Pass);
  InvolutionReport r = check_involution(plain_qp(3, {{1, 0}, {1, 2}}), 1);
  CHECK(r.status == InvolutionStatus::Pass);
  CHECK(r.matching.size() == 2);
}

TEST_CASE("involution on the oriented 3-cycle with cubic potential") {
  auto qp = with_terms(plain_qp(3, {{0, 1}, {1, 2}, {2, 0}}), {{1, {"a", "b", "c"}}});
  InvolutionReport r = check_involution(qp, 0);
  CHECK(r.status == InvolutionStatus::Pass);
}

TEST_CASE("mutating the hexagon cover gives a 2-acyclic QP") {
  CoverQP c = build_c3_potential(FamilyParams{2, 0, {}, {1}}, 12);
  QuiverWithPotential mu = mutate(c.qp, 0);
  CHECK(two_acyclic(*mu.quiver));
  CHECK(mu.quiver->num_vertices() == 6);
}

TEST_CASE("direct sums of QPs") {
  auto qp = with_terms(plain_qp(2, {{0, 1}, {1, 0}}), {{1, {"a", "b"}}});
  QuiverWithPotential empty(std::make_shared<Quiver>(2), qp.cap());
  QuiverWithPotential s = direct_sum(qp, empty);
  CHECK(s.quiver->num_arrows() == 2);
  CHECK(s.potential.terms().size() == 1);

  auto oq = std::make_shared<Quiver>(2);
  oq->add_arrow("c", 0, 1);
  oq->add_arrow("d", 1, 0);
  auto other = with_terms(QuiverWithPotential(oq, qp.cap()), {{3, {"c", "d"}}});
  CHECK_THROWS_AS(direct_sum(qp, qp), std::invalid_argument);
  QuiverWithPotential both = direct_sum(qp, other);
  CHECK(both.quiver->num_arrows() == 4);
  CHECK(both.potential.terms().size() == 2);
  JacobianModel m = truncated_model(both);
  REQUIRE(m.finite());
  CHECK(m.dim == 2);
}
