#include "doctest.h"
#include "qpcc/laurent.hpp"
#include "qpcc/qp_format.hpp"
#include "support.hpp"

using namespace qpcc;
using qpcc::testing::word;

TEST_CASE("paths concatenate left to right") {
  Quiver q = build_anm(3, 0);
  Path a1 = word(q, {"a1"}), a2 = word(q, {"a2"}), b1 = word(q, {"b1"});
  auto p = concat(q, a1, a2);
  REQUIRE(p);
  CHECK(path_to_string(q, *p) == "a1 a2");
  CHECK(p->source(q) == 0);
  CHECK(p->target(q) == 2);
  CHECK_FALSE(concat(q, a2, a1));
  CHECK(concat(q, Path::trivial(0), a1) == a1);
  CHECK(path_to_string(q, Path::trivial(1)) == "e2");
  CHECK(concat(q, a1, b1)->is_cycle(q));
}

TEST_CASE("leading order: shorter first, then larger word") {
  Quiver q = build_anm(2, 0);
  LeadFirst lf;
  Path a = word(q, {"a1"}), ab = word(q, {"a1", "b1"}), ba = word(q, {"b1", "a1"});
  CHECK(lf(a, ab));
  CHECK(lf(ba, ab));  // b1 has the larger id
  CHECK(lf(Path::trivial(0), Path::trivial(1)));
  CHECK_FALSE(lf(ab, ab));
}

TEST_CASE("cyclic canonical rotation") {
  Quiver q = build_anm(2, 0);
  CHECK(cyclic_canonical(q, word(q, {"b1", "a1"})) == word(q, {"a1", "b1"}));
  CHECK(cyclic_canonical(q, word(q, {"a1", "b1", "a1", "b1"})) == word(q, {"a1", "b1", "a1", "b1"}));
}

TEST_CASE("nc_mul truncates and respects the idempotents") {
  auto q = std::make_shared<Quiver>(build_anm(2, 0));
  AlgebraElement a = AlgebraElement::arrow(q, 3, "a1"), b = AlgebraElement::arrow(q, 3, "b1");
  AlgebraElement ab = a * b;
  CHECK(ab.coeff(word(*q, {"a1", "b1"})) == 1);
  CHECK((a * a).is_zero());
  CHECK((ab * ab).is_zero());  // length 4 > cap 3
  CHECK(AlgebraElement::idempotent(q, 3, 0) * a == a);
  CHECK((AlgebraElement::idempotent(q, 3, 1) * a).is_zero());
  CHECK(AlgebraElement::unit(q, 3) * (a + b) == a + b);
}

TEST_CASE("cyclic derivative sums over occurrences") {
  auto q = std::make_shared<Quiver>(build_anm(2, 0));
  Potential w(q, 12);
  w.add_cycle(word(*q, {"a1", "b1", "a1", "b1", "a1", "b1"}), 1);
  AlgebraElement d = cyclic_derivative(q->arrow_id("a1"), w);
  // three occurrences, each leaving b1 a1 b1 a1 b1
  CHECK(d.size() == 1);
  CHECK(d.coeff(word(*q, {"b1", "a1", "b1", "a1", "b1"})) == 3);
}

TEST_CASE("potential stores canonical rotations") {
  auto q = std::make_shared<Quiver>(build_anm(2, 0));
  Potential w(q, 8);
  w.add_cycle(word(*q, {"b1", "a1"}), 2);
  w.add_cycle(word(*q, {"a1", "b1"}), -2);
  CHECK(w.is_zero());
  CHECK_THROWS_AS(w.add_cycle(word(*q, {"a1"}), 1), std::invalid_argument);
}

TEST_CASE("family potentials") {
  SUBCASE("A2 without loops") {
    auto qp = build_wnm(FamilyParams{2, 0, {}, {1}}, 12);
    CHECK(qp.potential.terms().size() == 1);
    CHECK(qp.potential.coeff(word(*qp.quiver, {"a1", "b1", "a1", "b1", "a1", "b1"})) == 1);
  }
  SUBCASE("A3 without loops") {
    auto qp = build_wnm(FamilyParams{3, 0, {}, {1, 1}}, 14);
    const Quiver& q = *qp.quiver;
    CHECK(qp.potential.terms().size() == 3);
    CHECK(qp.potential.coeff(cyclic_canonical(q, word(q, {"a1", "a2", "b2", "b1"}))) == 3);
    CHECK(qp.potential.coeff(word(q, {"a2", "b2", "a2", "b2", "a2", "b2"})) == 1);
  }
  SUBCASE("A2 with two loops") {
    auto qp = build_wnm(FamilyParams{2, 2, {2, 1}, {1}}, 12);
    const Quiver& q = *qp.quiver;
    CHECK(qp.potential.coeff(word(q, {"E1", "E1", "E1"})) == 2);
    CHECK(qp.potential.coeff(word(q, {"E2", "E2", "E2"})) == 1);
    CHECK(qp.potential.coeff(cyclic_canonical(q, word(q, {"E1", "a1", "b1"}))) == 3);
    CHECK(qp.potential.coeff(cyclic_canonical(q, word(q, {"E2", "b1", "a1"}))) == 3);
    CHECK(qp.potential.terms().size() == 5);
    CHECK(build_a2_12_display(12).potential.terms().size() == 4);
  }
}

TEST_CASE("finite-dimensionality condition") {
  CHECK(check_fd_condition(FamilyParams{2, 2, {2, 1}, {1}}).applies());
  FdCheck bad = check_fd_condition(FamilyParams{2, 2, {1, 1}, {1}});
  CHECK_FALSE(bad.satisfied);
  CHECK(bad.i_prime == 1);
  CHECK(check_fd_condition(FamilyParams{2, 0, {}, {1}}).applies());
  CHECK_FALSE(check_fd_condition(FamilyParams{3, 0, {}, {1, 1}}).parity);
  CHECK(fd_sum(FamilyParams{2, 2, {2, 1}, {1}}, 1, 0) == -1);
}

TEST_CASE("generic parameters") {
  FamilyParams p = generic_params(2, 2);
  CHECK(p.k == std::vector<Rational>{2, 3});
  CHECK(p.t == std::vector<Rational>{5});
  FamilyParams one = generic_params(1, 1);
  CHECK(one.k == std::vector<Rational>{2});
  CHECK(one.t.empty());
  CHECK(check_fd_condition(generic_params(4, 2)).applies());
  CHECK_THROWS(FamilyParams{2, 1, {1}, {}}.validate());
}

TEST_CASE("Z3 cover quivers") {
  CoverQuiver c = build_c3_quiver(3, {1});
  CHECK(c.quiver->num_vertices() == 9);
  CHECK(c.quiver->num_arrows() == 15);
  CoverQuiver iso = build_c3_quiver(1, {});
  CHECK(iso.quiver->num_vertices() == 3);
  CHECK(iso.quiver->num_arrows() == 0);
  CoverQuiver hex = build_c3_quiver(2, {});
  CHECK(hex.quiver->num_vertices() == 6);
  CHECK(hex.quiver->num_arrows() == 6);
  for (int v = 0; v < 6; ++v) {
    CHECK(hex.quiver->arrows_from(v).size() == 1);
    CHECK(hex.quiver->arrows_into(v).size() == 1);
  }
}

TEST_CASE("QP text format") {
  const std::string text =
      "# A2 without loops\n"
      "vertices: 2\n"
      "arrow a1: 1 -> 2\n"
      "arrow b1: 2 -> 1\n"
      "term 1 a1 b1 a1 b1 a1 b1\n"
      "cap: 12\n";
  QuiverWithPotential qp = parse_qp(text);
  std::string why;
  CHECK(qp_equal_by_names(qp, build_wnm(FamilyParams{2, 0, {}, {1}}, 12), &why));
  QuiverWithPotential again = parse_qp(emit_qp(qp));
  CHECK(emit_qp(again) == emit_qp(qp));

  try {
    parse_qp("vertices: 2\narrow a1 1 -> 2\n", 12);
    FAIL("malformed arrow accepted");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_qp("vertices: 2\narrow a: 1 -> 3\n", 12), ParseError);
  CHECK_THROWS_AS(parse_qp("vertices: 2\narrow a: 1 -> 2\nterm 1 a\n", 12), ParseError);
}

TEST_CASE("Laurent monomials") {
  auto g = LaurentPoly::parse("2*x2/x1", 2);
  CHECK(g.to_string() == "2*x2/x1");
  CHECK(LaurentPoly::parse("8*x2/(x1*x3)", 3).to_string() == "8*x2/(x1*x3)");
  CHECK(LaurentPoly::monomial({1, -1}) * LaurentPoly::monomial({-1, 1}) == LaurentPoly::constant(2, 1));
  CHECK(g * LaurentPoly::parse("3*x1/x2", 2) == LaurentPoly::constant(2, 6));
  CHECK(LaurentPoly::parse("6/x1", 2).exponent() == std::vector<int>{-1, 0});
  CHECK((g - g).is_zero());
  CHECK_FALSE((g + LaurentPoly::parse("x1", 2)).is_monomial());
  CHECK_THROWS_AS(LaurentPoly::parse("x1/(x1+x2)", 2), std::invalid_argument);
}
