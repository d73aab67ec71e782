#include "doctest.h"
#include "qpcc/ccmap.hpp"
#include "qpcc/report.hpp"
#include "support.hpp"

using namespace qpcc;
using namespace qpcc::testing;

namespace {

const CaseModel& a2_empty() {
  static const CaseModel c = case_model("A2-empty");
  return c;
}

const CaseModel& a2_12() {
  static const CaseModel c = case_model("A2-12");
  return c;
}

const CaseModel& a3_empty() {
  static const CaseModel c = case_model("A3-empty");
  return c;
}

}  // namespace

TEST_CASE("validation") {
  const auto& c = a2_empty();
  const auto& q = c.model->quiver();
  CHECK(rep_validate(zero_module(q), *c.model).ok);
  CHECK(rep_validate(simple_module(q, 0), *c.model).ok);
  Representation p1 = string_module(q, {0, 1, 0, 1, 0});
  CHECK(rep_validate(p1, *c.model).ok);
  CHECK(p1.dims == std::vector<int>{3, 2});
  // one step too long: (a1b1)^2 a1 must vanish
  Representation bad = string_module(q, {0, 1, 0, 1, 0, 1});
  Validation v = rep_validate(bad, *c.model);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.first_violation.empty());
}

TEST_CASE("catalog modules") {
  CHECK(catalog_module(a2_empty(), "S1").dims == std::vector<int>{1, 0});
  Representation e1 = catalog_module(a2_12(), "E1");
  CHECK(e1.dims == std::vector<int>{2, 0});
  const Quiver& q = *e1.quiver;
  CHECK(e1.map(q.arrow_id("E1"))(1, 0) == 1);
  CHECK(e1.map(q.arrow_id("E1"))(0, 1) == 0);
  CHECK(catalog_module(a3_empty(), "M_[2,1,2]").dims == std::vector<int>{2, 1, 2});
  CHECK_THROWS_AS(catalog_module(a2_empty(), "M_[9]"), std::invalid_argument);
  CHECK(catalog_names("A3-empty").size() == 11);
}

TEST_CASE("projectives") {
  auto p = projectives(*a2_empty().model);
  CHECK(p[0].dims == std::vector<int>{3, 2});
  CHECK(p[1].dims == std::vector<int>{2, 3});
  auto p12 = projectives(*a2_12().model);
  CHECK(p12[0].dims == std::vector<int>{4, 2});
  for (const auto& x : p12) CHECK(rep_validate(x, *a2_12().model).ok);

  auto triv = with_terms(plain_qp(2, {{0, 1}, {1, 0}}), {{1, {"a", "b"}}});
  JacobianModel m = truncated_model(triv);
  auto pt = projectives(m);
  CHECK(pt[0].dims == std::vector<int>{1, 0});
  CHECK(pt[1].dims == std::vector<int>{0, 1});
}

TEST_CASE("g-vectors") {
  const auto& c = a2_empty();
  CHECK(g_vector(catalog_module(c, "S1"), *c.model) == std::vector<int>{1, -1});
  CHECK(g_vector(catalog_module(c, "P2"), *c.model) == std::vector<int>{0, 1});
  const auto& c3 = a3_empty();
  CHECK(g_vector(catalog_module(c3, "M_[2,1,2]"), *c3.model) == std::vector<int>{1, -1, 1});
  Presentation pr = min_presentation(catalog_module(c, "S1"), *c.model);
  CHECK(pr.a == std::vector<int>{1, 0});
  CHECK(pr.b == std::vector<int>{0, 1});
}

TEST_CASE("tau and rigidity") {
  const auto& c = a2_empty();
  for (const auto& p : projectives(*c.model)) {
    CHECK(tau(p, *c.model).is_zero());
    CHECK(is_tau_rigid(p, *c.model));
  }
  CHECK(is_tau_rigid(catalog_module(c, "S1"), *c.model));
  Representation m121 = string_module(c.model->quiver(), {0, 1, 0});
  CHECK_FALSE(is_tau_rigid(m121, *c.model));

  Representation s1 = catalog_module(c, "S1"), s2 = catalog_module(c, "S2");
  Representation t1 = tau(s1, *c.model), t2 = tau(s2, *c.model), t12 = tau(direct_sum(s1, s2), *c.model);
  CHECK(t12.total_dim() == t1.total_dim() + t2.total_dim());
  // Hom(S1, S1) is the field, Hom(S1, S2) = 0
  CHECK(hom_dim(s1, s1) == 1);
  CHECK(hom_dim(s1, s2) == 0);
}

TEST_CASE("submodule counts") {
  const auto& c = a2_empty();
  Representation s1 = catalog_module(c, "S1");
  auto cs = submodule_counts(s1, 5);
  CHECK(cs.size() == 2);
  CHECK(cs.at({0, 0}) == 1);
  CHECK(cs.at({1, 0}) == 1);

  Representation p1 = catalog_module(c, "P1");
  for (std::uint32_t q : {2u, 3u, 5u}) {
    auto cp = submodule_counts(p1, q);
    CHECK(cp.size() == 6);
    for (const auto& e : std::vector<DimVector>{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}) CHECK(cp.at(e) == 1);
  }
  auto cz = submodule_counts(zero_module(c.model->quiver()), 7);
  CHECK(cz.size() == 1);
  CHECK(cz.at({0, 0}) == 1);

  // S1 + S1: the lines of a plane
  auto c2 = submodule_counts(direct_sum(s1, s1), 7);
  CHECK(c2.at({1, 0}) == 8);
  CHECK_THROWS(submodule_counts(direct_sum(s1, s1), 7, 1));
}

TEST_CASE("Grassmannian Euler characteristics") {
  const auto& c = a2_empty();
  Representation s1 = catalog_module(c, "S1"), p1 = catalog_module(c, "P1");
  CHECK(gr_euler(s1, {1, 0}) == 1);
  CHECK(gr_euler(p1, {0, 0}) == 1);
  CHECK(gr_euler(p1, {1, 1}) == 1);
  // the projective line
  CHECK(gr_euler(direct_sum(s1, s1), {1, 0}) == 2);
  auto table = grassmannian_table(direct_sum(s1, s1));
  bool found = false;
  for (const auto& g : table)
    if (g.e == DimVector{1, 0}) {
      found = true;
      CHECK(g.poly == std::vector<Rational>{1, 1});
    }
  CHECK(found);
  CHECK(grass_degree_bound({2, 0}) == 1);
  CHECK(grass_degree_bound({3, 2}) == 3);
}

TEST_CASE("CC values") {
  const auto& c = a2_empty();
  CHECK(cc(catalog_module(c, "S1"), *c.model) == LaurentPoly::parse("2*x2/x1", 2));
  CHECK(cc(zero_module(c.model->quiver()), *c.model) == LaurentPoly::constant(2, 1));
  const auto& d = a2_12();
  CHECK(cc(catalog_module(d, "P1"), *d.model) == LaurentPoly::parse("9/x1", 2));
}

TEST_CASE("case reports") {
  CaseReport r = verify_case("A2-empty");
  CHECK(r.pass);
  Json j = envelope("verify", to_json(r));
  CHECK(j["schemaVersion"] == 1);
  CHECK(j["case"] == "A2-empty");
  CHECK(j["variants"][0]["modules"].size() == 4);
  CHECK(to_text(r).find("MATCH") != std::string::npos);
}
