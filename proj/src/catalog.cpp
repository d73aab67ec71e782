#include <algorithm>
#include <stdexcept>

#include "qpcc/repmod.hpp"

namespace qpcc {

std::vector<std::string> case_ids() { return {"A2-empty", "A2-12", "A3-empty"}; }

std::vector<std::string> case_variants(const std::string& id) {
  if (id == "A2-12") return {"display", "family"};
  if (id == "A2-empty" || id == "A3-empty") return {"family"};
  throw std::invalid_argument("unknown case: " + id);
}

CaseModel case_model(const std::string& id, const std::string& variant) {
  auto vars = case_variants(id);
  const std::string v = variant.empty() ? vars.front() : variant;
  if (std::find(vars.begin(), vars.end(), v) == vars.end())
    throw std::invalid_argument("case " + id + " has no variant " + v);
  CaseModel c{id, v, QuiverWithPotential(std::make_shared<Quiver>(), 0), nullptr};
  if (id == "A2-empty") {
    c.qp = build_wnm(FamilyParams{2, 0, {}, {1}}, default_family_cap(2));
  } else if (id == "A2-12") {
    const int cap = default_family_cap(2);
    c.qp = v == "display" ? build_a2_12_display(cap) : build_wnm(FamilyParams{2, 2, {2, 1}, {1}}, cap);
  } else {
    c.qp = build_wnm(FamilyParams{3, 0, {}, {1, 1}}, default_family_cap(3));
  }
  ModelOptions opt;
  opt.ceiling = c.qp.cap() + 12;
  c.model = std::make_shared<const JacobianModel>(truncated_model(c.qp, opt));
  if (!c.model->finite()) throw std::logic_error("case " + id + ": model not certified finite");
  return c;
}

std::vector<std::string> catalog_names(const std::string& id) {
  if (id == "A2-empty") return {"S1", "S2", "P1", "P2"};
  if (id == "A2-12") return {"E1", "E2", "P1", "P2"};
  if (id == "A3-empty")
    return {"S1", "S2", "S3", "M_[0,3,2]", "M_[2,3,0]", "M_[3,2,0]", "M_[0,2,3]", "M_[2,1,2]", "P1", "P2", "P3"};
  throw std::invalid_argument("unknown case: " + id);
}

namespace {

Representation build(const CaseModel& c, const std::string& name) {
  const QuiverPtr& q = c.model->quiver();
  const int n = q->num_vertices();
  if (name.size() == 2 && name[0] == 'S' && name[1] >= '1' && name[1] < '1' + n) return simple_module(q, name[1] - '1');
  if (name.size() == 2 && name[0] == 'P' && name[1] >= '1' && name[1] < '1' + n)
    return projectives(*c.model)[static_cast<std::size_t>(name[1] - '1')];
  if (c.id == "A2-12" && name.size() == 2 && name[0] == 'E' && (name[1] == '1' || name[1] == '2')) {
    const int v = name[1] - '1';
    Representation r = zero_module(q);
    r.dims[static_cast<std::size_t>(v)] = 2;
    for (int a = 0; a < q->num_arrows(); ++a)
      r.maps[static_cast<std::size_t>(a)] = MatQ::Zero(r.dim(q->arrow(a).target), r.dim(q->arrow(a).source));
    r.maps[static_cast<std::size_t>(q->arrow_id(name))](1, 0) = 1;
    return r;
  }
  if (c.id == "A3-empty") {
    // strings, top first, 0-based vertices
    if (name == "M_[0,3,2]") return string_module(q, {1, 2, 1, 2, 1});
    if (name == "M_[2,3,0]") return string_module(q, {1, 0, 1, 0, 1});
    if (name == "M_[3,2,0]") return string_module(q, {0, 1, 0, 1, 0});
    if (name == "M_[0,2,3]") return string_module(q, {2, 1, 2, 1, 2});
    if (name == "M_[2,1,2]") {
      // tops x in M_1 and y in M_3 meet in z in M_2, which feeds both socles
      Representation r = zero_module(q);
      r.dims = {2, 1, 2};
      for (int a = 0; a < q->num_arrows(); ++a)
        r.maps[static_cast<std::size_t>(a)] = MatQ::Zero(r.dim(q->arrow(a).target), r.dim(q->arrow(a).source));
      r.maps[static_cast<std::size_t>(q->arrow_id("a1"))](0, 0) = 1;
      r.maps[static_cast<std::size_t>(q->arrow_id("b2"))](0, 0) = 1;
      r.maps[static_cast<std::size_t>(q->arrow_id("b1"))](1, 0) = 1;
      r.maps[static_cast<std::size_t>(q->arrow_id("a2"))](1, 0) = 1;
      return r;
    }
  }
  throw std::invalid_argument("case " + c.id + " has no module named " + name);
}

}  // namespace

Representation catalog_module(const CaseModel& c, const std::string& name) {
  Representation r = build(c, name);
  Validation v = rep_validate(r, *c.model);
  if (!v.ok) throw std::logic_error("catalog module " + name + " is not a module: " + v.first_violation);
  return r;
}

}  // namespace qpcc
