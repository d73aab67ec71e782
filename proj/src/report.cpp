#include "qpcc/report.hpp"

#include <iomanip>
#include <sstream>

#include "qpcc/qp_format.hpp"

namespace qpcc {

Json envelope(const std::string& kind, Json payload) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["kind"] = kind;
  for (auto& [k, v] : payload.items()) j[k] = v;
  return j;
}

Json to_json(const LaurentPoly& p) { return p.to_string(); }

Json to_json(const JacobianModel& m, bool with_basis) {
  Json j;
  j["certificate"] = m.finite() ? "Finite" : "Undetermined";
  j["cap"] = m.cap;
  if (m.finite()) j["d0"] = m.d0;
  else j["d0"] = nullptr;
  j["dim"] = m.dim;
  j["maxGeneratorDegree"] = m.max_generator_degree;
  std::vector<int> per_vertex(static_cast<std::size_t>(m.num_vertices()), 0);
  for (const auto& p : m.basis) ++per_vertex[static_cast<std::size_t>(p.source(*m.quiver()))];
  j["dimPerStartVertex"] = per_vertex;
  j["groebnerElements"] = m.engine->leading_words().size();
  if (with_basis) {
    Json b = Json::array();
    for (const auto& p : m.basis) b.push_back(path_to_string(*m.quiver(), p));
    j["basis"] = b;
  }
  return j;
}

Json to_json(const RelationReport& r) {
  Json j;
  j["family"] = r.family;
  j["allPass"] = r.all_pass();
  Json c = Json::array();
  for (const auto& x : r.checks)
    c.push_back(Json{{"name", x.name}, {"status", x.status}, {"witnessDegree", x.witness_degree}, {"detail", x.detail}});
  j["checks"] = c;
  return j;
}

Json to_json(const FdCheck& c) {
  return Json{{"satisfied", c.satisfied}, {"parity", c.parity}, {"applies", c.applies()},
              {"iPrime", c.i_prime}, {"sPrime", c.s_prime}, {"witness", c.witness}};
}

Json to_json(const QuiverWithPotential& qp) {
  const Quiver& q = *qp.quiver;
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back(Json{{"name", a.name}, {"source", a.source + 1}, {"target", a.target + 1}});
  return Json{{"vertices", q.num_vertices()}, {"arrows", arrows}, {"cap", qp.cap()}, {"potential", qp.potential.to_string()}};
}

Json to_json(const InvolutionReport& r) {
  Json m = Json::object();
  for (const auto& [a, b] : r.matching) m[a] = b;
  return Json{{"status", to_string(r.status)}, {"detail", r.detail}, {"candidatesTried", r.candidates_tried},
              {"matching", m}, {"muSquared", to_json(r.result)}};
}

Json to_json(const SplitResult& s) {
  Json pairs = Json::array();
  for (const auto& [x, y] : s.pairs)
    pairs.push_back(Json::array({s.input.quiver->arrow(x).name, s.input.quiver->arrow(y).name}));
  Json log = Json::array();
  for (const auto& l : s.log) log.push_back(Json{{"arrow", l.arrow}, {"image", l.image.to_string()}});
  return Json{{"trivial", to_json(s.trivial)}, {"reduced", to_json(s.reduced)}, {"pairs", pairs}, {"substitutions", log}};
}

Json to_json(const Representation& r) {
  const Quiver& q = *r.quiver;
  Json maps = Json::object();
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& m = r.map(a);
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
      rows.push_back(row);
    }
    maps[q.arrow(a).name] = rows;
  }
  return Json{{"dims", r.dims}, {"maps", maps}};
}

Json to_json(const GrassCount& g) {
  Json samples = Json::array();
  for (const auto& [p, n] : g.samples) samples.push_back(Json{{"q", p}, {"count", n}});
  Json poly = Json::array();
  for (const auto& c : g.poly) poly.push_back(c.to_string());
  return Json{{"e", g.e}, {"samples", samples}, {"polynomial", poly}, {"chi", g.chi.to_string()}};
}

Json to_json(const ModuleReport& m) {
  Json table = Json::array();
  for (const auto& g : m.cc.table) table.push_back(to_json(g));
  Json j{{"name", m.name}, {"dims", m.dims}, {"g", m.g}, {"tauRigid", m.tau_rigid}, {"cc", m.cc.value.to_string()},
         {"chiTotal", m.cc.chi_total.to_string()}, {"status", m.status}, {"asserted", m.asserted}, {"anchor", m.anchor}};
  j["expectedCc"] = m.expected_cc ? Json(m.expected_cc->to_string()) : Json(nullptr);
  j["expectedG"] = m.expected_g ? Json(*m.expected_g) : Json(nullptr);
  j["notes"] = m.notes;
  j["grassmannians"] = table;
  return j;
}

Json to_json(const CaseReport& r) {
  Json gens = Json::array();
  for (const auto& g : r.generator_list) gens.push_back(g.to_string());
  Json vars = Json::array();
  for (const auto& v : r.variants) {
    Json mods = Json::array();
    for (const auto& m : v.modules) mods.push_back(to_json(m));
    vars.push_back(Json{{"variant", v.variant}, {"potential", v.potential}, {"algebraDim", v.algebra_dim},
                        {"pass", v.pass}, {"modules", mods}, {"discrepancies", v.discrepancies}});
  }
  return Json{{"case", r.id}, {"pass", r.pass}, {"matchedVariants", r.matched_variants},
              {"generatorList", gens}, {"variants", vars}};
}

std::string to_text(const CaseReport& r) {
  std::ostringstream s;
  s << "case " << r.id << ": " << (r.pass ? "PASS" : "FAIL");
  if (!r.matched_variants.empty()) {
    s << " (matched:";
    for (const auto& v : r.matched_variants) s << " " << v;
    s << ")";
  }
  s << "\n";
  for (const auto& v : r.variants) {
    s << "  variant " << v.variant << "  W = " << v.potential << "  dim J = " << v.algebra_dim << "  "
      << (v.pass ? "pass" : "fail") << "\n";
    s << "    " << std::left << std::setw(11) << "module" << std::setw(10) << "dims" << std::setw(12) << "g"
      << std::setw(6) << "rigid" << std::setw(16) << "CC" << std::setw(16) << "printed" << "status\n";
    for (const auto& m : v.modules) {
      s << "    " << std::setw(11) << m.name << std::setw(10) << dims_to_string(m.dims) << std::setw(12)
        << dims_to_string(m.g) << std::setw(6) << (m.tau_rigid ? "yes" : "no") << std::setw(16)
        << m.cc.value.to_string() << std::setw(16) << (m.expected_cc ? m.expected_cc->to_string() : "-") << m.status
        << "\n";
    }
    for (const auto& d : v.discrepancies) s << "    note: " << d << "\n";
  }
  return s.str();
}

std::string to_text(const RelationReport& r) {
  std::ostringstream s;
  s << r.family << ": " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    s << "  " << std::left << std::setw(8) << c.status << c.name;
    if (!c.detail.empty()) s << "  (" << c.detail << ")";
    s << "\n";
  }
  return s.str();
}

}  // namespace qpcc
