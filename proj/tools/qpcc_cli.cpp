// qpcc: command-line front end.
// Exit status: 0 all checks pass, 1 domain error or failed check, 2 usage error.

#include <cstdlib>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qpcc/ccmap.hpp"
#include "qpcc/mutation.hpp"
#include "qpcc/qp_format.hpp"
#include "qpcc/report.hpp"

using namespace qpcc;

namespace {

struct Config {
  std::optional<int> cap;
  std::optional<int> ceiling;
  std::vector<std::uint32_t> primes;
  int max_dim = 14;
  std::string format = "text";
  unsigned seed = 20240601;
};

struct Source {
  std::string qp_file;
  std::string family;  // "n,m"
  std::vector<std::string> k, t;
  std::string case_id;
  std::string variant;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw CLI::ValidationError("expected comma-separated integers: " + s);
    out.push_back(v);
  }
  return out;
}

FamilyParams family_params(const Source& src) {
  auto nm = split_ints(src.family);
  if (nm.size() != 2) throw CLI::ValidationError("--family expects n,m");
  FamilyParams p = generic_params(nm[0], nm[1]);
  if (!src.k.empty()) {
    p.k.clear();
    for (const auto& x : src.k) p.k.push_back(Rational::parse(x));
  }
  if (!src.t.empty()) {
    p.t.clear();
    for (const auto& x : src.t) p.t.push_back(Rational::parse(x));
  }
  p.validate();
  return p;
}

QuiverWithPotential load_qp(const Source& src, const Config& cfg) {
  int given = !src.qp_file.empty() + !src.family.empty() + !src.case_id.empty();
  if (given != 1) throw CLI::ValidationError("give exactly one of --qp, --family, --case");
  if (!src.qp_file.empty()) {
    auto qp = parse_qp_file(src.qp_file, cfg.cap.value_or(12));
    return cfg.cap ? qp.with_cap(*cfg.cap) : qp;
  }
  if (!src.family.empty()) {
    FamilyParams p = family_params(src);
    return build_wnm(p, cfg.cap.value_or(default_family_cap(p.n)));
  }
  CaseModel c = case_model(src.case_id, src.variant);
  return cfg.cap ? c.qp.with_cap(*cfg.cap) : c.qp;
}

ModelOptions model_options(const QuiverWithPotential& qp, const Config& cfg) {
  ModelOptions o;
  o.ceiling = cfg.ceiling.value_or(qp.cap() + 12);
  return o;
}

GrassOptions grass_options(const Config& cfg) {
  GrassOptions o;
  o.max_dim = cfg.max_dim;
  o.primes = cfg.primes;
  return o;
}

void emit(const Config& cfg, const std::string& kind, const Json& payload, const std::string& text) {
  if (cfg.format == "json") std::cout << envelope(kind, payload).dump(2) << "\n";
  else std::cout << text;
}

void add_source(CLI::App* app, Source& src, bool with_case = true) {
  app->add_option("--qp", src.qp_file, "QP text file");
  app->add_option("--family", src.family, "family n,m with generic coefficients");
  app->add_option("--k", src.k, "loop coefficients k_1..k_m")->delimiter(',');
  app->add_option("--t", src.t, "coefficients t_1..t_{n-1}")->delimiter(',');
  if (with_case) {
    app->add_option("--case", src.case_id, "case study: A2-empty, A2-12, A3-empty");
    app->add_option("--variant", src.variant, "potential variant of the case");
  }
}

// ---- commands ----

int cmd_build(const Source& src, const Config& cfg, bool cover) {
  if (src.family.empty()) throw CLI::ValidationError("build needs --family");
  FamilyParams p = family_params(src);
  const int cap = cfg.cap.value_or(default_family_cap(p.n));
  FdCheck fd = check_fd_condition(p);
  QuiverWithPotential qp = cover ? build_c3_potential(p, cap).qp : build_wnm(p, cap);
  Json j{{"params", p.to_string()}, {"fdCondition", to_json(fd)}, {"qp", to_json(qp)}};
  std::string text = emit_qp(qp);
  text = "# " + p.to_string() + (fd.applies() ? "" : "  (finiteness condition not met: " + (fd.parity ? fd.witness : std::string("n and m differ in parity")) + ")") + "\n" + text;
  emit(cfg, "build", j, text);
  return 0;
}

int cmd_jacobian(const std::string& what, const Source& src, const Config& cfg) {
  QuiverWithPotential qp = load_qp(src, cfg);
  if (what == "relations") {
    if (src.family.empty()) throw CLI::ValidationError("jacobian relations needs --family");
    FamilyParams p = family_params(src);
    JacobianModel m = truncated_model(qp, model_options(qp, cfg));
    RelationReport z = verify_zero_relations(p, m), l = verify_lemma_relations(p, m);
    emit(cfg, "relations", Json{{"model", to_json(m)}, {"zero", to_json(z)}, {"membership", to_json(l)}},
         to_text(z) + to_text(l));
    return z.all_pass() && l.all_pass() ? 0 : 1;
  }
  JacobianModel m = truncated_model(qp, model_options(qp, cfg));
  std::ostringstream t;
  t << (m.finite() ? "Finite" : "Undetermined") << " dim=" << m.dim;
  if (m.finite()) t << " d0=" << m.d0;
  t << " cap=" << m.cap << "\n";
  if (what == "basis")
    for (const auto& p : m.basis) t << "  " << path_to_string(*m.quiver(), p) << "\n";
  emit(cfg, "jacobian", to_json(m, what == "basis"), t.str());
  return m.finite() ? 0 : 1;
}

int cmd_mutate(const Source& src, const Config& cfg, const std::vector<int>& at, bool involution) {
  QuiverWithPotential qp = load_qp(src, cfg);
  if (at.empty()) throw CLI::ValidationError("mutate needs --at");
  if (involution) {
    if (at.size() != 1) throw CLI::ValidationError("--involution takes a single vertex");
    InvolutionReport r = check_involution(qp, at[0] - 1);
    std::ostringstream t;
    t << "involution at " << at[0] << ": " << to_string(r.status) << " (" << r.detail << ")\n";
    for (const auto& [a, b] : r.matching) t << "  " << a << " -> " << b << "\n";
    emit(cfg, "involution", to_json(r), t.str());
    return r.status == InvolutionStatus::Pass ? 0 : 1;
  }
  QuiverWithPotential cur = qp;
  for (int k : at) cur = mutate(cur, k - 1);
  emit(cfg, "mutation", to_json(cur), emit_qp(cur));
  return 0;
}

int cmd_split(const Source& src, const Config& cfg) {
  QuiverWithPotential qp = load_qp(src, cfg);
  SplitResult s = split_trivial_reduced(qp);
  std::ostringstream t;
  t << "# trivial part\n" << emit_qp(s.trivial) << "# reduced part\n" << emit_qp(s.reduced);
  emit(cfg, "split", to_json(s), t.str());
  return 0;
}

int cmd_quotient(const Source& src, const Config& cfg, bool dims) {
  if (src.family.empty()) throw CLI::ValidationError("quotient needs --family");
  FamilyParams p = family_params(src);
  const int cap = cfg.cap.value_or(default_family_cap(p.n));
  CoverQP c = build_c3_potential(p, cap);
  GroupAction g = z3_rotation(c.cover);
  check_admissible(c.qp, g);
  QuiverWithPotential quo = orbit_quotient(c.qp, g);
  QuiverWithPotential base = build_wnm(p, cap);
  std::string why;
  bool same = qp_equal_by_names(quo, base, &why);
  Json j{{"cover", to_json(c.qp)}, {"quotient", to_json(quo)}, {"matchesBase", same}, {"why", why}};
  std::ostringstream t;
  t << "quotient " << (same ? "equals" : "differs from") << " the base QP" << (same ? "" : ": " + why) << "\n";
  bool ok = same;
  if (dims) {
    ModelOptions o;
    o.ceiling = cfg.ceiling.value_or(cap + 12);
    JacobianModel mc = truncated_model(c.qp, o), mb = truncated_model(base, o);
    j["coverDim"] = mc.dim;
    j["baseDim"] = mb.dim;
    j["coverFinite"] = mc.finite();
    j["baseFinite"] = mb.finite();
    t << "dim J(cover) = " << mc.dim << ", dim J(base) = " << mb.dim << "\n";
    ok = ok && mc.finite() && mb.finite() && mc.dim == 3 * mb.dim;
  }
  emit(cfg, "quotient", j, t.str());
  return ok ? 0 : 1;
}

int cmd_module(const std::string& what, const Source& src, const std::string& name, const Config& cfg) {
  if (src.case_id.empty() || name.empty()) throw CLI::ValidationError("module needs --case and --name");
  CaseModel c = case_model(src.case_id, src.variant);
  Representation m = catalog_module(c, name);
  std::ostringstream t;
  Json j{{"case", c.id}, {"variant", c.variant}, {"name", name}, {"module", to_json(m)}};
  t << name << " dims=" << dims_to_string(m.dims) << "\n";
  int rc = 0;
  if (what == "show") {
    for (int a = 0; a < m.quiver->num_arrows(); ++a) {
      const auto& x = m.map(a);
      if (x.size() == 0) continue;
      t << "  " << m.quiver->arrow(a).name << ":";
      for (Eigen::Index i = 0; i < x.rows(); ++i) {
        t << (i ? " |" : " ");
        for (Eigen::Index k = 0; k < x.cols(); ++k) t << " " << x(i, k);
      }
      t << "\n";
    }
  } else if (what == "check") {
    Validation v = rep_validate(m, *c.model);
    j["valid"] = v.ok;
    t << (v.ok ? "valid" : "invalid: " + v.first_violation) << "\n";
    rc = v.ok ? 0 : 1;
  } else if (what == "gvector") {
    auto g = g_vector(m, *c.model);
    j["g"] = g;
    t << "g=" << dims_to_string(g) << "\n";
  } else if (what == "tau") {
    Representation tm = tau(m, *c.model);
    j["tau"] = to_json(tm);
    t << "tau dims=" << dims_to_string(tm.dims) << "\n";
  } else if (what == "rigid") {
    bool r = is_tau_rigid(m, *c.model);
    j["tauRigid"] = r;
    t << (r ? "tau-rigid" : "not tau-rigid") << "\n";
    rc = r ? 0 : 1;
  } else {
    throw CLI::ValidationError("module action must be show, check, gvector, tau or rigid");
  }
  emit(cfg, "module", j, t.str());
  return rc;
}

int cmd_cc(const Source& src, const std::string& module, const Config& cfg) {
  if (src.case_id.empty()) throw CLI::ValidationError("cc needs --case");
  CaseModel c = case_model(src.case_id, src.variant);
  std::vector<std::string> names = module.empty() ? catalog_names(c.id) : std::vector<std::string>{module};
  Json arr = Json::array();
  std::ostringstream t;
  for (const auto& n : names) {
    Representation m = catalog_module(c, n);
    CCValue v = cc_detail(m, *c.model, grass_options(cfg));
    Json table = Json::array();
    for (const auto& g : v.table) table.push_back(to_json(g));
    arr.push_back(Json{{"name", n}, {"g", v.g}, {"cc", v.value.to_string()}, {"grassmannians", table}});
    t << "CC(" << n << ") = " << v.value.to_string() << "\n";
  }
  emit(cfg, "cc", Json{{"case", c.id}, {"variant", c.variant}, {"values", arr}}, t.str());
  return 0;
}

int cmd_verify(const std::string& id, const Config& cfg) {
  CaseReport r = verify_case(id, grass_options(cfg));
  emit(cfg, "verify", to_json(r), to_text(r));
  return r.pass ? 0 : 1;
}

struct Task {
  std::string name;
  bool pass;
  std::string text;
  Json json;
};

int cmd_selftest(const Config& cfg) {
  std::vector<std::future<Task>> jobs;
  auto launch = [&](auto f) { jobs.push_back(std::async(std::launch::async, f)); };

  launch([] {
    Task t{"relations", true, "", Json::array()};
    for (int n = 1; n <= 5; ++n)
      for (int m = n % 2; m <= n; m += 2) {
        FamilyParams p = generic_params(n, m);
        QuiverWithPotential qp = build_wnm(p, default_family_cap(n));
        ModelOptions o;
        o.ceiling = qp.cap() + 12;
        JacobianModel model = truncated_model(qp, o);
        RelationReport z = verify_zero_relations(p, model), l = verify_lemma_relations(p, model);
        bool ok = model.finite() && z.all_pass() && l.all_pass();
        t.pass = t.pass && ok;
        t.text += to_text(z) + to_text(l);
        t.json.push_back(Json{{"zero", to_json(z)}, {"membership", to_json(l)}, {"finite", model.finite()}});
      }
    return t;
  });
  launch([] {
    Task t{"involution", true, "", Json::array()};
    auto line = [](int n, std::vector<std::pair<int, int>> arrows) {
      auto q = std::make_shared<Quiver>(n);
      int i = 0;
      for (auto [s, e] : arrows) q->add_arrow(std::string(1, static_cast<char>('a' + i++)), s, e);
      return QuiverWithPotential(q, 12);
    };
    std::vector<std::pair<QuiverWithPotential, int>> golden{{line(2, {{0, 1}}), 0}, {line(3, {{0, 1}, {1, 2}}), 1}};
    for (int o = 0; o < 4; ++o) {
      std::pair<int, int> x = (o & 1) ? std::pair{1, 0} : std::pair{0, 1};
      std::pair<int, int> y = (o & 2) ? std::pair{2, 1} : std::pair{1, 2};
      for (int k = 0; k < 3; ++k) golden.emplace_back(line(3, {x, y}), k);
    }
    for (const auto& [qp, k] : golden) {
      InvolutionReport r = check_involution(qp, k);
      t.pass = t.pass && r.status == InvolutionStatus::Pass;
      t.text += "  involution at " + std::to_string(k + 1) + ": " + to_string(r.status) + "\n";
      t.json.push_back(to_json(r));
    }
    return t;
  });
  launch([] {
    Task t{"covers", true, "", Json::array()};
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 0}, {2, 2}, {3, 1}, {3, 3}}) {
      FamilyParams p = generic_params(n, m);
      const int cap = default_family_cap(n);
      CoverQP c = build_c3_potential(p, cap);
      GroupAction g = z3_rotation(c.cover);
      check_admissible(c.qp, g);
      bool same = qp_equal_by_names(orbit_quotient(c.qp, g), build_wnm(p, cap));
      Json j{{"n", n}, {"m", m}, {"quotientMatches", same}};
      bool ok = same;
      if (n == 2) {
        ModelOptions o;
        o.ceiling = cap + 12;
        JacobianModel mc = truncated_model(c.qp, o), mb = truncated_model(build_wnm(p, cap), o);
        ok = ok && mc.finite() && mb.finite() && mc.dim == 3 * mb.dim;
        j["coverDim"] = mc.dim;
        j["baseDim"] = mb.dim;
      }
      t.pass = t.pass && ok;
      t.text += "  cover (" + std::to_string(n) + "," + std::to_string(m) + "): " + (ok ? "ok" : "FAILED") + "\n";
      t.json.push_back(j);
    }
    return t;
  });
  GrassOptions go = grass_options(cfg);
  for (const auto& id : case_ids())
    launch([id, go] {
      CaseReport r = verify_case(id, go);
      return Task{"verify " + id, r.pass, to_text(r), to_json(r)};
    });

  bool all = true;
  Json out = Json::object();
  std::ostringstream text;
  for (auto& f : jobs) {
    Task t = f.get();
    all = all && t.pass;
    text << "[" << (t.pass ? "PASS" : "FAIL") << "] " << t.name << "\n" << t.text;
    out[t.name] = Json{{"pass", t.pass}, {"detail", t.json}};
  }
  out["pass"] = all;
  emit(cfg, "selftest", out, text.str());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qpcc: quivers with potentials, Jacobian algebras and CC values"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--cap", cfg.cap, "degree cap")->envname("QPCC_CAP")->check(CLI::Range(6, 1000));
  app.add_option("--ceiling", cfg.ceiling, "cap ceiling for escalation")->envname("QPCC_CEILING");
  app.add_option("--primes", cfg.primes, "sampling primes for point counts")->delimiter(',')->envname("QPCC_PRIMES");
  app.add_option("--max-dim", cfg.max_dim, "submodule enumeration bound")->envname("QPCC_MAX_DIM")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json or text")->envname("QPCC_FORMAT")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", cfg.seed, "random seed")->envname("QPCC_SEED");

  Source src;
  bool cover = false, involution = false, dims = false;
  std::vector<int> at;
  std::string action, name, module, case_id;

  auto* build = app.add_subcommand("build", "build a family QP (or its Z3 cover)");
  add_source(build, src, false);
  build->add_flag("--cover", cover, "build the Z3 cover");

  auto* jac = app.add_subcommand("jacobian", "truncated Jacobian model");
  jac->add_option("action", action, "dim | basis | relations")->required()->check(CLI::IsMember({"dim", "basis", "relations"}));
  add_source(jac, src);

  auto* mut = app.add_subcommand("mutate", "mutate at vertices (1-based)");
  add_source(mut, src);
  mut->add_option("--at", at, "vertex or comma-separated sequence")->delimiter(',')->required();
  mut->add_flag("--involution", involution, "check mu_k^2 against the input");

  auto* spl = app.add_subcommand("split", "split into trivial and reduced parts");
  add_source(spl, src);

  auto* quo = app.add_subcommand("quotient", "Z3 cover and its orbit quotient");
  add_source(quo, src, false);
  quo->add_flag("--dims", dims, "compare Jacobian dimensions");

  auto* mod = app.add_subcommand("module", "catalog modules");
  mod->add_option("action", action, "show | check | gvector | tau | rigid")->required();
  add_source(mod, src);
  mod->add_option("--name", name, "module name")->required();

  auto* ccc = app.add_subcommand("cc", "CC values of catalog modules");
  add_source(ccc, src);
  ccc->add_option("--module", module, "single module");

  auto* ver = app.add_subcommand("verify", "verify a case study");
  ver->add_option("--case", case_id, "case id")->required();

  auto* self = app.add_subcommand("selftest", "run every built-in check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*build) return cmd_build(src, cfg, cover);
    if (*jac) return cmd_jacobian(action, src, cfg);
    if (*mut) return cmd_mutate(src, cfg, at, involution);
    if (*spl) return cmd_split(src, cfg);
    if (*quo) return cmd_quotient(src, cfg, dims);
    if (*mod) return cmd_module(action, src, name, cfg);
    if (*ccc) return cmd_cc(src, module, cfg);
    if (*ver) return cmd_verify(case_id, cfg);
    if (*self) return cmd_selftest(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
