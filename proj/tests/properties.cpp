#include "properties.hpp"

#include <random>
#include <set>

#include "qpcc/ccmap.hpp"
#include "support.hpp"

namespace qpcc::testing {

namespace {

using Rng = std::mt19937;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational small_coeff(Rng& rng) {
  int v = 0;
  while (v == 0) v = uniform(rng, -5, 5);
  return v;
}

// random walk of at most `len` arrows; trivial when len is 0
Path random_path(Rng& rng, const Quiver& q, int len) {
  int v = uniform(rng, 0, q.num_vertices() - 1);
  Path p = Path::trivial(v);
  for (int i = 0; i < len; ++i) {
    auto out = q.arrows_from(v);
    if (out.empty()) break;
    int a = out[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(out.size()) - 1))];
    if (p.is_trivial()) p = Path{};
    p.arrows.push_back(static_cast<char16_t>(a));
    v = q.arrow(a).target;
  }
  return p;
}

AlgebraElement random_element(Rng& rng, const QuiverPtr& q, int cap, int max_len, int terms) {
  AlgebraElement x(q, cap);
  for (int i = 0; i < terms; ++i) x.add_term(random_path(rng, *q, uniform(rng, 0, max_len)), small_coeff(rng));
  return x;
}

void record(PropertyResult& r, bool ok, const std::string& what) {
  ++r.instances;
  if (ok) return;
  if (r.failures++ == 0) r.first_failure = what;
}

std::vector<Path> cycles_up_to(const Quiver& q, int len) {
  std::set<Path, LeadFirst> seen;
  std::vector<Path> frontier;
  for (int a = 0; a < q.num_arrows(); ++a) frontier.push_back(Path::of({a}));
  for (int l = 1; l <= len; ++l) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      if (p.is_cycle(q)) seen.insert(cyclic_canonical(q, p));
      if (l == len) continue;
      for (int a : q.arrows_from(p.target(q))) {
        Path x = p;
        x.arrows.push_back(static_cast<char16_t>(a));
        next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// a . d_a W summed over arrows, read cyclically
Potential euler_sum(const Potential& w) {
  const QuiverPtr& q = w.quiver();
  Potential out(q, w.cap());
  for (int a = 0; a < q->num_arrows(); ++a) {
    AlgebraElement d = cyclic_derivative(a, w);
    if (d.is_zero()) continue;
    out += Potential::from_element(nc_mul(AlgebraElement::path(q, w.cap(), Path::of({a})), d));
  }
  return out;
}

std::vector<std::shared_ptr<const JacobianModel>> sample_models() {
  std::vector<std::shared_ptr<const JacobianModel>> out;
  for (const auto& id : case_ids()) out.push_back(case_model(id).model);
  out.push_back(std::make_shared<const JacobianModel>(model_of(build_wnm(generic_params(3, 1), 14))));
  return out;
}

struct Pool {
  CaseModel c;
  std::vector<Representation> mods;
};

std::vector<Pool> module_pools() {
  std::vector<Pool> out;
  for (const auto& id : case_ids()) {
    Pool p{case_model(id), {}};
    for (const auto& n : catalog_names(id)) p.mods.push_back(catalog_module(p.c, n));
    for (int v = 0; v < p.c.model->num_vertices(); ++v) p.mods.push_back(simple_module(p.c.model->quiver(), v));
    out.push_back(std::move(p));
  }
  return out;
}

std::string vec(const std::vector<int>& v) { return dims_to_string(v); }

}  // namespace

PropertyResult euler_identity(unsigned seed) {
  PropertyResult r{"Euler path identity"};
  Rng rng(seed);
  auto q = std::make_shared<const Quiver>(build_anm(3, 1));
  const int cap = 12;
  std::vector<Path> cycles = cycles_up_to(*q, 6);
  for (const auto& c : cycles) {
    Potential w(q, cap);
    w.add_cycle(c, 1);
    Potential want(q, cap);
    want.add_cycle(c, c.length());
    record(r, euler_sum(w) == want, "cycle " + path_to_string(*q, c));
  }
  for (int i = 0; i < 100; ++i) {
    Potential w(q, cap), want(q, cap);
    for (int j = uniform(rng, 1, 4); j > 0; --j) {
      const Path& c = cycles[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(cycles.size()) - 1))];
      Rational k = small_coeff(rng);
      w.add_cycle(c, k);
      want.add_cycle(c, k * Rational(c.length()));
    }
    record(r, euler_sum(w) == want, "combination " + w.to_string());
  }
  return r;
}

PropertyResult mul_associativity(unsigned seed) {
  PropertyResult r{"nc_mul associativity"};
  Rng rng(seed + 1);
  auto q = std::make_shared<const Quiver>(build_anm(3, 1));
  const int cap = 8;
  const AlgebraElement one = AlgebraElement::unit(q, cap);
  for (int i = 0; i < 150; ++i) {
    AlgebraElement x = random_element(rng, q, cap, 4, 4), y = random_element(rng, q, cap, 4, 4),
                   z = random_element(rng, q, cap, 4, 4);
    bool ok = (x * y) * z == x * (y * z) && one * x == x && x * one == x;
    record(r, ok, "x = " + x.to_string());
  }
  return r;
}

PropertyResult normal_form_idempotence(unsigned seed) {
  PropertyResult r{"normal_form idempotence"};
  Rng rng(seed + 2);
  auto models = sample_models();
  for (int i = 0; i < 150; ++i) {
    const JacobianModel& m = *models[static_cast<std::size_t>(i) % models.size()];
    AlgebraElement x = random_element(rng, m.quiver(), m.cap, m.cap / 2, 5);
    AlgebraElement y = random_element(rng, m.quiver(), m.cap, m.cap / 2, 5);
    AlgebraElement nx = normal_form(m, x), ny = normal_form(m, y);
    bool ok = normal_form(m, nx) == nx && normal_form(m, x + y) == nx + ny &&
              normal_form(m, x * y) == normal_form(m, nx * ny);
    record(r, ok, "x = " + x.to_string());
  }
  return r;
}

PropertyResult stabilization(unsigned seed) {
  PropertyResult r{"stabilization monotonicity"};
  Rng rng(seed + 3);
  int attempts = 0;
  while (r.instances < 100 && attempts++ < 1000) {
    FamilyParams p;
    p.n = uniform(rng, 1, 3);
    p.m = uniform(rng, 0, p.n);
    if ((p.n - p.m) % 2 != 0) continue;
    for (int i = 0; i < p.m; ++i) p.k.push_back(small_coeff(rng));
    for (int i = 0; i + 1 < p.n; ++i) p.t.push_back(small_coeff(rng));
    if (!check_fd_condition(p).applies()) continue;
    const int D = default_family_cap(p.n);
    auto at = [&](int cap) {
      ModelOptions o;
      o.ceiling = cap;
      return truncated_model(build_wnm(p, cap), o);
    };
    JacobianModel a = at(D);
    if (!a.finite()) continue;
    JacobianModel b = at(D + 1), c = at(D + 2);
    bool ok = b.finite() && c.finite() && b.dim == a.dim && c.dim == a.dim && b.d0 == a.d0 && c.d0 == a.d0 &&
              b.basis == a.basis && c.basis == a.basis;
    record(r, ok, p.to_string());
  }
  return r;
}

PropertyResult g_vector_additivity(unsigned seed) {
  PropertyResult r{"g-vector additivity"};
  Rng rng(seed + 4);
  auto pools = module_pools();
  for (int i = 0; i < 120; ++i) {
    const Pool& p = pools[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pools.size()) - 1))];
    const auto pick = [&] { return p.mods[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(p.mods.size()) - 1))]; };
    Representation a = pick(), b = pick();
    std::vector<int> ga = g_vector(a, *p.c.model), gb = g_vector(b, *p.c.model), gs = g_vector(direct_sum(a, b), *p.c.model);
    std::vector<int> sum(ga.size());
    for (std::size_t k = 0; k < ga.size(); ++k) sum[k] = ga[k] + gb[k];
    record(r, gs == sum, p.c.id + ": " + vec(ga) + " + " + vec(gb) + " vs " + vec(gs));
  }
  return r;
}

PropertyResult hom_from_projectives(unsigned seed) {
  PropertyResult r{"hom_dim(P_i, M) = d_i"};
  Rng rng(seed + 5);
  auto pools = module_pools();
  std::vector<std::vector<Representation>> proj;
  for (const auto& p : pools) proj.push_back(projectives(*p.c.model));
  for (int i = 0; i < 120; ++i) {
    const std::size_t w = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pools.size()) - 1));
    const Pool& p = pools[w];
    const auto pick = [&] { return p.mods[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(p.mods.size()) - 1))]; };
    Representation m = uniform(rng, 0, 1) ? pick() : direct_sum(pick(), pick());
    bool ok = true;
    for (int v = 0; v < p.c.model->num_vertices(); ++v)
      ok = ok && hom_dim(proj[w][static_cast<std::size_t>(v)], m) == m.dim(v);
    record(r, ok, p.c.id + " dims " + vec(m.dims));
  }
  return r;
}

std::vector<std::function<PropertyResult(unsigned)>> all_properties() {
  return {euler_identity, mul_associativity, normal_form_idempotence, stabilization, g_vector_additivity,
          hom_from_projectives};
}

}  // namespace qpcc::testing
