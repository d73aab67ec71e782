#include "qpcc/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qpcc {

void FamilyParams::validate() const {
  if (n < 1) throw std::invalid_argument("family needs n >= 1");
  if (m < 0 || m > n) throw std::invalid_argument("family needs 0 <= m <= n");
  if (static_cast<int>(k.size()) != m) throw std::invalid_argument("family needs exactly m loop coefficients k");
  if (static_cast<int>(t.size()) != n - 1) throw std::invalid_argument("family needs exactly n-1 coefficients t");
}

std::string FamilyParams::to_string() const {
  std::ostringstream s;
  s << "n=" << n << " m=" << m << " k=(";
  for (std::size_t i = 0; i < k.size(); ++i) s << (i ? "," : "") << k[i];
  s << ") t=(";
  for (std::size_t i = 0; i < t.size(); ++i) s << (i ? "," : "") << t[i];
  s << ")";
  return s.str();
}

Quiver build_anm_loops(int n, const std::set<int>& loops) {
  if (n < 1) throw std::invalid_argument("build_anm: n must be >= 1");
  for (int i : loops)
    if (i < 1 || i > n) throw std::invalid_argument("build_anm: loop index out of range");
  Quiver q(n);
  for (int i = 1; i < n; ++i) q.add_arrow("a" + std::to_string(i), i - 1, i);
  for (int i = 1; i < n; ++i) q.add_arrow("b" + std::to_string(i), i, i - 1);
  for (int i : loops) q.add_arrow("E" + std::to_string(i), i - 1, i - 1);
  return q;
}

Quiver build_anm(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("build_anm: need 0 <= m <= n");
  std::set<int> loops;
  for (int i = 1; i <= m; ++i) loops.insert(i);
  return build_anm_loops(n, loops);
}

namespace {

// Adds c * (named arrows) when every name exists; silently drops otherwise.
void add_named(Potential& w, const Quiver& q, const std::vector<std::string>& names, const Rational& c) {
  Path p;
  for (const auto& nm : names) {
    auto id = q.find_arrow(nm);
    if (!id) return;
    p.arrows.push_back(static_cast<char16_t>(*id));
  }
  w.add_cycle(p, c);
}

std::string nm(const char* s, int i) { return s + std::to_string(i); }

}  // namespace

QuiverWithPotential build_wnm(const FamilyParams& p, int cap) {
  p.validate();
  auto q = std::make_shared<Quiver>(build_anm(p.n, p.m));
  Potential w(q, cap);
  for (int i = 1; i <= p.m; ++i) add_named(w, *q, {nm("E", i), nm("E", i), nm("E", i)}, p.k[static_cast<std::size_t>(i - 1)]);
  for (int i = 1; i <= p.n - 1; ++i) {
    auto a = nm("a", i), b = nm("b", i);
    add_named(w, *q, {a, b, a, b, a, b}, p.t[static_cast<std::size_t>(i - 1)]);
  }
  for (int i = 1; i <= p.m; ++i) add_named(w, *q, {nm("E", i), nm("a", i), nm("b", i)}, 3);
  for (int i = 2; i <= p.m; ++i) add_named(w, *q, {nm("E", i), nm("b", i - 1), nm("a", i - 1)}, 3);
  for (int i = std::max(p.m, 1); i <= p.n - 2; ++i)
    add_named(w, *q, {nm("a", i), nm("a", i + 1), nm("b", i + 1), nm("b", i)}, 3);
  return QuiverWithPotential(q, std::move(w));
}

QuiverWithPotential build_a2_12_display(int cap) {
  auto q = std::make_shared<Quiver>(build_anm(2, 2));
  Potential w(q, cap);
  add_named(w, *q, {"E1", "E1", "E1"}, 2);
  add_named(w, *q, {"E1", "a1", "b1"}, 3);
  add_named(w, *q, {"E2", "b1", "a1"}, 3);
  add_named(w, *q, {"E2", "E2", "E2"}, 1);
  return QuiverWithPotential(q, std::move(w));
}

Rational fd_sum(const FamilyParams& p, int i_prime, int s_prime) {
  Rational s = 0;
  for (int i = i_prime; i <= p.m; ++i) {
    const Rational& k = p.k[static_cast<std::size_t>(i - 1)];
    s += (i % 2 == 0) ? k : -k;
  }
  for (int j = 1; j <= s_prime; ++j) {
    int idx = p.m + 2 * j - 1;
    if (idx < 1 || idx > p.n - 1) continue;
    const Rational& t = p.t[static_cast<std::size_t>(idx - 1)];
    s += (j % 2 == 0) ? t : -t;
  }
  return s;
}

FdCheck check_fd_condition(const FamilyParams& p) {
  p.validate();
  FdCheck r;
  r.parity = ((p.n - p.m) % 2) == 0;
  auto fail = [&](int ip, int sp, const Rational& v) {
    r.satisfied = false;
    r.i_prime = ip;
    r.s_prime = sp;
    r.witness = "sum at i'=" + std::to_string(ip) + ", s'=" + std::to_string(sp) + " is " + v.to_string();
  };
  if (p.m >= 1) {
    const int smax = std::max(0, (p.n - p.m - 2) / 2);
    for (int ip = 1; ip <= p.m && r.satisfied; ++ip)
      for (int sp = 0; sp <= smax && r.satisfied; ++sp) {
        Rational v = fd_sum(p, ip, sp);
        if (v.is_zero()) fail(ip, sp, v);
      }
  } else if (p.n % 2 == 0) {
    // loop-free even case: the single sum up to s = n/2
    Rational v = fd_sum(p, 1, p.n / 2);
    if (v.is_zero()) fail(0, p.n / 2, v);
  }
  return r;
}

long nth_prime(int k) {
  if (k < 1) throw std::invalid_argument("nth_prime: k >= 1");
  long c = 1;
  for (int found = 0; found < k;) {
    ++c;
    if (is_prime(static_cast<std::uint32_t>(c))) ++found;
  }
  return c;
}

FamilyParams generic_params(int n, int m) {
  if (n < 1 || m < 0 || m > n) throw std::invalid_argument("generic_params: need 0 <= m <= n, n >= 1");
  for (int shift = 0; shift <= 100; ++shift) {
    FamilyParams p;
    p.n = n;
    p.m = m;
    for (int i = 1; i <= m; ++i) p.k.emplace_back(nth_prime(i + shift));
    for (int i = 1; i <= n - 1; ++i) p.t.emplace_back(nth_prime(m + i + shift));
    if (check_fd_condition(p).satisfied) return p;
  }
  throw std::runtime_error("generic_params: no admissible coefficients after 100 shifts");
}

// ---- covers ----

namespace {

int cover_vertex(int level, int j) {  // level, j 1-based; j taken mod 3
  int jj = ((j - 1) % 3 + 3) % 3;
  return 3 * (level - 1) + jj;
}

}  // namespace

CoverQuiver build_c3_quiver(int n, const std::set<int>& loops) {
  CoverQuiver c;
  auto base = std::make_shared<Quiver>(build_anm_loops(n, loops));
  c.base = base;
  c.c_type.assign(static_cast<std::size_t>(std::max(n - 1, 0)), CycleType::One);
  c.l_type.assign(static_cast<std::size_t>(n), std::nullopt);
  auto flip = [](CycleType t) { return t == CycleType::One ? CycleType::Two : CycleType::One; };
  for (int i = 1; i <= n; ++i) {
    std::optional<CycleType> prev;
    if (i >= 2) prev = c.c_type[static_cast<std::size_t>(i - 2)];
    const bool in_loops = loops.count(i) > 0;
    if (in_loops) c.l_type[static_cast<std::size_t>(i - 1)] = prev.value_or(CycleType::One);
    if (i <= n - 1) {
      CycleType ct = CycleType::One;
      if (prev) ct = in_loops ? *prev : flip(*prev);
      c.c_type[static_cast<std::size_t>(i - 1)] = ct;
    }
  }

  auto q = std::make_shared<Quiver>(3 * n);
  for (int v = 0; v < 3 * n; ++v) c.vertex_fiber.push_back(v / 3);
  for (int x = 0; x < base->num_arrows(); ++x) {
    const Arrow& a = base->arrow(x);
    const char kind = a.name[0];
    const int i = std::stoi(a.name.substr(1));
    for (int j = 1; j <= 3; ++j) {
      int s = 0, t = 0;
      if (kind == 'E') {
        bool one = c.l_type[static_cast<std::size_t>(i - 1)] == CycleType::One;
        s = cover_vertex(i, j);
        t = cover_vertex(i, one ? j + 1 : j - 1);
      } else {
        bool one = c.c_type[static_cast<std::size_t>(i - 1)] == CycleType::One;
        if (kind == 'a') {
          s = cover_vertex(i, j);
          t = cover_vertex(i + 1, one ? j - 1 : j + 1);
        } else {
          s = cover_vertex(i + 1, one ? j - 1 : j);
          t = cover_vertex(i, one ? j - 1 : j);
        }
      }
      q->add_arrow(a.name + "_" + std::to_string(j), s, t);
      c.arrow_fiber.push_back(x);
    }
  }
  c.quiver = q;
  return c;
}

GroupAction GroupAction::identity(const Quiver& q) {
  GroupAction g;
  g.order = 1;
  for (int v = 0; v < q.num_vertices(); ++v) g.vertex_perm.push_back(v);
  for (int a = 0; a < q.num_arrows(); ++a) g.arrow_perm.push_back(a);
  return g;
}

GroupAction z3_rotation(const CoverQuiver& c) {
  GroupAction g;
  g.order = 3;
  for (int v = 0; v < c.quiver->num_vertices(); ++v) g.vertex_perm.push_back(3 * (v / 3) + (v % 3 + 1) % 3);
  for (int a = 0; a < c.quiver->num_arrows(); ++a) g.arrow_perm.push_back(3 * (a / 3) + (a % 3 + 1) % 3);
  return g;
}

namespace {

Path apply_perm(const Path& p, const std::vector<int>& arrow_perm, const std::vector<int>& vertex_perm) {
  if (p.is_trivial()) return Path::trivial(vertex_perm[static_cast<std::size_t>(p.vertex)]);
  Path r;
  for (char16_t x : p.arrows) r.arrows.push_back(static_cast<char16_t>(arrow_perm[x]));
  return r;
}

Path lift_from(const CoverQuiver& c, const Path& base_cycle, int start) {
  const Quiver& q = *c.quiver;
  Path out;
  int v = start;
  for (char16_t x : base_cycle.arrows) {
    int found = -1;
    for (int j = 0; j < 3; ++j) {
      int cand = 3 * static_cast<int>(x) + j;
      if (q.arrow(cand).source == v) { found = cand; break; }
    }
    if (found < 0) throw std::logic_error("cover has no lift of a base arrow at this vertex");
    out.arrows.push_back(static_cast<char16_t>(found));
    v = q.arrow(found).target;
  }
  if (v != start)
    throw std::logic_error("internal-consistency error: base cycle " + path_to_string(*c.base, base_cycle) +
                           " does not lift to a closed cycle in the cover");
  return out;
}

}  // namespace

CoverQP build_c3_potential(const FamilyParams& p, int cap) {
  auto base_qp = build_wnm(p, cap);
  std::set<int> loops;
  for (int i = 1; i <= p.m; ++i) loops.insert(i);
  CoverQuiver c = build_c3_quiver(p.n, loops);
  if (!(*c.base == *base_qp.quiver)) throw std::logic_error("cover base differs from family quiver");
  GroupAction g = z3_rotation(c);
  Potential w(c.quiver, cap);
  for (const auto& [cyc, lam] : base_qp.potential.terms()) {
    int start = 3 * cyc.source(*c.base);
    Path l0 = lift_from(c, cyc, start);
    std::set<Word> classes;
    Path cur = l0;
    for (int r = 0; r < 3; ++r) {
      classes.insert(cyclic_canonical(*c.quiver, cur).arrows);
      cur = apply_perm(cur, g.arrow_perm, g.vertex_perm);
    }
    Rational share = lam / Rational(static_cast<long>(classes.size()));
    for (const auto& wd : classes) w.add_cycle(Path{wd, -1}, share);
  }
  return CoverQP{c, QuiverWithPotential(c.quiver, std::move(w))};
}

bool check_admissible(const QuiverWithPotential& qp, const GroupAction& act) {
  const Quiver& q = *qp.quiver;
  const auto nv = static_cast<std::size_t>(q.num_vertices());
  const auto na = static_cast<std::size_t>(q.num_arrows());
  if (act.order < 1) throw std::invalid_argument("group order must be positive");
  if (act.vertex_perm.size() != nv || act.arrow_perm.size() != na)
    throw std::invalid_argument("action size does not match quiver");
  auto is_perm = [](const std::vector<int>& v) {
    std::vector<int> s = v;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != static_cast<int>(i)) return false;
    return true;
  };
  if (!is_perm(act.vertex_perm) || !is_perm(act.arrow_perm)) throw std::invalid_argument("action is not a permutation");
  for (std::size_t a = 0; a < na; ++a) {
    const Arrow& x = q.arrow(static_cast<int>(a));
    const Arrow& y = q.arrow(act.arrow_perm[a]);
    if (y.source != act.vertex_perm[static_cast<std::size_t>(x.source)] ||
        y.target != act.vertex_perm[static_cast<std::size_t>(x.target)])
      throw std::invalid_argument("action is not a quiver automorphism (arrow " + x.name + ")");
  }
  // powers of the generator
  std::vector<int> pv(nv), pa(na);
  for (std::size_t i = 0; i < nv; ++i) pv[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < na; ++i) pa[i] = static_cast<int>(i);
  bool admissible = true;
  for (int r = 1; r <= act.order; ++r) {
    for (auto& v : pv) v = act.vertex_perm[static_cast<std::size_t>(v)];
    for (auto& a : pa) a = act.arrow_perm[static_cast<std::size_t>(a)];
    bool identity = true;
    for (std::size_t i = 0; i < nv; ++i) identity &= pv[i] == static_cast<int>(i);
    for (std::size_t i = 0; i < na; ++i) identity &= pa[i] == static_cast<int>(i);
    if (r < act.order && identity) throw std::invalid_argument("generator order is smaller than declared");
    if (r == act.order && !identity) throw std::invalid_argument("generator order is not the declared order");
    if (r < act.order)
      for (std::size_t i = 0; i < nv; ++i)
        if (pv[i] == static_cast<int>(i)) admissible = false;
  }
  for (const auto& [p, c] : qp.potential.terms()) {
    Path img = apply_perm(p, act.arrow_perm, act.vertex_perm);
    if (qp.potential.coeff(img) != c) throw std::invalid_argument("action does not preserve the potential");
  }
  return admissible;
}

namespace {

std::string fiber_stem(const std::string& name) {
  auto u = name.rfind('_');
  if (u == std::string::npos || u + 1 >= name.size()) return name;
  for (std::size_t i = u + 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') return name;
  return name.substr(0, u);
}

}  // namespace

QuiverWithPotential orbit_quotient(const QuiverWithPotential& qp, const GroupAction& act) {
  if (!check_admissible(qp, act)) throw std::invalid_argument("orbit_quotient: action is not admissible");
  const Quiver& q = *qp.quiver;
  std::vector<int> vorb(static_cast<std::size_t>(q.num_vertices()), -1), aorb(static_cast<std::size_t>(q.num_arrows()), -1);
  int nvo = 0;
  for (int v = 0; v < q.num_vertices(); ++v) {
    if (vorb[static_cast<std::size_t>(v)] >= 0) continue;
    for (int x = v; vorb[static_cast<std::size_t>(x)] < 0; x = act.vertex_perm[static_cast<std::size_t>(x)])
      vorb[static_cast<std::size_t>(x)] = nvo;
    ++nvo;
  }
  std::vector<int> reps;
  std::vector<std::vector<int>> members;
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (aorb[static_cast<std::size_t>(a)] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(a);
    members.emplace_back();
    for (int x = a; aorb[static_cast<std::size_t>(x)] < 0; x = act.arrow_perm[static_cast<std::size_t>(x)]) {
      aorb[static_cast<std::size_t>(x)] = id;
      members.back().push_back(x);
    }
  }
  std::vector<std::string> names;
  std::map<std::string, int> stem_count;
  for (std::size_t o = 0; o < reps.size(); ++o) {
    std::string stem = fiber_stem(q.arrow(reps[o]).name);
    for (int x : members[o])
      if (fiber_stem(q.arrow(x).name) != stem) { stem = q.arrow(reps[o]).name; break; }
    names.push_back(stem);
    ++stem_count[stem];
  }
  auto out = std::make_shared<Quiver>(nvo);
  for (std::size_t o = 0; o < reps.size(); ++o) {
    const Arrow& r = q.arrow(reps[o]);
    std::string name = stem_count[names[o]] > 1 ? r.name : names[o];
    out->add_arrow(name, vorb[static_cast<std::size_t>(r.source)], vorb[static_cast<std::size_t>(r.target)]);
  }
  Potential w(out, qp.cap());
  for (const auto& [p, c] : qp.potential.terms()) {
    Path img;
    for (char16_t x : p.arrows) img.arrows.push_back(static_cast<char16_t>(aorb[x]));
    w.add_cycle(img, c);
  }
  return QuiverWithPotential(out, std::move(w));
}

bool qp_equal_by_names(const QuiverWithPotential& a, const QuiverWithPotential& b, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  const Quiver &qa = *a.quiver, &qb = *b.quiver;
  if (qa.num_vertices() != qb.num_vertices()) return fail("vertex counts differ");
  if (qa.num_arrows() != qb.num_arrows()) return fail("arrow counts differ");
  std::vector<int> map;
  for (const auto& x : qa.arrows()) {
    auto id = qb.find_arrow(x.name);
    if (!id) return fail("arrow " + x.name + " missing");
    const Arrow& y = qb.arrow(*id);
    if (x.source != y.source || x.target != y.target) return fail("arrow " + x.name + " has different ends");
    map.push_back(*id);
  }
  Potential wa = transport(a.potential, b.quiver, map);
  if (!(wa == b.potential)) return fail("potentials differ: " + wa.to_string() + " vs " + b.potential.to_string());
  return true;
}

}  // namespace qpcc
