#include "qpcc/mutation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qpcc {

bool is_mutable(const QuiverWithPotential& qp, int k) {
  const Quiver& q = *qp.quiver;
  if (k < 0 || k >= q.num_vertices()) return false;
  return !q.has_loop_at(k) && !q.has_two_cycle_through(k);
}

namespace {

std::string fresh_name(const Quiver& q, std::string name) {
  while (q.find_arrow(name)) name += "'";
  return name;
}

// rotation of a cycle that does not start at k
Word rotate_off(const Quiver& q, const Word& w, int k) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (q.arrow(w[i]).source != k) return w.substr(i) + w.substr(0, i);
  throw std::logic_error("cycle stays at the mutated vertex");
}

}  // namespace

QuiverWithPotential premutate(const QuiverWithPotential& qp, int k) {
  const Quiver& q = *qp.quiver;
  if (k < 0 || k >= q.num_vertices()) throw std::out_of_range("vertex out of range");
  if (!is_mutable(qp, k)) throw std::domain_error("vertex not mutable");

  auto nq = std::make_shared<Quiver>(q.num_vertices());
  std::vector<int> keep(static_cast<std::size_t>(q.num_arrows()), -1), star(keep);
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& x = q.arrow(a);
    if (x.source != k && x.target != k) keep[static_cast<std::size_t>(a)] = nq->add_arrow(x.name, x.source, x.target);
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& x = q.arrow(a);
    if (x.source == k || x.target == k)
      star[static_cast<std::size_t>(a)] = nq->add_arrow(fresh_name(*nq, x.name + "*"), x.target, x.source);
  }
  std::map<std::pair<int, int>, int> comp;  // (x into k, y out of k) -> [xy]
  for (int x : q.arrows_into(k))
    for (int y : q.arrows_from(k)) {
      const Arrow &ax = q.arrow(x), &ay = q.arrow(y);
      comp[{x, y}] = nq->add_arrow(fresh_name(*nq, "[" + ax.name + "," + ay.name + "]"), ax.source, ay.target);
    }

  QuiverPtr out = nq;
  Potential w(out, qp.cap());
  for (const auto& [p, c] : qp.potential.terms()) {
    Word r = rotate_off(q, p.arrows, k);
    Path np;
    for (std::size_t i = 0; i < r.size(); ++i) {
      int a = r[i];
      if (q.arrow(a).target == k) {
        np.arrows.push_back(static_cast<char16_t>(comp.at({a, static_cast<int>(r[i + 1])})));
        ++i;
      } else {
        np.arrows.push_back(static_cast<char16_t>(keep[static_cast<std::size_t>(a)]));
      }
    }
    w.add_cycle(np, c);
  }
  for (const auto& [xy, id] : comp) {
    Path t;
    t.arrows = {static_cast<char16_t>(star[static_cast<std::size_t>(xy.second)]),
                static_cast<char16_t>(star[static_cast<std::size_t>(xy.first)]), static_cast<char16_t>(id)};
    w.add_cycle(t, 1);
  }
  return QuiverWithPotential(out, std::move(w));
}

// ---- substitutions ----

ArrowMap identity_map(const QuiverPtr& q, int cap) {
  ArrowMap m;
  for (int a = 0; a < q->num_arrows(); ++a) m.push_back(AlgebraElement::path(q, cap, Path::of({a})));
  return m;
}

AlgebraElement substitute(const AlgebraElement& x, const ArrowMap& phi) {
  AlgebraElement out(x.quiver(), x.cap());
  for (const auto& [p, c] : x.terms()) {
    if (p.is_trivial()) {
      out.add_term(p, c);
      continue;
    }
    AlgebraElement prod = phi.at(p.arrows[0]).truncated(x.cap());
    for (std::size_t i = 1; i < p.arrows.size() && !prod.is_zero(); ++i) prod = nc_mul(prod, phi.at(p.arrows[i]));
    prod *= c;
    out += prod;
  }
  return out;
}

Potential substitute(const Potential& w, const ArrowMap& phi) {
  Potential out(w.quiver(), w.cap());
  for (const auto& [p, c] : w.terms()) {
    AlgebraElement x = AlgebraElement::path(w.quiver(), w.cap(), p, c);
    const AlgebraElement y = substitute(x, phi);
    for (const auto& [r, d] : y.terms()) out.add_cycle(r, d);
  }
  return out;
}

ArrowMap compose(const ArrowMap& first, const ArrowMap& second) {
  ArrowMap out;
  out.reserve(first.size());
  for (const auto& x : first) out.push_back(substitute(x, second));
  return out;
}

ArrowMap invert(const ArrowMap& phi) {
  if (phi.empty()) return {};
  const QuiverPtr q = phi.front().quiver();
  const int cap = phi.front().cap();
  const ArrowMap id = identity_map(q, cap);
  ArrowMap h;  // phi = id + h
  for (std::size_t a = 0; a < phi.size(); ++a) h.push_back(phi[a] - id[a]);
  ArrowMap psi = id;
  const int rounds = cap + static_cast<int>(phi.size()) + 2;
  for (int r = 0; r < rounds; ++r) {
    ArrowMap next;
    for (std::size_t a = 0; a < phi.size(); ++a) next.push_back(id[a] - substitute(h[a], psi));
    bool same = true;
    for (std::size_t a = 0; a < phi.size() && same; ++a) same = next[a] == psi[a];
    psi = std::move(next);
    if (same) break;
  }
  ArrowMap check = compose(phi, psi);
  for (std::size_t a = 0; a < phi.size(); ++a)
    if (check[a] != id[a]) throw std::logic_error("substitution is not invertible by iteration");
  return psi;
}

// ---- splitting ----

namespace {

struct Splitter {
  QuiverPtr q;
  int cap;
  Potential w;
  ArrowMap phi;
  std::vector<Substitution> log;

  void apply(int arrow, const AlgebraElement& image) {
    ArrowMap s = identity_map(q, cap);
    s[static_cast<std::size_t>(arrow)] = image;
    w = substitute(w, s);
    phi = compose(phi, s);
    log.push_back(Substitution{q->arrow(arrow).name, image});
  }

  Rational quad(int x, int y) const {
    Path p;
    p.arrows = {static_cast<char16_t>(x), static_cast<char16_t>(y)};
    return w.coeff(cyclic_canonical(*q, p));
  }
};

}  // namespace

SplitResult split_trivial_reduced(const QuiverWithPotential& qp) {
  const QuiverPtr q = qp.quiver;
  const int cap = qp.cap();
  for (const auto& [p, c] : qp.potential.terms()) {
    if (p.length() == 1) throw std::invalid_argument("potential has a linear term " + path_to_string(*q, p));
    if (p.length() == 2 && q->arrow(p.at(0)).source == q->arrow(p.at(0)).target)
      throw std::domain_error("quadratic term on loops (" + path_to_string(*q, p) + "): split refused");
  }
  Splitter s{q, cap, qp.potential, identity_map(q, cap), {}};
  std::vector<char> paired(static_cast<std::size_t>(q->num_arrows()), 0);
  struct Pair {
    int x, y;
    Rational c;
  };
  std::vector<Pair> pairs;

  // quadratic part: pair arrows one block at a time
  for (;;) {
    std::optional<Pair> pick;
    for (const auto& [p, c] : s.w.terms()) {
      if (p.length() != 2) break;
      if (paired[p.arrows[0]] || paired[p.arrows[1]]) continue;
      pick = Pair{p.at(0), p.at(1), c};
      break;
    }
    if (!pick) break;
    const auto [x, y, c] = *pick;
    const Arrow &ax = q->arrow(x), &ay = q->arrow(y);
    AlgebraElement img = AlgebraElement::path(q, cap, Path::of({y}));
    bool touched = false;
    for (int y2 = 0; y2 < q->num_arrows(); ++y2) {
      if (y2 == y || paired[static_cast<std::size_t>(y2)]) continue;
      if (q->arrow(y2).source != ay.source || q->arrow(y2).target != ay.target) continue;
      Rational d = s.quad(x, y2);
      if (d.is_zero()) continue;
      img.add_term(Path::of({y2}), -(d / c));
      touched = true;
    }
    if (touched) s.apply(y, img);
    img = AlgebraElement::path(q, cap, Path::of({x}));
    touched = false;
    for (int x2 = 0; x2 < q->num_arrows(); ++x2) {
      if (x2 == x || paired[static_cast<std::size_t>(x2)]) continue;
      if (q->arrow(x2).source != ax.source || q->arrow(x2).target != ax.target) continue;
      Rational d = s.quad(x2, y);
      if (d.is_zero()) continue;
      img.add_term(Path::of({x2}), -(d / c));
      touched = true;
    }
    if (touched) s.apply(x, img);
    paired[static_cast<std::size_t>(x)] = paired[static_cast<std::size_t>(y)] = 1;
    pairs.push_back(Pair{x, y, s.quad(x, y)});
  }

  // higher terms, degree by degree
  for (int d = 3; d <= cap; ++d) {
    for (const auto& pr : pairs) {
      for (int side = 0; side < 2; ++side) {
        const int z = side == 0 ? pr.x : pr.y;  // arrow to rotate out
        const int other = side == 0 ? pr.y : pr.x;
        const Arrow& ao = q->arrow(other);
        AlgebraElement rest(q, cap);
        for (const auto& [p, c] : s.w.terms()) {
          if (p.length() != d) continue;
          auto pos = p.arrows.find(static_cast<char16_t>(z));
          if (pos == Word::npos) continue;
          Word r = p.arrows.substr(pos) + p.arrows.substr(0, pos);
          // side 0: p ~ x u, rest gets u; side 1: p ~ v y with v = tail after y
          rest.add_term(Path{r.substr(1), -1}, c);
        }
        if (rest.is_zero()) continue;
        AlgebraElement img = AlgebraElement::path(q, cap, Path::of({other}));
        img -= rest * (Rational(1) / pr.c);
        for (const auto& [p, c] : rest.terms())
          if (p.source(*q) != ao.source || p.target(*q) != ao.target)
            throw std::logic_error("split: misplaced substitution term");
        s.apply(other, img);
      }
    }
  }

  SplitResult out{qp, qp, qp, {}, std::move(s.log), std::move(s.phi), {}};
  auto tq = std::make_shared<Quiver>(q->num_vertices());
  auto rq = std::make_shared<Quiver>(q->num_vertices());
  std::vector<int> to_t(static_cast<std::size_t>(q->num_arrows()), -1), to_r(to_t);
  for (int a = 0; a < q->num_arrows(); ++a) {
    const Arrow& x = q->arrow(a);
    if (paired[static_cast<std::size_t>(a)]) to_t[static_cast<std::size_t>(a)] = tq->add_arrow(x.name, x.source, x.target);
    else to_r[static_cast<std::size_t>(a)] = rq->add_arrow(x.name, x.source, x.target);
  }
  Potential wt(tq, cap), wr(rq, cap);
  for (const auto& [p, c] : s.w.terms()) {
    bool has_paired = false, all_paired = true;
    for (char16_t a : p.arrows) {
      has_paired = has_paired || paired[a];
      all_paired = all_paired && paired[a];
    }
    if (!has_paired) {
      Path r;
      for (char16_t a : p.arrows) r.arrows.push_back(static_cast<char16_t>(to_r[a]));
      wr.add_cycle(r, c);
    } else if (p.length() == 2 && all_paired) {
      Path r;
      for (char16_t a : p.arrows) r.arrows.push_back(static_cast<char16_t>(to_t[a]));
      wt.add_cycle(r, c);
    } else {
      throw std::logic_error("split left a paired arrow in " + path_to_string(*q, p));
    }
  }
  for (const auto& pr : pairs) out.pairs.emplace_back(pr.x, pr.y);
  out.trivial = QuiverWithPotential(tq, std::move(wt));
  out.reduced = QuiverWithPotential(rq, std::move(wr));
  out.phi_inverse = invert(out.phi);
  return out;
}

Potential reassembled(const SplitResult& s) {
  const QuiverPtr& q = s.input.quiver;
  Potential w(q, s.input.cap());
  for (const QuiverWithPotential* part : {&s.trivial, &s.reduced}) {
    std::vector<int> map;
    for (const auto& a : part->quiver->arrows()) map.push_back(q->arrow_id(a.name));
    w += transport(part->potential, q, map);
  }
  return w;
}

QuiverWithPotential mutate(const QuiverWithPotential& qp, int k) {
  return split_trivial_reduced(premutate(qp, k)).reduced;
}

QuiverWithPotential mutate_sequence(const QuiverWithPotential& qp, const std::vector<int>& ks) {
  QuiverWithPotential cur = qp;
  for (int k : ks) cur = mutate(cur, k);
  return cur;
}

// ---- involution ----

std::string to_string(InvolutionStatus s) {
  switch (s) {
    case InvolutionStatus::Pass: return "PASS";
    case InvolutionStatus::Inconclusive: return "INCONCLUSIVE";
    case InvolutionStatus::Fail: return "FAIL";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxCandidates = 3628800;  // 10!

std::map<std::pair<int, int>, std::vector<int>> arrow_classes(const Quiver& q) {
  std::map<std::pair<int, int>, std::vector<int>> c;
  for (int a = 0; a < q.num_arrows(); ++a) c[{q.arrow(a).source, q.arrow(a).target}].push_back(a);
  return c;
}

bool same_support(const Potential& a, const Potential& b) {
  if (a.terms().size() != b.terms().size()) return false;
  for (auto i = a.terms().begin(), j = b.terms().begin(); i != a.terms().end(); ++i, ++j)
    if (i->first != j->first) return false;
  return true;
}

}  // namespace

bool find_qp_isomorphism(const QuiverWithPotential& a, const QuiverWithPotential& b, std::vector<int>& map,
                         std::size_t& tried, bool& bailed) {
  tried = 0;
  bailed = false;
  const Quiver &qa = *a.quiver, &qb = *b.quiver;
  if (qa.num_vertices() != qb.num_vertices() || qa.num_arrows() != qb.num_arrows()) return false;
  auto ca = arrow_classes(qa), cb = arrow_classes(qb);
  if (ca.size() != cb.size()) return false;
  double total = 1;
  for (const auto& [key, v] : ca) {
    auto it = cb.find(key);
    if (it == cb.end() || it->second.size() != v.size()) return false;
    for (std::size_t i = 2; i <= v.size(); ++i) total *= static_cast<double>(i);
  }
  if (total > static_cast<double>(kMaxCandidates)) {
    bailed = true;
    return false;
  }
  const Potential wb = b.with_cap(std::min(a.cap(), b.cap())).potential;
  const Potential wa = a.with_cap(std::min(a.cap(), b.cap())).potential;
  std::vector<std::vector<int>> perms;  // current permutation of each class of b
  std::vector<const std::vector<int>*> from;
  for (const auto& [key, v] : ca) {
    from.push_back(&v);
    perms.push_back(cb.at(key));
  }
  map.assign(static_cast<std::size_t>(qa.num_arrows()), -1);
  // odometer over the product of per-class permutations
  for (;;) {
    for (std::size_t c = 0; c < perms.size(); ++c)
      for (std::size_t i = 0; i < perms[c].size(); ++i) map[static_cast<std::size_t>((*from[c])[i])] = perms[c][i];
    ++tried;
    if (transport(wa, b.quiver, map) == wb) return true;
    std::size_t c = 0;
    for (; c < perms.size(); ++c)
      if (std::next_permutation(perms[c].begin(), perms[c].end())) break;
    if (c == perms.size()) return false;
  }
}

InvolutionReport check_involution(const QuiverWithPotential& qp, int k) {
  InvolutionReport rep{InvolutionStatus::Fail, "", {}, qp, 0};
  rep.result = mutate(mutate(qp, k), k);
  // mu_k^2 is compared with the reduced part of the input
  QuiverWithPotential target = split_trivial_reduced(qp).reduced;
  std::vector<int> map;
  bool bailed = false;
  if (find_qp_isomorphism(target, rep.result, map, rep.candidates_tried, bailed)) {
    rep.status = InvolutionStatus::Pass;
    for (std::size_t a = 0; a < map.size(); ++a)
      rep.matching.emplace_back(target.quiver->arrow(static_cast<int>(a)).name,
                                rep.result.quiver->arrow(map[a]).name);
    rep.detail = "potentials identified by an arrow bijection";
    return rep;
  }
  if (bailed) {
    rep.status = InvolutionStatus::Inconclusive;
    rep.detail = "more than 10! candidate bijections";
    return rep;
  }
  if (rep.candidates_tried == 0) {
    rep.detail = "quivers are not isomorphic over the identity on vertices";
    return rep;
  }
  rep.status = InvolutionStatus::Inconclusive;
  // a bijection matching the support suggests a rescaling; report it
  bool support = false;
  std::size_t t = 0;
  {
    auto ca = arrow_classes(*target.quiver), cb = arrow_classes(*rep.result.quiver);
    std::vector<std::vector<int>> perms;
    std::vector<const std::vector<int>*> from;
    for (const auto& [key, v] : ca) {
      from.push_back(&v);
      perms.push_back(cb.at(key));
    }
    map.assign(static_cast<std::size_t>(target.quiver->num_arrows()), -1);
    for (;;) {
      for (std::size_t c = 0; c < perms.size(); ++c)
        for (std::size_t i = 0; i < perms[c].size(); ++i) map[static_cast<std::size_t>((*from[c])[i])] = perms[c][i];
      ++t;
      if (same_support(transport(target.potential, rep.result.quiver, map), rep.result.potential)) {
        support = true;
        break;
      }
      std::size_t c = 0;
      for (; c < perms.size(); ++c)
        if (std::next_permutation(perms[c].begin(), perms[c].end())) break;
      if (c == perms.size()) break;
    }
  }
  rep.detail = support ? "quivers match and supports agree; coefficients differ (rescaling not searched)"
                       : "quivers match but no arrow bijection identifies the potentials";
  return rep;
}

QuiverWithPotential direct_sum(const QuiverWithPotential& a, const QuiverWithPotential& b) {
  if (a.quiver->num_vertices() != b.quiver->num_vertices())
    throw std::invalid_argument("direct sum needs the same vertex set");
  auto q = std::make_shared<Quiver>(a.quiver->num_vertices());
  std::vector<int> ma, mb;
  for (const auto& x : a.quiver->arrows()) ma.push_back(q->add_arrow(x.name, x.source, x.target));
  for (const auto& x : b.quiver->arrows()) {
    if (q->find_arrow(x.name)) throw std::invalid_argument("arrow name clash: " + x.name);
    mb.push_back(q->add_arrow(x.name, x.source, x.target));
  }
  const int cap = std::min(a.cap(), b.cap());
  QuiverPtr qq = q;
  Potential w = transport(a.with_cap(cap).potential, qq, ma);
  w += transport(b.with_cap(cap).potential, qq, mb);
  return QuiverWithPotential(qq, std::move(w));
}

}  // namespace qpcc
