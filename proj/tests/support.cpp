#include "support.hpp"

namespace qpcc::testing {

namespace {

std::vector<Path> all_paths(const Quiver& q, int D) {
  std::vector<Path> out;
  for (int v = 0; v < q.num_vertices(); ++v) out.push_back(Path::trivial(v));
  std::size_t layer = 0;
  for (int len = 1; len <= D; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = layer; i < end; ++i) {
      const int t = out[i].is_trivial() ? out[i].vertex : out[i].target(q);
      for (int a : q.arrows_from(t)) {
        Path p = out[i].is_trivial() ? Path{} : out[i];
        p.arrows.push_back(static_cast<char16_t>(a));
        out.push_back(p);
      }
    }
    layer = end;
  }
  return out;
}

using Row = std::map<int, Rational>;

}  // namespace

int dense_quotient_dim(const QuiverWithPotential& qp, int D) {
  const Quiver& q = *qp.quiver;
  const std::vector<Path> paths = all_paths(q, D);
  std::map<Path, int, LeadFirst> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = static_cast<int>(i);

  // by source vertex and by target vertex
  std::vector<std::vector<const Path*>> into(static_cast<std::size_t>(q.num_vertices())),
      from(static_cast<std::size_t>(q.num_vertices()));
  for (const auto& p : paths) {
    const int s = p.is_trivial() ? p.vertex : p.source(q);
    const int t = p.is_trivial() ? p.vertex : p.target(q);
    into[static_cast<std::size_t>(t)].push_back(&p);
    from[static_cast<std::size_t>(s)].push_back(&p);
  }

  std::map<int, Row> pivots;
  auto insert = [&](Row r) {
    while (!r.empty()) {
      auto [c, x] = *r.begin();
      auto it = pivots.find(c);
      if (it == pivots.end()) {
        const Rational inv = Rational(1) / x;
        for (auto& [k, y] : r) y *= inv;
        pivots.emplace(c, std::move(r));
        return;
      }
      for (const auto& [k, y] : it->second) {
        Rational& z = r[k];
        z -= x * y;
        if (z.is_zero()) r.erase(k);
      }
    }
  };

  for (int a = 0; a < q.num_arrows(); ++a) {
    AlgebraElement g = cyclic_derivative(a, qp.potential).truncated(std::min(D, qp.cap()));
    if (g.is_zero()) continue;
    const Path& lead = g.terms().begin()->first;
    const int s = lead.is_trivial() ? lead.vertex : lead.source(q);
    const int t = lead.is_trivial() ? lead.vertex : lead.target(q);
    const int ord = g.order();
    for (const Path* u : into[static_cast<std::size_t>(s)]) {
      if (u->length() + ord > D) continue;
      for (const Path* v : from[static_cast<std::size_t>(t)]) {
        if (u->length() + ord + v->length() > D) continue;
        Row r;
        for (const auto& [p, c] : g.terms()) {
          auto up = concat(q, *u, p);
          auto upv = concat(q, *up, *v);
          if (upv->length() > D) continue;
          r[index.at(*upv)] += c;
        }
        for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
        insert(std::move(r));
      }
    }
  }
  return static_cast<int>(paths.size() - pivots.size());
}

}  // namespace qpcc::testing
