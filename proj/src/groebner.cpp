#include "qpcc/groebner.hpp"

#include <queue>
#include <stdexcept>
#include <tuple>

namespace qpcc {

namespace {

void add_to(Terms& f, const Path& p, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = f.try_emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

// f += c * u * g * v, truncated at cap; skips the term `skip` of g if given.
void add_sandwich(Terms& f, const Rational& c, const Word& u, const Terms& g, const Word& v, int cap,
                  const Path* skip = nullptr) {
  for (const auto& [p, d] : g) {
    if (skip && p == *skip) continue;
    if (static_cast<int>(u.size() + p.arrows.size() + v.size()) > cap) continue;
    add_to(f, Path{u + p.arrows + v, -1}, -c * d);
  }
}

void scale(Terms& f, const Rational& c) {
  for (auto& [p, v] : f) v *= c;
}

}  // namespace

TruncatedGroebner::TruncatedGroebner(QuiverPtr q, std::vector<AlgebraElement> generators, Options opt)
    : q_(std::move(q)), gens_(std::move(generators)), opt_(opt) {
  if (opt_.cap < 0) throw std::invalid_argument("negative cap");
  child_.emplace_back(static_cast<std::size_t>(q_->num_arrows()), -1);
  terminal_.push_back(-1);
  for (auto& g : gens_) {
    if (g.cap() != opt_.cap) g = g.truncated(opt_.cap);
    for (const auto& [p, c] : g.terms())
      if (p.is_trivial())
        throw std::invalid_argument("relation with a trivial-path term (linear loop in the potential)");
  }
}

void TruncatedGroebner::trie_insert(const Word& w, int elem) {
  int node = 0;
  for (char16_t a : w) {
    int& nx = child_[static_cast<std::size_t>(node)][a];
    if (nx < 0) {
      nx = static_cast<int>(child_.size());
      child_.emplace_back(static_cast<std::size_t>(q_->num_arrows()), -1);
      terminal_.push_back(-1);
    }
    node = child_[static_cast<std::size_t>(node)][a];
  }
  terminal_[static_cast<std::size_t>(node)] = elem;
}

void TruncatedGroebner::trie_erase(const Word& w) {
  int node = 0;
  for (char16_t a : w) {
    node = child_[static_cast<std::size_t>(node)][a];
    if (node < 0) return;
  }
  terminal_[static_cast<std::size_t>(node)] = -1;
}

std::optional<TruncatedGroebner::Match> TruncatedGroebner::find_factor(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    int node = 0;
    for (std::size_t j = i; j < w.size(); ++j) {
      node = child_[static_cast<std::size_t>(node)][w[j]];
      if (node < 0) break;
      if (terminal_[static_cast<std::size_t>(node)] >= 0)
        return Match{i, j - i + 1, terminal_[static_cast<std::size_t>(node)]};
    }
  }
  return std::nullopt;
}

bool TruncatedGroebner::is_standard(const Word& w) const { return !find_factor(w); }

bool TruncatedGroebner::has_no_leading_suffix(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    int node = 0;
    std::size_t j = i;
    for (; j < w.size(); ++j) {
      node = child_[static_cast<std::size_t>(node)][w[j]];
      if (node < 0) break;
    }
    if (j == w.size() && node >= 0 && terminal_[static_cast<std::size_t>(node)] >= 0) return false;
  }
  return true;
}

Terms TruncatedGroebner::reduce(Terms f, std::vector<Cofactor>* trace) const {
  auto it = f.begin();
  while (it != f.end()) {
    auto m = it->first.is_trivial() ? std::nullopt : find_factor(it->first.arrows);
    if (!m) {
      ++it;
      continue;
    }
    const Element& g = elems_[static_cast<std::size_t>(m->elem)];
    Path w = it->first;
    Rational c = it->second;
    Word u = w.arrows.substr(0, m->pos), v = w.arrows.substr(m->pos + m->len);
    if (trace) trace->push_back(Cofactor{c, u, m->elem, v});
    f.erase(it);
    // remaining terms of u*g*v sort after w, so resuming after w picks them up
    add_sandwich(f, c, u, g.terms, v, opt_.cap, &g.lead());
    it = f.upper_bound(w);
  }
  return f;
}

std::vector<Cofactor> TruncatedGroebner::expand_trace(const std::vector<Cofactor>& trace) const {
  std::vector<Cofactor> out;
  for (const auto& t : trace) {
    const Element& e = elems_.at(static_cast<std::size_t>(t.gen));
    for (const auto& p : e.prov) {
      Word l = t.left + p.left, r = p.right + t.right;
      if (static_cast<int>(l.size() + r.size()) + 1 > opt_.cap) continue;
      out.push_back(Cofactor{t.c * p.c, std::move(l), p.gen, std::move(r)});
    }
  }
  return out;
}

int TruncatedGroebner::add_element(Element e) {
  const int id = static_cast<int>(elems_.size());
  elems_.push_back(std::move(e));
  trie_insert(elems_.back().lead().arrows, id);
  ++stats_.elements_added;
  return id;
}

void TruncatedGroebner::run() {
  if (done_) return;
  done_ = true;
  const bool prov = opt_.track_provenance;

  // Work items: candidates (to reduce and add) and overlaps (i, j, k).
  struct Item {
    int key;
    std::size_t seq;
    int kind;  // 0 candidate, 1 overlap
    int i, j, k;
    bool operator>(const Item& o) const { return std::tie(key, seq) > std::tie(o.key, o.seq); }
  };
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  std::vector<Element> candidates;
  std::size_t seq = 0;

  auto push_candidate = [&](Element e) {
    if (e.terms.empty()) return;
    int key = e.terms.begin()->first.length();
    candidates.push_back(std::move(e));
    queue.push(Item{key, seq++, 0, static_cast<int>(candidates.size()) - 1, 0, 0});
  };

  for (std::size_t g = 0; g < gens_.size(); ++g) {
    Element e;
    e.terms = gens_[g].terms();
    if (prov) e.prov.push_back(Cofactor{1, Word{}, static_cast<int>(g), Word{}});
    push_candidate(std::move(e));
  }

  auto push_overlaps = [&](int a, int b) {
    const Word& la = elems_[static_cast<std::size_t>(a)].lead().arrows;
    const Word& lb = elems_[static_cast<std::size_t>(b)].lead().arrows;
    const std::size_t kmax = std::min(la.size(), lb.size());
    for (std::size_t k = 1; k < kmax; ++k) {  // k == kmax would be an inclusion
      int len = static_cast<int>(la.size() + lb.size() - k);
      if (len > opt_.cap) continue;
      if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
      queue.push(Item{len, seq++, 1, a, b, static_cast<int>(k)});
    }
  };

  while (!queue.empty()) {
    Item it = queue.top();
    queue.pop();
    Element e;
    if (it.kind == 0) {
      e = std::move(candidates[static_cast<std::size_t>(it.i)]);
    } else {
      const Element& A = elems_[static_cast<std::size_t>(it.i)];
      const Element& B = elems_[static_cast<std::size_t>(it.j)];
      if (!A.active || !B.active) continue;
      ++stats_.overlaps;
      const Word& la = A.lead().arrows;
      const Word& lb = B.lead().arrows;
      Word right = lb.substr(static_cast<std::size_t>(it.k));
      Word left = la.substr(0, la.size() - static_cast<std::size_t>(it.k));
      // A*right - left*B; the common leading word cancels
      add_sandwich(e.terms, -1, Word{}, A.terms, right, opt_.cap);
      add_sandwich(e.terms, 1, left, B.terms, Word{}, opt_.cap);
      if (prov) {
        for (const auto& p : A.prov) e.prov.push_back(Cofactor{p.c, p.left, p.gen, p.right + right});
        for (const auto& p : B.prov) e.prov.push_back(Cofactor{-p.c, left + p.left, p.gen, p.right});
      }
    }
    std::vector<Cofactor> trace;
    e.terms = reduce(std::move(e.terms), prov ? &trace : nullptr);
    if (e.terms.empty()) {
      ++stats_.reductions_to_zero;
      continue;
    }
    if (prov)
      for (auto& t : trace) {
        for (const auto& p : elems_[static_cast<std::size_t>(t.gen)].prov)
          e.prov.push_back(Cofactor{-t.c * p.c, t.left + p.left, p.gen, p.right + t.right});
      }
    Rational inv = Rational(1) / e.terms.begin()->second;
    scale(e.terms, inv);
    for (auto& p : e.prov) p.c *= inv;

    const int id = add_element(std::move(e));
    const Word& lead = elems_[static_cast<std::size_t>(id)].lead().arrows;
    // elements whose leading word now has a smaller leading factor go back to the queue
    for (int o = 0; o < id; ++o) {
      Element& old = elems_[static_cast<std::size_t>(o)];
      if (!old.active) continue;
      if (old.lead().arrows.find(lead) == Word::npos) continue;
      old.active = false;
      trie_erase(old.lead().arrows);
      Element again;
      again.terms = old.terms;
      again.prov = old.prov;
      push_candidate(std::move(again));
    }
    for (int o = 0; o <= id; ++o) {
      if (!elems_[static_cast<std::size_t>(o)].active) continue;
      push_overlaps(id, o);
      if (o != id) push_overlaps(o, id);
    }
  }
}

std::vector<Path> TruncatedGroebner::leading_words() const {
  std::vector<Path> out;
  for (const auto& e : elems_)
    if (e.active) out.push_back(e.lead());
  return out;
}

AlgebraElement expand_cofactors(const std::vector<AlgebraElement>& gens, const std::vector<Cofactor>& cf) {
  if (gens.empty()) throw std::invalid_argument("expand_cofactors: no generators");
  AlgebraElement out(gens.front().quiver(), gens.front().cap());
  const int cap = out.cap();
  for (const auto& c : cf) {
    const AlgebraElement& g = gens.at(static_cast<std::size_t>(c.gen));
    for (const auto& [p, d] : g.terms()) {
      if (static_cast<int>(c.left.size() + p.arrows.size() + c.right.size()) > cap) continue;
      out.add_term(Path{c.left + p.arrows + c.right, -1}, c.c * d);
    }
  }
  return out;
}

}  // namespace qpcc
