#include "qpcc/potential.hpp"

#include <stdexcept>

namespace qpcc {

Potential Potential::from_element(const AlgebraElement& x) {
  Potential w(x.quiver(), x.cap());
  for (const auto& [p, c] : x.terms()) {
    if (p.is_trivial() || !p.is_cycle(*x.quiver()))
      throw std::invalid_argument("potential term is not a cycle: " + path_to_string(*x.quiver(), p));
    w.add_cycle(p, c);
  }
  return w;
}

Rational Potential::coeff(const Path& cycle) const {
  auto it = terms_.find(cyclic_canonical(*q_, cycle));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Potential::add_cycle(const Path& cycle, const Rational& c) {
  if (cycle.is_trivial()) throw std::invalid_argument("trivial path is not a potential term");
  Path key = cyclic_canonical(*q_, cycle);
  if (key.length() > cap_ || c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Potential& Potential::operator+=(const Potential& o) {
  for (const auto& [p, c] : o.terms_) add_cycle(p, c);
  return *this;
}

Potential& Potential::operator*=(const Rational& c) {
  if (c.is_zero()) { terms_.clear(); return *this; }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

AlgebraElement Potential::as_element() const {
  AlgebraElement x(q_, cap_);
  for (const auto& [p, c] : terms_) x.add_term(p, c);
  return x;
}

int Potential::order() const { return terms_.empty() ? -1 : terms_.begin()->first.length(); }
int Potential::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.length(); }

std::string Potential::to_string() const { return as_element().to_string(); }

AlgebraElement cyclic_derivative(int arrow, const Potential& w) {
  const Quiver& q = *w.quiver();
  if (arrow < 0 || arrow >= q.num_arrows()) throw std::invalid_argument("cyclic_derivative: unknown arrow");
  AlgebraElement out(w.quiver(), w.cap());
  const char16_t a = static_cast<char16_t>(arrow);
  for (const auto& [p, c] : w.terms()) {
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
      if (p.arrows[i] != a) continue;
      Path d{p.arrows.substr(i + 1) + p.arrows.substr(0, i), -1};
      if (d.is_trivial()) d.vertex = q.arrow(arrow).source;
      out.add_term(d, c);
    }
  }
  return out;
}

QuiverWithPotential::QuiverWithPotential(QuiverPtr q, Potential w) : quiver(std::move(q)), potential(std::move(w)) {
  if (potential.quiver() != quiver && !(*potential.quiver() == *quiver))
    throw std::invalid_argument("potential over a different quiver");
}

QuiverWithPotential QuiverWithPotential::with_cap(int cap) const {
  Potential w(quiver, cap);
  for (const auto& [p, c] : potential.terms()) w.add_cycle(p, c);
  return QuiverWithPotential(quiver, std::move(w));
}

Potential transport(const Potential& w, QuiverPtr target, const std::vector<int>& arrow_map) {
  Potential out(target, w.cap());
  for (const auto& [p, c] : w.terms()) {
    Path r;
    for (char16_t x : p.arrows) r.arrows.push_back(static_cast<char16_t>(arrow_map.at(x)));
    out.add_cycle(r, c);
  }
  return out;
}

}  // namespace qpcc
