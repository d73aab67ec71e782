#include "qpcc/algebra.hpp"

#include <stdexcept>

namespace qpcc {

AlgebraElement::AlgebraElement(QuiverPtr q, int cap) : q_(std::move(q)), cap_(cap) {
  if (!q_) throw std::invalid_argument("algebra element without quiver");
  if (cap_ < 0) throw std::invalid_argument("negative degree cap");
}

AlgebraElement AlgebraElement::path(QuiverPtr q, int cap, const Path& p, const Rational& c) {
  AlgebraElement x(std::move(q), cap);
  x.add_term(p, c);
  return x;
}

AlgebraElement AlgebraElement::idempotent(QuiverPtr q, int cap, int v) {
  return path(std::move(q), cap, Path::trivial(v));
}

AlgebraElement AlgebraElement::unit(QuiverPtr q, int cap) {
  AlgebraElement x(q, cap);
  for (int v = 0; v < q->num_vertices(); ++v) x.add_term(Path::trivial(v), 1);
  return x;
}

AlgebraElement AlgebraElement::arrow(QuiverPtr q, int cap, const std::string& name) {
  int id = q->arrow_id(name);
  return path(std::move(q), cap, Path::of({id}));
}

Rational AlgebraElement::coeff(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Path& p, const Rational& c) {
  if (!p.valid_in(*q_)) throw std::invalid_argument("path not valid in quiver");
  if (p.length() > cap_ || c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::truncated(int cap) const {
  AlgebraElement out(q_, cap);
  for (const auto& [p, c] : terms_)
    if (p.length() <= cap) out.terms_.emplace(p, c);
  return out;
}

int AlgebraElement::order() const {
  return terms_.empty() ? -1 : terms_.begin()->first.length();
}

int AlgebraElement::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.length();
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
  if (q_ != o.q_ && !(*q_ == *o.q_)) throw std::invalid_argument("elements over different quivers");
  if (cap_ != o.cap_) throw std::invalid_argument("elements with different degree caps");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_compatible(o);
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_compatible(o);
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c.is_zero()) { terms_.clear(); return *this; }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.cap_ == b.cap_ && a.terms_ == b.terms_;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Rational a = abs(c);
    if (!first) s += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) s += "-";
    first = false;
    if (!a.is_one()) s += a.to_string() + "*";
    s += p.is_trivial() ? path_to_string(*q_, p) : "(" + path_to_string(*q_, p) + ")";
  }
  return s;
}

AlgebraElement nc_mul(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.quiver() != y.quiver() && !(*x.quiver() == *y.quiver()))
    throw std::invalid_argument("nc_mul: different quivers");
  if (x.cap() != y.cap()) throw std::invalid_argument("nc_mul: different caps");
  const Quiver& q = *x.quiver();
  AlgebraElement out(x.quiver(), x.cap());
  for (const auto& [p, c] : x.terms()) {
    for (const auto& [r, d] : y.terms()) {
      if (p.length() + r.length() > x.cap()) continue;
      if (auto pr = concat(q, p, r)) out.add_term(*pr, c * d);
    }
  }
  return out;
}

AlgebraElement sandwich(const Path& u, const AlgebraElement& x, const Path& v) {
  const Quiver& q = *x.quiver();
  AlgebraElement out(x.quiver(), x.cap());
  for (const auto& [p, c] : x.terms()) {
    if (u.length() + p.length() + v.length() > x.cap()) continue;
    auto up = concat(q, u, p);
    if (!up) continue;
    if (auto upv = concat(q, *up, v)) out.add_term(*upv, c);
  }
  return out;
}

}  // namespace qpcc
