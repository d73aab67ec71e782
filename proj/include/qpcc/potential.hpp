#pragma once

#include <string>
#include <vector>

#include "qpcc/algebra.hpp"

namespace qpcc {

/// Linear combination of cycles, each stored in its canonical rotation.
class Potential {
 public:
  Potential(QuiverPtr q, int cap) : q_(std::move(q)), cap_(cap) {}

  /// Throws std::invalid_argument if some term is not a cycle.
  static Potential from_element(const AlgebraElement& x);

  const QuiverPtr& quiver() const { return q_; }
  int cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Path& cycle) const;

  void add_cycle(const Path& cycle, const Rational& c);
  Potential& operator+=(const Potential& o);
  Potential& operator*=(const Rational& c);

  AlgebraElement as_element() const;
  /// Shortest and longest cycle lengths (-1 if zero).
  int order() const;
  int degree() const;

  friend bool operator==(const Potential& a, const Potential& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Potential& a, const Potential& b) { return !(a == b); }

  std::string to_string() const;

 private:
  QuiverPtr q_;
  int cap_;
  Terms terms_;
};

/// Sum over every occurrence of the arrow: for p = u a v contributes v u.
AlgebraElement cyclic_derivative(int arrow, const Potential& w);

struct QuiverWithPotential {
  QuiverPtr quiver;
  Potential potential;

  QuiverWithPotential(QuiverPtr q, Potential w);
  QuiverWithPotential(QuiverPtr q, int cap) : QuiverWithPotential(q, Potential(q, cap)) {}

  int cap() const { return potential.cap(); }
  /// Same QP read at another degree cap (terms beyond it are dropped).
  QuiverWithPotential with_cap(int cap) const;
};

/// Potential written on a different quiver by arrow-id translation.
Potential transport(const Potential& w, QuiverPtr target, const std::vector<int>& arrow_map);

}  // namespace qpcc
