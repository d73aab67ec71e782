#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qpcc/scalar.hpp"

namespace qpcc {

/// Exact Laurent polynomial in x_1..x_n; no zero coefficients are stored.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;

  explicit LaurentPoly(int nvars = 0) : n_(nvars) {}
  static LaurentPoly constant(int nvars, const Rational& c);
  static LaurentPoly monomial(const Exponent& e, const Rational& c = 1);
  static LaurentPoly variable(int nvars, int i);  // x_{i+1}
  /// "2*x2/x1", "8*x2/(x1*x3)", "x1^2 - 3/x2", ... Throws std::invalid_argument.
  static LaurentPoly parse(std::string_view text, int nvars);

  int nvars() const { return n_; }
  const std::map<Exponent, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }
  /// Coefficient and exponent of a monomial; throws otherwise.
  const Rational& coefficient() const;
  const Exponent& exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.t_ < b.t_;
  }

  /// Terms by ascending exponent vector, e.g. "2*x2/x1" or "8*x2/(x1*x3)".
  std::string to_string() const;

 private:
  void check(const LaurentPoly& o) const;
  void add(const Exponent& e, const Rational& c);
  int n_;
  std::map<Exponent, Rational> t_;
};

}  // namespace qpcc
