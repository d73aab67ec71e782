#pragma once

#include <map>
#include <string>

#include "qpcc/quiver.hpp"
#include "qpcc/scalar.hpp"

namespace qpcc {

using Terms = std::map<Path, Rational, LeadFirst>;

/// Element of K<Q>/m^{D+1}: a finite sum of paths of length <= cap.
/// Iteration order is leading path first (see LeadFirst).
class AlgebraElement {
 public:
  AlgebraElement(QuiverPtr q, int cap);

  static AlgebraElement path(QuiverPtr q, int cap, const Path& p, const Rational& c = 1);
  static AlgebraElement idempotent(QuiverPtr q, int cap, int v);
  static AlgebraElement unit(QuiverPtr q, int cap);
  static AlgebraElement arrow(QuiverPtr q, int cap, const std::string& name);

  const QuiverPtr& quiver() const { return q_; }
  int cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Path& p) const;

  /// Adds c*p; drops p if longer than the cap. Throws on invalid paths.
  void add_term(const Path& p, const Rational& c);

  /// Same element read in a smaller (or equal) cap.
  AlgebraElement truncated(int cap) const;
  /// Lowest path length among terms (-1 for zero).
  int order() const;
  int degree() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  AlgebraElement operator-() const { return *this * Rational(-1); }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_compatible(const AlgebraElement& o) const;

  QuiverPtr q_;
  int cap_ = 0;
  Terms terms_;
};

/// Path-concatenation product, truncated at the common cap.
AlgebraElement nc_mul(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return nc_mul(x, y); }

/// u * x * v for single paths, truncated; the workhorse of ideal spans.
AlgebraElement sandwich(const Path& u, const AlgebraElement& x, const Path& v);

}  // namespace qpcc
