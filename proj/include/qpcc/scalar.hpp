#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

namespace qpcc {

/// Exact rational number. Thin value wrapper over GMP's mpq_class so that the
/// rest of the code never sees GMP types directly.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "12", "-3", "p/q".
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  const mpq_class& raw() const { return q_; }
  std::string to_string() const { return q_.get_str(); }
  /// Numerator as a signed 64-bit value; throws when it does not fit.
  long long numerator_ll() const;
  long long denominator_ll() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);

/// Element of a prime field F_p with the modulus carried by the value.
/// A modulus of 0 marks a small integer constant (0 or 1) produced by generic
/// code such as Eigen's Zero(); it adopts the modulus of the other operand.
class ModP {
 public:
  ModP() = default;
  ModP(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  ModP(std::int64_t v, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t value() const;
  bool is_zero() const { return *this == ModP(0); }

  ModP inverse() const;

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  ModP operator-() const { return ModP(0) - *this; }

  friend bool operator==(const ModP& a, const ModP& b);
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }
  // Only for Eigen's generic pivot bookkeeping; not a field order.
  friend bool operator<(const ModP& a, const ModP& b) { return a.value() < b.value(); }
  friend bool operator>(const ModP& a, const ModP& b) { return b < a; }
  friend bool operator<=(const ModP& a, const ModP& b) { return !(b < a); }
  friend bool operator>=(const ModP& a, const ModP& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.value(); }

 private:
  void bind(std::uint32_t p);

  std::int64_t v_ = 0;  // raw integer while unbound, else in [0, p)
  std::uint32_t p_ = 0;
};

inline ModP abs(const ModP& x) { return x; }

/// Reduction of a rational into F_p; throws std::domain_error if p divides the denominator.
ModP reduce_mod(const Rational& r, std::uint32_t p);

/// Field descriptors: the generic linear algebra takes one of these so that
/// F_p matrices are created with the right modulus.
struct RationalField {
  using Scalar = Rational;
  Scalar zero() const { return Rational(0); }
  Scalar one() const { return Rational(1); }
  Scalar from_int(long v) const { return Rational(v); }
};

struct PrimeField {
  using Scalar = ModP;
  std::uint32_t p;
  Scalar zero() const { return ModP(0, p); }
  Scalar one() const { return ModP(1, p); }
  Scalar from_int(long v) const { return ModP(v, p); }
};

bool is_prime(std::uint32_t n);

}  // namespace qpcc

template <>
struct std::hash<qpcc::Rational> {
  std::size_t operator()(const qpcc::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};

namespace Eigen {

template <>
struct NumTraits<qpcc::Rational> : GenericNumTraits<qpcc::Rational> {
  using Real = qpcc::Rational;
  using NonInteger = qpcc::Rational;
  using Literal = qpcc::Rational;
  using Nested = qpcc::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qpcc::ModP> : GenericNumTraits<qpcc::ModP> {
  using Real = qpcc::ModP;
  using NonInteger = qpcc::ModP;
  using Literal = qpcc::ModP;
  using Nested = qpcc::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
