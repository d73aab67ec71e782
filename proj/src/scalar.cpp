#include "qpcc/scalar.hpp"

#include <limits>
#include <stdexcept>

namespace qpcc {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

long long Rational::numerator_ll() const {
  if (!q_.get_num().fits_slong_p()) throw std::overflow_error("numerator too large");
  return q_.get_num().get_si();
}

long long Rational::denominator_ll() const {
  if (!q_.get_den().fits_slong_p()) throw std::overflow_error("denominator too large");
  return q_.get_den().get_si();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace {
std::int64_t norm(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}
}  // namespace

ModP::ModP(std::int64_t v, std::uint32_t p) : v_(v), p_(0) {
  if (p == 0) return;
  bind(p);
}

void ModP::bind(std::uint32_t p) {
  if (p_ == p) return;
  if (p_ != 0) throw std::logic_error("mixing different prime fields");
  v_ = norm(v_, p);
  p_ = p;
}

std::uint32_t ModP::value() const {
  if (p_ == 0) {
    if (v_ < 0 || v_ > std::numeric_limits<std::uint32_t>::max())
      throw std::logic_error("unbound field constant has no canonical value");
    return static_cast<std::uint32_t>(v_);
  }
  return static_cast<std::uint32_t>(v_);
}

ModP& ModP::operator+=(const ModP& o) {
  if (p_ == 0 && o.p_ == 0) { v_ += o.v_; return *this; }
  std::uint32_t p = p_ ? p_ : o.p_;
  bind(p);
  v_ = norm(v_ + norm(o.v_, p), p);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  if (p_ == 0 && o.p_ == 0) { v_ -= o.v_; return *this; }
  std::uint32_t p = p_ ? p_ : o.p_;
  bind(p);
  v_ = norm(v_ - norm(o.v_, p), p);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  if (p_ == 0 && o.p_ == 0) { v_ *= o.v_; return *this; }
  std::uint32_t p = p_ ? p_ : o.p_;
  bind(p);
  v_ = norm(v_ * norm(o.v_, p), p);  // both < 2^32, product fits
  return *this;
}

bool operator==(const ModP& a, const ModP& b) {
  if (a.p_ == 0 && b.p_ == 0) return a.v_ == b.v_;
  std::uint32_t p = a.p_ ? a.p_ : b.p_;
  return norm(a.v_, p) == norm(b.v_, p);
}

ModP ModP::inverse() const {
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw std::logic_error("inverse of unbound field constant");
  }
  if (v_ == 0) throw std::domain_error("division by zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t base = static_cast<std::uint64_t>(v_), e = p_ - 2, r = 1;
  while (e) {
    if (e & 1) r = r * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return ModP(static_cast<std::int64_t>(r), p_);
}

ModP reduce_mod(const Rational& r, std::uint32_t p) {
  mpz_class num = r.raw().get_num() % p;
  mpz_class den = r.raw().get_den() % p;
  if (den == 0) throw std::domain_error("prime " + std::to_string(p) + " divides a denominator");
  ModP n(num.get_si(), p), d(den.get_si(), p);
  return n / d;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace qpcc
