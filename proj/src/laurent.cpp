#include "qpcc/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qpcc {

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rational& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(e);
}

const Rational& LaurentPoly::coefficient() const {
  if (!is_monomial()) throw std::logic_error("not a monomial: " + to_string());
  return t_.begin()->second;
}

const LaurentPoly::Exponent& LaurentPoly::exponent() const {
  if (!is_monomial()) throw std::logic_error("not a monomial: " + to_string());
  return t_.begin()->first;
}

void LaurentPoly::check(const LaurentPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Laurent polynomials in different numbers of variables");
}

void LaurentPoly::add(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check(o);
  for (const auto& [e, c] : o.t_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check(o);
  for (const auto& [e, c] : o.t_) add(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  check(o);
  LaurentPoly r(n_);
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      Exponent e(e1);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add(e, c1 * c2);
    }
  *this = std::move(r);
  return *this;
}

namespace {

std::string product(const LaurentPoly::Exponent& e, int sign) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    int k = e[i] * sign;
    if (k <= 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : t_) {
    Rational a = c.sign() < 0 ? -c : c;
    out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    first = false;
    std::string num = product(e, 1), den = product(e, -1);
    std::string coef = a.is_integer() ? a.to_string() : "(" + a.to_string() + ")";
    std::string s;
    if (num.empty()) s = coef;
    else s = (a == Rational(1) ? "" : coef + "*") + num;
    if (!den.empty()) s += "/" + (den.find('*') == std::string::npos ? den : "(" + den + ")");
    out += s;
  }
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t i = 0;
  int n;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse Laurent polynomial at offset " + std::to_string(i) + ": " + why);
  }
  long number() {
    ws();
    std::size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) fail("expected a number");
    return std::stol(std::string(s.substr(st, i - st)));
  }

  LaurentPoly expr() {
    LaurentPoly r(n);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    LaurentPoly t = term();
    r = neg ? r - t : r + t;
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else break;
    }
    return r;
  }
  LaurentPoly term() {
    LaurentPoly r = factor();
    for (;;) {
      if (eat('*')) {
        r *= factor();
      } else if (eat('/')) {
        LaurentPoly d = factor();
        if (!d.is_monomial()) fail("division by a non-monomial");
        LaurentPoly::Exponent e = d.exponent();
        for (auto& x : e) x = -x;
        r *= LaurentPoly::monomial(e, Rational(1) / d.coefficient());
      } else {
        break;
      }
    }
    return r;
  }
  LaurentPoly factor() {
    ws();
    if (i >= s.size()) fail("unexpected end");
    if (eat('(')) {
      LaurentPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (s[i] == 'x') {
      ++i;
      long v = number();
      if (v < 1 || v > n) fail("variable x" + std::to_string(v) + " out of range");
      long k = 1;
      if (eat('^')) {
        bool neg = eat('-');
        k = number();
        if (neg) k = -k;
      }
      LaurentPoly::Exponent e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(v - 1)] = static_cast<int>(k);
      return LaurentPoly::monomial(e);
    }
    return LaurentPoly::constant(n, Rational(number()));
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, int nvars) {
  Parser p{text, 0, nvars};
  LaurentPoly r = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace qpcc
