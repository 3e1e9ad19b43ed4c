/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spectral/polynomial.hpp"

#include <cmath>
#include <numeric>

#include "core/errors.hpp"

namespace ch {

namespace {

std::int64_t checked_narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw NumericError("rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  return checked_narrow(static_cast<__int128>(a) * b);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw NumericError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = (g > 1) ? n / g : n;
  den = (g > 1) ? d / g : d;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(checked_narrow(static_cast<__int128>(num) * o.den +
                                 static_cast<__int128>(o.num) * den),
                  mul_checked(den, o.den));
}

Rational Rational::operator-(const Rational& o) const { return *this + Rational(-o.num, o.den); }

Rational Rational::operator*(const Rational& o) const {
  const Rational a(num, o.den), b(o.num, den);  // cross-reduce first
  return Rational(mul_checked(a.num, b.num), mul_checked(a.den, b.den));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw NumericError("rational division by zero");
  return *this * Rational(o.den, o.num);
}

void Poly::add_term(const Key& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::monomial(const Key& e, const Rational& c) {
  Poly p;
  p.add_term(e, c);
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Poly Poly::laplacian(int nvars) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < nvars; ++i) {
      if (e[i] < 2) continue;
      Key d = e;
      d[i] -= 2;
      r.add_term(d, c * Rational(static_cast<std::int64_t>(e[i]) * (e[i] - 1)));
    }
  }
  return r;
}

Poly Poly::euler_degree() const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    const int deg = e[0] + e[1] + e[2];
    r.add_term(e, c * Rational(deg));
  }
  return r;
}

double Poly::eval(const std::array<double, 3>& y) const {
  double s = 0;
  for (const auto& [e, c] : terms_) {
    double m = c.to_double();
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) m *= y[i];
    s += m;
  }
  return s;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

std::int64_t factorial_i64(int n) {
  if (n < 0) throw ContractViolation("factorial of negative integer");
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f = mul_checked(f, k);
  return f;
}

}  // namespace ch
