/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_SPECTRAL_POLYNOMIAL_HPP
#define CHPDE_SPECTRAL_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace ch {

// Exact rational with overflow-checked int64 arithmetic.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num, den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool is_zero() const { return num == 0; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Sparse polynomial in up to 3 variables with rational coefficients.
class Poly {
public:
  using Key = std::array<int, 3>;  // exponents, unused variables fixed at 0

  static Poly monomial(const Key& e, const Rational& c);
  static Poly zero() { return Poly(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }

  // sum_i d^2/dy_i^2
  Poly laplacian(int nvars) const;
  // sum_i y_i d/dy_i  (multiplies each monomial by its total degree)
  Poly euler_degree() const;

  double eval(const std::array<double, 3>& y) const;
  int total_degree() const;
  const std::map<Key, Rational>& terms() const { return terms_; }

private:
  // invariant: no zero coefficients stored
  std::map<Key, Rational> terms_;
  void add_term(const Key& e, const Rational& c);
};

std::int64_t factorial_i64(int n);

}  // namespace ch

#endif
