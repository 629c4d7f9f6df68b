#pragma once

#include "sbt/rational.hpp"

#include <vector>

namespace sbt {

// Polynomial in one variable over Rational, stored as coefficients of
// z^0..z^deg with a nonzero trailing coefficient (empty = zero polynomial).
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& constant);
  static Poly monomial(int k, const Rational& coeff = Rational(1));
  static Poly from_coeffs(std::vector<Rational> coeffs);  // trims trailing zeros

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Zero for k past the stored degree.
  const Rational& coeff(int k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& x) const;
  Complex eval(const Complex& z) const;

  Poly derivative() const;
  // p(z+h), by exact binomial expansion.
  Poly shifted(const Rational& h) const;
  Poly pow(int e) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
  friend Poly operator*(const Rational& s, Poly p) { return p *= s; }
  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  std::string str() const;  // human-readable, e.g. "z^2 - 3z + 1"

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace sbt
