#pragma once

#include "sbt/rational.hpp"

#include <vector>

namespace sbt {

// Formal power series in t kept to a declared order, exact coefficients.
// Mixed-order arithmetic truncates to the minimum of the operand orders.
class Series {
 public:
  Series() : coeffs_(1, Rational(0)) {}
  explicit Series(int order);
  static Series from_coeffs(int order, std::vector<Rational> coeffs);
  static Series constant(int order, const Rational& c);
  // The series t, to the given order.
  static Series identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Series truncated(int order) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Rational& s);
  friend Series operator*(const Rational& s, const Series& a) { return a * s; }
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const;

 private:
  std::vector<Rational> coeffs_;  // size order+1
};

// exp(A); requires A.coeff(0) == 0.
Series series_exp(const Series& a);
// log(A); requires A.coeff(0) == 1.
Series series_log(const Series& a);
// A(B(t)); requires B.coeff(0) == 0. Result order = min of the two.
Series series_compose(const Series& a, const Series& b);
// C with B(C(t)) = C(B(t)) = t up to the order; requires B.coeff(0) == 0 and
// B.coeff(1) != 0.
Series series_reversion(const Series& b);

}  // namespace sbt
