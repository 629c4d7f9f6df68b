#pragma once

#include "sbt/params.hpp"
#include "sbt/poly.hpp"

namespace sbt {

// Triangular table of Stirling numbers up to a cap, precomputed by the
// standard recurrences. Immutable after construction.
class StirlingTable {
 public:
  enum class Kind { first, second };

  StirlingTable(Kind kind, int cap);

  Kind kind() const { return kind_; }
  int cap() const { return cap_; }
  // s(n,k) signed for Kind::first, S(n,k) for Kind::second.
  // Requires k <= n <= cap; throws std::domain_error otherwise.
  const BigInt& value(int n, int k) const;

 private:
  Kind kind_;
  int cap_;
  std::vector<std::vector<BigInt>> rows_;
};

// Cached accessors over shared tables (cap 64, the CLI-wide limit).
const BigInt& stirling_first(int n, int k);
const BigInt& stirling_second(int n, int k);

BigInt binomial(int n, int k);
BigInt factorial(int n);
// (2k-1)!! with the empty-product convention for k = 0.
BigInt double_factorial_odd(int k);

// (z)_n = z(z-1)...(z-n+1); (z)_0 = 1.
Poly falling_factorial(int n);
// (z|alpha)_n = z(z-alpha)...(z-(n-1)alpha); requires alpha > 0.
Poly generalized_factorial(int n, const Rational& alpha);
// T_n(z) = sum_k S(n,k) z^k, T_0 = 1.
Poly touchard(int n);
// T_{alpha,n}(z) = sum_k S(n,k) alpha^(n-k) z^k = alpha^n T_n(z/alpha); monic.
Poly touchard_scaled(int n, const Rational& alpha);

// Raw moment of the atom measure: integral of x^m equals alpha^m T_m(sigma/alpha^2).
Rational poisson_type_moment(int m, const ModelParams& params);
// Centered Gaussian moment: 0 for odd m, (2k-1)!! sigma^k for m = 2k.
Rational gaussian_moment(int m, const Rational& sigma);

}  // namespace sbt
