#pragma once

#include "sbt/combinatorics.hpp"
#include "sbt/params.hpp"
#include "sbt/poly.hpp"

#include <span>
#include <string>
#include <vector>

namespace sbt {

enum class Family { charlier, hermite };

// A monic orthogonal sequence up to a degree cap, built by its three-term
// recurrence, together with exact triangular conversions between the family
// basis and the monomial basis.
class OrthogonalBasis {
 public:
  static OrthogonalBasis charlier(const ModelParams& params, int cap);
  static OrthogonalBasis hermite(const Rational& sigma, int cap);

  Family family() const { return family_; }
  int cap() const { return cap_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& sigma() const { return sigma_; }
  // The degree-n member; n <= cap.
  const Poly& poly(int n) const;

  // Exact coefficients of p over the family basis (length degree+1).
  // Requires degree(p) <= cap.
  std::vector<Rational> to_family(const Poly& p) const;
  Poly from_family(std::span<const Rational> coeffs) const;
  // Cached row: z^n over the family basis (length n+1).
  const std::vector<Rational>& monomial_row(int n) const;

 private:
  OrthogonalBasis(Family family, Rational alpha, Rational sigma, int cap);

  Family family_;
  Rational alpha_;  // 1 for hermite
  Rational sigma_;
  int cap_;
  std::vector<Poly> polys_;
  std::vector<std::vector<Rational>> monomial_rows_;
};

// c_n as the binomial sum over generalized factorials:
// c_n(z) = sum_k C(n,k) (-sigma/alpha)^(n-k) (z|alpha)_k.
Poly charlier_explicit(const ModelParams& params, int n);
// The fully expanded coefficient form of c_n (constant term (-sigma/alpha)^n,
// coefficient of z^i summed over Stirling numbers of the first kind).
Poly charlier_expanded(const ModelParams& params, int n);
// Coefficients of z^n over the Charlier basis via the Touchard-value formula;
// entry 0 is T_{alpha,n}(sigma/alpha).
std::vector<Rational> monomial_in_charlier(const ModelParams& params, int n);

// Image of z^n under the Gaussian shift-average, built from Gaussian moments.
Poly hermite_tilde(const Rational& sigma, int n);
// Same polynomial via the parity twist of h_n: coefficient k picks up
// (-1)^((n-k)/2); n-k is even on every nonzero coefficient.
Poly hermite_tilde_twist(const Rational& sigma, int n);

// Exact polynomial through the given (node, value) pairs; degree < #points.
Poly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

struct GFCheckResult {
  bool pass = false;
  int first_mismatch = -1;  // -1 when all orders match
  std::string detail;
};

// Expands the family's exponential generating function as a series in t with
// exact polynomial coefficients (node instantiation + interpolation) and
// compares n! times the t^n coefficient with the recurrence-built member.
GFCheckResult generating_function_check(Family family, const ModelParams& params, int order);
// Same mechanism for the exp(z t + sigma t^2/2) generating function of the
// shift-averaged monomial images.
GFCheckResult hermite_tilde_gf_check(const Rational& sigma, int order);

}  // namespace sbt
