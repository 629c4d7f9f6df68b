#pragma once

#include "sbt/params.hpp"
#include "sbt/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sbt {

// A linear operator on polynomials, stored as the exact images of the
// monomials z^0..z^cap together with a declared degree-growth bound. Degree
// bookkeeping makes every composition finite and exact: composing A after B
// needs A.cap >= B.cap + B.growth so no image escapes the stored range.
class PolyOperator {
 public:
  static PolyOperator from_images(int cap, int growth, std::vector<Poly> images);
  static PolyOperator identity(int cap);

  int cap() const { return cap_; }
  int growth() const { return growth_; }
  const Poly& image(int n) const;

  // Linear extension over the stored images; requires degree(p) <= cap.
  Poly apply(const Poly& p) const;
  // The same operator on a smaller cap (new_cap <= cap).
  PolyOperator restricted(int new_cap) const;

  PolyOperator operator-() const;
  // Sum/difference live on the smaller cap; growth is the larger bound.
  friend PolyOperator operator+(const PolyOperator& a, const PolyOperator& b);
  friend PolyOperator operator-(const PolyOperator& a, const PolyOperator& b);
  friend PolyOperator operator*(const Rational& s, const PolyOperator& a);

 private:
  PolyOperator(int cap, int growth, std::vector<Poly> images)
      : cap_(cap), growth_(growth), images_(std::move(images)) {}

  int cap_ = 0;
  int growth_ = 0;
  std::vector<Poly> images_;
};

// A o B. Requires A.cap >= B.cap + B.growth; result cap = B.cap,
// growth = A.growth + B.growth. Violations name the caps involved.
PolyOperator op_compose(const PolyOperator& a, const PolyOperator& b);
// AB - BA on the largest cap both compositions allow.
PolyOperator op_commutator(const PolyOperator& a, const PolyOperator& b);
// A^e with progressive cap restriction; e >= 0 (e = 0 gives the identity).
PolyOperator op_power(const PolyOperator& a, int e);
// Images agree for every n up to the smaller cap.
bool op_agree(const PolyOperator& a, const PolyOperator& b);

// d/dz.
PolyOperator op_diff(int cap);
// Multiplication by z.
PolyOperator op_mulz(int cap);
// p(z) -> p(z+h), by exact binomial expansion.
PolyOperator op_shift(const Rational& h, int cap);
// The same shift assembled as sum_k h^k D^k / k!; the sum is finite because
// differentiation is nilpotent on bounded degree. Cross-check for op_shift.
PolyOperator op_shift_taylor(const Rational& h, int cap);

// Umbral operator z^n -> T_{alpha,n}(z).
PolyOperator op_umbral_touchard(const ModelParams& params, int cap);
// Its inverse, z^n -> (z|alpha)_n.
PolyOperator op_umbral_factorial(const ModelParams& params, int cap);
// z^n -> T_{alpha,n}(z + sigma/alpha), built directly; must equal the
// composition op_shift(sigma/alpha) o op_umbral_touchard.
PolyOperator op_sheffer_S(const ModelParams& params, int cap);
// z^n -> c_n(z); inverse of op_sheffer_S.
PolyOperator op_sheffer_S_inv(const ModelParams& params, int cap);

// (U, V) with U = Z + sigma/alpha (growth 1) and V = alpha D + 1 (growth 0);
// their commutator [V, U] is alpha times the identity.
std::pair<PolyOperator, PolyOperator> op_weyl_pair(const ModelParams& params, int cap);
// The tridiagonal multiplication operator z^n -> z^{n+1} + (alpha n +
// sigma/alpha) z^n + sigma n z^{n-1}, i.e. the recurrence coefficients read as
// an operator. Independent construction of the product U V.
PolyOperator op_jacobi(const ModelParams& params, int cap);

// Lowering operator for the Charlier-type family: (E_alpha - 1)/alpha.
// Sends c_n to n c_{n-1}.
PolyOperator op_lowering_charlier(const ModelParams& params, int cap);
// Raising operator c_n -> c_{n+1}, built by exact basis conversion
// (monomial -> family coefficients, index shift, back). Growth 1.
PolyOperator op_raising_charlier(const ModelParams& params, int cap);

struct OpCheckReport {
  bool pass = false;
  std::string detail;
};

// Normal ordering: (UV)^n = sum_k S(n,k) alpha^{n-k} U^k V^k, checked as an
// exact operator identity on the cap left after growth bookkeeping.
OpCheckReport katriel_check(const ModelParams& params, int n, int cap);

}  // namespace sbt
