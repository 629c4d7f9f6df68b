#pragma once

#include "sbt/params.hpp"
#include "sbt/poly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sbt {

// Finite sample of a function on the lattice {0, alpha, 2*alpha, ...};
// entry n holds f(alpha*n), and f is zero beyond the stored support.
struct GridFunction {
  std::vector<Complex> values;

  int support_bound() const { return static_cast<int>(values.size()) - 1; }
  Complex at(int n) const {
    if (n < 0 || n > support_bound()) return Complex(0.0, 0.0);
    return values[static_cast<size_t>(n)];
  }
};

// Relative atom weight lambda^n/n! (the shared e^{-lambda} prefactor is kept
// symbolic so the exact part stays rational).
Rational measure_weight_exact(const ModelParams& params, int n);
// Full numeric weight e^{-lambda} lambda^n/n! at the atom alpha*n.
double measure_weight(const ModelParams& params, int n);
// Certified upper bound on the total weight of atoms beyond index M.
double measure_tail_bound(const ModelParams& params, int M);

// Integral of p * conj(q) against the lattice measure, via the moment oracle.
Rational inner_product_L2pi(const Poly& p, const Poly& q, const ModelParams& params);
// Same against the centered Gaussian of variance sigma.
Rational inner_product_gaussian(const Poly& p, const Poly& q, const Rational& sigma);

// Entire function sum f_n z^n with finitely many stored coefficients,
// carrying the sigma of the weighted Hardy space it lives in.
struct BargmannElement {
  std::vector<Complex> coeffs;
  Rational sigma;
};

// sum f_n conj(g_n) n! sigma^n; the two elements must share sigma.
Complex bargmann_inner(const BargmannElement& f, const BargmannElement& g);
double bargmann_norm(const BargmannElement& f);

// Closed form (1 + alpha z / sigma)^n exp(-z/alpha) of the coherent state at
// the lattice atom alpha*n.
Complex coherent_state_charlier(const ModelParams& params, int n, const Complex& z);
// Partial sum sum_{m<=N} z^m/(m! sigma^m) c_m(x) of the defining series.
Complex coherent_state_charlier_partial(const ModelParams& params, const Complex& x,
                                        const Complex& z, int truncation);
// Closed form exp(-(z^2 - 2 x z)/(2 sigma)).
Complex coherent_state_hermite(const Rational& sigma, const Complex& x, const Complex& z);
Complex coherent_state_hermite_partial(const Rational& sigma, const Complex& x, const Complex& z,
                                       int truncation);

struct TransformValue {
  Complex value;
  double tail_bound = 0.0;
  int terms = 0;
};

// (Sf)(z) = e^{-lambda'} sum_n f(alpha n) lambda'^n/n! with
// lambda' = (sigma + alpha z)/alpha^2. The sum over the stored support is the
// whole series (f vanishes beyond it), so the reported tail bound is zero.
TransformValue transform_apply(const GridFunction& f, const ModelParams& params, const Complex& z);
// Adaptive summation for a lattice function given by a callback; stops once
// the geometric ratio certifies the remaining tail below the target.
TransformValue transform_apply_adaptive(const std::function<Complex(int)>& f,
                                        const ModelParams& params, const Complex& z);
// Plain partial sum with a fixed number of terms (soundness comparisons).
Complex transform_apply_truncated(const std::function<Complex(int)>& f, const ModelParams& params,
                                  const Complex& z, int terms);

// Exact polynomial image under the transform (z^n -> T_{alpha,n}(z + sigma/alpha)).
Poly transform_poly(const Poly& p, const ModelParams& params);
// Exact inverse image (z^n -> c_n).
Poly transform_poly_inverse(const Poly& p, const ModelParams& params);

struct UnitarityReport {
  bool pass = false;
  Rational lhs;  // moment-oracle inner product
  Rational rhs;  // coefficient-side sum a_n b_n n! sigma^n
  std::string detail;
};

// Exact isometry check on polynomials: lattice inner product against the
// coefficient-side sum over the orthogonal expansion.
UnitarityReport transform_unitarity_check(const Poly& p, const Poly& q, const ModelParams& params);

// (Sp)(z) = integral of p(x+z) against the centered Gaussian; exact via the
// moment contraction sum_k m_k/k! p^(k)(z).
Poly gaussian_transform_poly(const Poly& p, const Rational& sigma);

// Monomial inner product on the Gaussian-weighted plane, by polar
// factorization: the angular integral vanishes unless m = n, the radial one
// is done with a Gauss-Laguerre rule of the given size.
Complex nu_sigma_monomial_inner(int m, int n, const Rational& sigma, int radial_nodes);

struct CharFnValue {
  Complex value;       // exp((sigma/alpha^2)(e^{i alpha y} - 1 - i alpha y))
  double gaussian;     // companion exp(-sigma y^2 / 2)
};

// Characteristic function of the centered lattice measure at y, with the
// limiting Gaussian value for comparison.
CharFnValue centered_char_function(const ModelParams& params, double y);

struct EigenReport {
  bool pass = false;
  std::string detail;
};

// Partial-sum eigenfunction identity for the coherent-state series: applying
// sigma times the forward difference (f(x+alpha)-f(x))/alpha to the degree-N
// partial sum equals z times the degree-(N-1) partial sum, exactly in both
// variables. The unscaled difference operator has eigenvalue z/sigma, not z;
// the report records this scaling.
EigenReport lowering_eigenfunction_check(const ModelParams& params, const Complex& z,
                                         int truncation);

// Hilbertian l-indexed seminorm sqrt(sum |f_n|^2 (n!)^2 2^{nl}) on a finite
// coefficient vector; diagnostic only, no embedding constant is claimed.
double emin_norm(const std::vector<Complex>& coeffs, int l);

}  // namespace sbt
