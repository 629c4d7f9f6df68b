#include "sbt/verify.hpp"

#include "sbt/combinatorics.hpp"
#include "sbt/operator.hpp"
#include "sbt/orthogonal.hpp"
#include "sbt/poly.hpp"
#include "sbt/series.hpp"
#include "sbt/transform.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sbt {

double VerifyConfig::tolerance(const std::string& name, double fallback) const {
  auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

VerifyConfig VerifyConfig::standard() {
  VerifyConfig config;
  config.param_sets = {ModelParams(Rational(1), Rational(1)),
                       ModelParams(Rational(1, 2), Rational(3, 4)),
                       ModelParams(Rational(2), Rational(5))};
  return config;
}

namespace {

using Body = std::function<std::pair<bool, std::string>()>;

CheckResult timed(const std::string& suite, const std::string& id, bool exact, const Body& body) {
  CheckResult r;
  r.suite = suite;
  r.id = id;
  r.exact = exact;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [ok, detail] = body();
    r.pass = ok;
    r.detail = detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string params_str(const ModelParams& p) {
  return "(" + to_fraction_string(p.alpha) + ", " + to_fraction_string(p.sigma) + ")";
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  int d = deg(rng);
  std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
  for (auto& c : coeffs) c = random_rational(rng);
  return Poly::from_coeffs(std::move(coeffs));
}

std::vector<Complex> ring_points(const std::vector<double>& radii, int angles) {
  std::vector<Complex> pts;
  for (double r : radii)
    for (int j = 0; j < angles; ++j) {
      double th = 2.0 * 3.14159265358979323846 * j / angles;
      pts.emplace_back(r * std::cos(th), r * std::sin(th));
    }
  return pts;
}

// ---------------------------------------------------------------- series --

void suite_series(const VerifyConfig& config, std::vector<CheckResult>& out) {
  out.push_back(timed("series", "series.inverse-pair", true, [&] {
    const int order = 24;
    for (const Rational& a : {Rational(1), Rational(1, 2), Rational(2)}) {
      Series b = series_log(Series::from_coeffs(order, {Rational(1), a})) * (Rational(1) / a);
      Series c = (series_exp(Series::identity(order) * a) - Series::constant(order, Rational(1))) *
                 (Rational(1) / a);
      Series t = Series::identity(order);
      if (!(series_compose(b, c) == t) || !(series_compose(c, b) == t))
        return std::make_pair(false, "composition is not the identity for alpha=" +
                                         to_fraction_string(a));
      if (!(series_reversion(b) == c))
        return std::make_pair(false,
                              "reversion disagrees with the closed form for alpha=" +
                                  to_fraction_string(a));
    }
    return std::make_pair(true, std::string("log(1+at)/a and (e^{at}-1)/a invert each other to "
                                            "order 24 for a in {1, 1/2, 2}"));
  }));

  out.push_back(timed("series", "series.exp-log-roundtrip", true, [&] {
    std::mt19937 rng(config.seed + 1);
    const int order = 24;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> coeffs(order + 1);
      for (int k = 1; k <= order; ++k) coeffs[static_cast<size_t>(k)] = random_rational(rng);
      Series a = Series::from_coeffs(order, coeffs);
      if (!(series_log(series_exp(a)) == a))
        return std::make_pair(false, "log(exp(A)) != A on trial " + std::to_string(trial));
    }
    Series lp1 = Series::from_coeffs(8, {Rational(1), Rational(1)});
    if (!(series_exp(series_log(lp1)) == lp1))
      return std::make_pair(false, std::string("exp(log(1+t)) != 1+t"));
    return std::make_pair(true, std::string("20 random order-24 series round-trip exactly"));
  }));

  out.push_back(timed("series", "series.reversion-roundtrip", true, [&] {
    std::mt19937 rng(config.seed + 2);
    const int order = 16;
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Rational> coeffs(order + 1);
      for (int k = 2; k <= order; ++k) coeffs[static_cast<size_t>(k)] = random_rational(rng);
      std::uniform_int_distribution<int> lead(1, 5);
      coeffs[1] = Rational(lead(rng));
      Series b = Series::from_coeffs(order, coeffs);
      Series c = series_reversion(b);
      Series t = Series::identity(order);
      if (!(series_compose(b, c) == t) || !(series_compose(c, b) == t))
        return std::make_pair(false, "two-sided inverse failed on trial " + std::to_string(trial));
    }
    return std::make_pair(true, std::string("12 random admissible series invert two-sidedly"));
  }));

  out.push_back(timed("series", "series.poly-eval-product", true, [&] {
    std::mt19937 rng(config.seed + 3);
    for (int trial = 0; trial < 25; ++trial) {
      Poly p = random_poly(rng, 16);
      Poly q = random_poly(rng, 16);
      for (int j = 0; j < 5; ++j) {
        Rational x = random_rational(rng);
        if (!((p * q).eval(x) == p.eval(x) * q.eval(x)))
          return std::make_pair(false, "evaluation is not multiplicative on trial " +
                                           std::to_string(trial));
      }
    }
    return std::make_pair(true,
                          std::string("(p*q)(x) = p(x)*q(x) for 25 random pairs at 5 points"));
  }));
}

// ------------------------------------------------------------- operators --

void suite_operators(const VerifyConfig& config, std::vector<CheckResult>& out) {
  out.push_back(timed("operators", "operators.boole-shift", true, [&] {
    for (const Rational& h : {Rational(1, 3), Rational(-2, 5), Rational(4)}) {
      for (int cap : {10, 12}) {
        if (!op_agree(op_shift(h, cap), op_shift_taylor(h, cap)))
          return std::make_pair(false, "binomial shift and truncated exponential differ for h=" +
                                           to_fraction_string(h));
      }
    }
    return std::make_pair(
        true, std::string("shift equals its exponential-of-derivative expansion, caps 10 and 12"));
  }));

  out.push_back(timed("operators", "operators.heisenberg", true, [&] {
    const int cap = 12;
    PolyOperator d = op_diff(cap + 1);
    PolyOperator z = op_mulz(cap);
    if (!op_agree(op_commutator(d.restricted(cap + 1), z), PolyOperator::identity(cap - 1)))
      return std::make_pair(false, std::string("[D, Z] is not the identity"));
    PolyOperator e = op_shift(Rational(2, 3), cap);
    PolyOperator comm = op_commutator(e, op_diff(cap));
    for (int n = 0; n <= comm.cap(); ++n)
      if (!comm.image(n).is_zero())
        return std::make_pair(false, std::string("[E_h, D] does not vanish"));
    return std::make_pair(true, std::string("[D,Z] = 1 and [E_h,D] = 0 on cap 12"));
  }));

  out.push_back(timed("operators", "operators.weyl-commutator", true, [&] {
    const int cap = 20;
    for (const ModelParams& p : config.param_sets) {
      auto [u, v] = op_weyl_pair(p, cap);
      PolyOperator comm = op_commutator(v, u);
      PolyOperator want = p.alpha * PolyOperator::identity(comm.cap());
      if (!op_agree(comm, want))
        return std::make_pair(false, "[V,U] != alpha for params " + params_str(p));
    }
    return std::make_pair(true,
                          std::string("[V,U] = alpha exactly on cap 20, all parameter sets"));
  }));

  out.push_back(timed("operators", "operators.sheffer-factorization", true, [&] {
    const int cap = 16;
    for (const ModelParams& p : config.param_sets) {
      PolyOperator direct = op_sheffer_S(p, cap);
      PolyOperator composed = op_compose(op_shift(p.mean(), cap), op_umbral_touchard(p, cap));
      if (!op_agree(direct, composed))
        return std::make_pair(false, "shift-after-umbral factorization fails for " + params_str(p));
      PolyOperator inv_direct = op_sheffer_S_inv(p, cap);
      PolyOperator inv_composed =
          op_compose(op_umbral_factorial(p, cap), op_shift(-p.mean(), cap));
      if (!op_agree(inv_direct, inv_composed))
        return std::make_pair(false, "inverse factorization fails for " + params_str(p));
      if (!op_agree(op_compose(direct, inv_direct), PolyOperator::identity(cap)) ||
          !op_agree(op_compose(inv_direct, direct), PolyOperator::identity(cap)))
        return std::make_pair(false, "the two directions do not invert for " + params_str(p));
    }
    return std::make_pair(true, std::string("both factorizations and the inverse pair hold "
                                            "exactly on cap 16, all parameter sets"));
  }));

  out.push_back(timed("operators", "operators.umbral-inverse", true, [&] {
    const int cap = 16;
    for (const ModelParams& p : config.param_sets) {
      PolyOperator t = op_umbral_touchard(p, cap);
      PolyOperator f = op_umbral_factorial(p, cap);
      if (!op_agree(op_compose(f, t), PolyOperator::identity(cap)) ||
          !op_agree(op_compose(t, f), PolyOperator::identity(cap)))
        return std::make_pair(false, "umbral pair does not invert for " + params_str(p));
    }
    return std::make_pair(true, std::string("monomials -> scaled Touchard -> generalized "
                                            "factorials closes to the identity, cap 16"));
  }));

  out.push_back(timed("operators", "operators.conjugation", true, [&] {
    const int cap = 16;
    for (const ModelParams& p : config.param_sets) {
      auto [u, v] = op_weyl_pair(p, cap + 1);
      if (!op_agree(op_compose(u, v.restricted(cap)), op_jacobi(p, cap)))
        return std::make_pair(false, "UV != tridiagonal operator for " + params_str(p));
      PolyOperator lhs = op_compose(op_sheffer_S(p, cap + 1), op_mulz(cap));
      PolyOperator rhs = op_compose(op_jacobi(p, cap), op_sheffer_S(p, cap));
      if (!op_agree(lhs, rhs))
        return std::make_pair(false, "S Z != (UV) S for " + params_str(p));
    }
    return std::make_pair(true, std::string("S conjugates multiplication into the tridiagonal "
                                            "operator UV, cap 16"));
  }));

  out.push_back(timed("operators", "operators.section5-identities", true, [&] {
    const int cap = 16;
    for (const ModelParams& p : config.param_sets) {
      OrthogonalBasis basis = OrthogonalBasis::charlier(p, cap);
      // definitional lowering: z^n -> sum_i a_i * i * c_{i-1}
      std::vector<Poly> low_images;
      for (int n = 0; n <= cap; ++n) {
        const std::vector<Rational>& row = basis.monomial_row(n);
        Poly img;
        for (size_t i = 1; i < row.size(); ++i)
          img += (row[i] * Rational(static_cast<int>(i))) * basis.poly(static_cast<int>(i) - 1);
        low_images.push_back(std::move(img));
      }
      PolyOperator low_def = PolyOperator::from_images(cap, 0, std::move(low_images));
      if (!op_agree(low_def, op_lowering_charlier(p, cap)))
        return std::make_pair(false,
                              "index-shift lowering != (E_alpha - 1)/alpha for " + params_str(p));
      PolyOperator v = p.alpha * low_def + PolyOperator::identity(cap);
      if (!op_agree(v, op_shift(p.alpha, cap)))
        return std::make_pair(false, "alpha d- + 1 != E_alpha for " + params_str(p));
      PolyOperator u = op_raising_charlier(p, cap) + p.mean() * PolyOperator::identity(cap);
      if (!op_agree(u, op_compose(op_mulz(cap), op_shift(-p.alpha, cap))))
        return std::make_pair(false, "d+ + sigma/alpha != Z E_{-alpha} for " + params_str(p));
      if (!op_agree(op_compose(u, v), op_mulz(cap)))
        return std::make_pair(false, "U V != Z for " + params_str(p));
      for (int n = 0; n < cap; ++n)
        if (!(op_raising_charlier(p, cap).apply(basis.poly(n)) == basis.poly(n + 1)))
          return std::make_pair(false, "raising does not step the family for " + params_str(p));
    }
    return std::make_pair(true, std::string("V = E_alpha, U = Z E_{-alpha}, Z = UV and the "
                                            "raising/lowering actions hold exactly on cap 16"));
  }));

  out.push_back(timed("operators", "operators.lowering-action", true, [&] {
    const int cap = 16;
    for (const ModelParams& p : config.param_sets) {
      OrthogonalBasis basis = OrthogonalBasis::charlier(p, cap);
      PolyOperator low = op_lowering_charlier(p, cap);
      for (int n = 0; n <= cap; ++n) {
        Poly want = (n == 0) ? Poly() : Rational(n) * basis.poly(n - 1);
        if (!(low.apply(basis.poly(n)) == want))
          return std::make_pair(false, "difference operator fails at n=" + std::to_string(n) +
                                           " for " + params_str(p));
      }
    }
    return std::make_pair(
        true, std::string("(E_alpha - 1)/alpha sends c_n to n c_{n-1} for n <= 16, all sets"));
  }));
}

// --------------------------------------------------------------- katriel --

void suite_katriel(const VerifyConfig& config, std::vector<CheckResult>& out) {
  out.push_back(timed("katriel", "katriel.normal-ordering", true, [&] {
    const int cap = config.katriel_cap;
    for (const ModelParams& p : config.param_sets) {
      for (int n = 1; n <= 8; ++n) {
        OpCheckReport rep = katriel_check(p, n, cap);
        if (!rep.pass)
          return std::make_pair(false, "n=" + std::to_string(n) + " " + params_str(p) + ": " +
                                           rep.detail);
      }
    }
    return std::make_pair(true, "(UV)^n matches the Stirling-weighted ordered sum for n <= 8, "
                                "cap " +
                                    std::to_string(cap) + ", all parameter sets");
  }));
}

// --------------------------------------------------------- orthogonality --

void suite_orthogonality(const VerifyConfig& config, std::vector<CheckResult>& out) {
  out.push_back(timed("orthogonality", "orthogonality.gram-charlier", true, [&] {
    const int n_max = 12;
    for (const ModelParams& p : config.param_sets) {
      OrthogonalBasis basis = OrthogonalBasis::charlier(p, n_max);
      for (int m = 0; m <= n_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
          Rational got = inner_product_L2pi(basis.poly(m), basis.poly(n), p);
          Rational want = (m == n)
                              ? Rational(factorial(n)) * rational_pow(p.sigma, n)
                              : Rational(0);
          if (!(got == want))
            return std::make_pair(false, "Gram entry (" + std::to_string(m) + "," +
                                             std::to_string(n) + ") wrong for " + params_str(p));
        }
      }
    }
    return std::make_pair(true, std::string("13x13 Gram matrix is exactly diag(n! sigma^n) for "
                                            "all parameter sets"));
  }));

  out.push_back(timed("orthogonality", "orthogonality.charlier-triple", true, [&] {
    const int n_max = 16;
    for (const ModelParams& p : config.param_sets) {
      OrthogonalBasis basis = OrthogonalBasis::charlier(p, n_max);
      for (int n = 0; n <= n_max; ++n) {
        Poly rec = basis.poly(n);
        Poly exp1 = charlier_explicit(p, n);
        Poly exp2 = charlier_expanded(p, n);
        if (!(rec == exp1) || !(rec == exp2))
          return std::make_pair(false, "constructions disagree at n=" + std::to_string(n) +
                                           " for " + params_str(p));
      }
    }
    return std::make_pair(true, std::string("recurrence, binomial-sum and coefficient-sum "
                                            "constructions agree exactly for n <= 16"));
  }));

  out.push_back(timed("orthogonality", "orthogonality.monomial-expansion", true, [&] {
    const int n_max = 16;
    for (const ModelParams& p : config.param_sets) {
      OrthogonalBasis basis = OrthogonalBasis::charlier(p, n_max);
      for (int n = 0; n <= n_max; ++n) {
        std::vector<Rational> formula = monomial_in_charlier(p, n);
        if (formula != basis.monomial_row(n))
          return std::make_pair(false, "closed-form expansion of z^" + std::to_string(n) +
                                           " disagrees with the triangular solve for " +
                                           params_str(p));
        if (!(basis.from_family(formula) == Poly::monomial(n)))
          return std::make_pair(false,
                                "expansion does not resum to z^" + std::to_string(n));
      }
    }
    return std::make_pair(true, std::string("Touchard-value expansion of monomials over the "
                                            "family is exact for n <= 16"));
  }));

  out.push_back(timed("orthogonality", "orthogonality.gf-charlier", true, [&] {
    for (const ModelParams& p : config.param_sets) {
      GFCheckResult res = generating_function_check(Family::charlier, p, 12);
      if (!res.pass) return std::make_pair(false, params_str(p) + ": " + res.detail);
    }
    return std::make_pair(
        true, std::string("exp((z/a)log(1+ta) - st/a) reproduces the family to order 12"));
  }));

  out.push_back(timed("orthogonality", "orthogonality.stirling-inverse", true, [&] {
    const int n_max = 24;
    for (int n = 0; n <= n_max; ++n) {
      for (int m = 0; m <= n_max; ++m) {
        BigInt acc = 0;
        for (int k = std::max(m, 0); k <= n; ++k)
          if (k >= m) acc += stirling_second(n, k) * stirling_first(k, m);
        BigInt want = (m == n) ? 1 : 0;
        if (acc != want)
          return std::make_pair(false, "inverse relation fails at (n,m)=(" + std::to_string(n) +
                                           "," + std::to_string(m) + ")");
      }
    }
    return std::make_pair(true,
                          std::string("sum_k S(n,k) s(k,m) = delta_{nm} for n, m <= 24"));
  }));

  out.push_back(timed("orthogonality", "orthogonality.factorial-coeffs", true, [&] {
    const int n_max = 16;
    for (const ModelParams& p : config.param_sets) {
      for (int n = 0; n <= n_max; ++n) {
        Poly g = generalized_factorial(n, p.alpha);
        for (int k = 0; k <= n; ++k) {
          Rational want = Rational(stirling_first(n, k)) * rational_pow(p.alpha, n - k);
          if (!(g.coeff(k) == want))
            return std::make_pair(false, "coefficient (" + std::to_string(n) + "," +
                                             std::to_string(k) + ") off for " + params_str(p));
        }
      }
    }
    for (int n = 0; n <= n_max; ++n)
      if (!(generalized_factorial(n, Rational(1)) == falling_factorial(n)))
        return std::make_pair(false, std::string("unit increment does not reduce to the "
                                                 "falling factorial"));
    return std::make_pair(true, std::string("product coefficients match the signed Stirling "
                                            "row times alpha powers, n <= 16"));
  }));

  out.push_back(timed("orthogonality", "orthogonality.touchard-gf", true, [&] {
    const int order = 12;
    Series expm1 =
        series_exp(Series::identity(order)) - Series::constant(order, Rational(1));
    for (const Rational& x :
         {Rational(1), Rational(1, 2), Rational(2), Rational(-1), Rational(3, 4)}) {
      Series s = series_exp(expm1 * x);
      Rational nfact(1);
      for (int n = 0; n <= order; ++n) {
        if (n > 0) nfact *= n;
        if (!(s.coeff(n) * nfact == touchard(n).eval(x)))
          return std::make_pair(false, "exp(x(e^t-1)) coefficient off at n=" + std::to_string(n) +
                                           ", x=" + to_fraction_string(x));
      }
    }
    return std::make_pair(
        true, std::string("exponential generating function matches values to order 12 at 5 "
                          "sample points"));
  }));

  out.push_back(timed("orthogonality", "orthogonality.moment-vs-series", false, [&] {
    double tol = config.tolerance("moment-series", 1e-10);
    for (const ModelParams& p : config.param_sets) {
      double a = to_double(p.alpha);
      for (int m = 0; m <= 10; ++m) {
        double direct = 0.0;
        for (int n = 0; n <= 200; ++n)
          direct += std::pow(a * n, m) * measure_weight(p, n);
        double exact = to_double(poisson_type_moment(m, p));
        if (std::abs(direct - exact) > tol * std::max(1.0, std::abs(exact)))
          return std::make_pair(false, "moment " + std::to_string(m) + " off for " +
                                           params_str(p));
      }
    }
    return std::make_pair(true, std::string("Touchard-value moments agree with direct lattice "
                                            "summation to 1e-10 relative, m <= 10"));
  }));

  out.push_back(timed("orthogonality", "orthogonality.measure-normalization", false, [&] {
    const int M = 60;
    for (const ModelParams& p : config.param_sets) {
      double a = to_double(p.alpha);
      double total = 0.0, mean = 0.0;
      for (int n = 0; n <= M; ++n) {
        double w = measure_weight(p, n);
        total += w;
        mean += a * n * w;
      }
      if (std::abs(total - 1.0) > config.tolerance("normalization", 1e-12))
        return std::make_pair(false, "weights do not sum to 1 for " + params_str(p));
      if (total > 1.0 + 1e-15)
        return std::make_pair(false, "partial sums exceed 1 for " + params_str(p));
      if (std::abs(mean - to_double(p.mean())) > config.tolerance("mean", 1e-10))
        return std::make_pair(false, "lattice mean is not sigma/alpha for " + params_str(p));
      // Coverage of the tail bound. 1 - total is dominated by accumulation
      // noise once the true remainder drops below an ulp, so sum the actual
      // tail terms instead; at several cutoffs including shallow ones where
      // the remainder is large enough to be meaningful in doubles.
      for (int cut : {2, 5, 10, 25, M}) {
        double remainder = 0.0;
        for (int n = cut + 1; n <= cut + 400; ++n) {
          double w = measure_weight(p, n);
          remainder += w;
          if (w < 1e-300) break;
        }
        if (remainder > measure_tail_bound(p, cut))
          return std::make_pair(false, "tail bound underestimates the missing mass past n = " +
                                           std::to_string(cut) + " for " + params_str(p));
      }
    }
    return std::make_pair(true, std::string("weights normalize, the mean is sigma/alpha, and "
                                            "the tail bound covers the remainder at every "
                                            "cutoff tried (M = 60)"));
  }));
}

// --------------------------------------------------------------- hermite --

void suite_hermite(const VerifyConfig& config, std::vector<CheckResult>& out) {
  out.push_back(timed("hermite", "hermite.twist", true, [&] {
    const int n_max = 16;
    for (const ModelParams& p : config.param_sets) {
      for (int n = 0; n <= n_max; ++n) {
        if (!(hermite_tilde(p.sigma, n) == hermite_tilde_twist(p.sigma, n)))
          return std::make_pair(false, "twist route fails at n=" + std::to_string(n) +
                                           ", sigma=" + to_fraction_string(p.sigma));
      }
    }
    return std::make_pair(true, std::string("moment route equals the sign-twisted recurrence "
                                            "route for n <= 16"));
  }));

  out.push_back(timed("hermite", "hermite.gf", true, [&] {
    for (const ModelParams& p : config.param_sets) {
      GFCheckResult res = generating_function_check(Family::hermite, p, 10);
      if (!res.pass)
        return std::make_pair(false, "sigma=" + to_fraction_string(p.sigma) + ": " + res.detail);
    }
    return std::make_pair(true,
                          std::string("exp(zt - st^2/2) reproduces the family to order 10"));
  }));

  out.push_back(timed("hermite", "hermite.tilde-gf", true, [&] {
    for (const ModelParams& p : config.param_sets) {
      GFCheckResult res = hermite_tilde_gf_check(p.sigma, 10);
      if (!res.pass)
        return std::make_pair(false, "sigma=" + to_fraction_string(p.sigma) + ": " + res.detail);
    }
    return std::make_pair(true, std::string("exp(zt + st^2/2) reproduces the shift-averaged "
                                            "monomials to order 10"));
  }));

  out.push_back(timed("hermite", "hermite.gaussian-transform", true, [&] {
    const int n_max = 12;
    for (const ModelParams& p : config.param_sets) {
      OrthogonalBasis basis = OrthogonalBasis::hermite(p.sigma, n_max);
      for (int n = 0; n <= n_max; ++n) {
        if (!(gaussian_transform_poly(Poly::monomial(n), p.sigma) == hermite_tilde(p.sigma, n)))
          return std::make_pair(false, "monomial image wrong at n=" + std::to_string(n));
        if (!(gaussian_transform_poly(basis.poly(n), p.sigma) == Poly::monomial(n)))
          return std::make_pair(false, "family member does not map to z^" + std::to_string(n));
      }
    }
    return std::make_pair(true, std::string("shift-average maps z^n to the averaged images and "
                                            "h_n back to z^n, n <= 12"));
  }));

  out.push_back(timed("hermite", "hermite.gaussian-orthogonality", true, [&] {
    const int n_max = 12;
    for (const ModelParams& p : config.param_sets) {
      OrthogonalBasis basis = OrthogonalBasis::hermite(p.sigma, n_max);
      for (int m = 0; m <= n_max; ++m) {
        for (int n = 0; n <= n_max; ++n) {
          Rational got = inner_product_gaussian(basis.poly(m), basis.poly(n), p.sigma);
          Rational want =
              (m == n) ? Rational(factorial(n)) * rational_pow(p.sigma, n) : Rational(0);
          if (!(got == want))
            return std::make_pair(false, "Gaussian Gram entry (" + std::to_string(m) + "," +
                                             std::to_string(n) + ") wrong, sigma=" +
                                             to_fraction_string(p.sigma));
        }
      }
    }
    return std::make_pair(
        true, std::string("Gaussian Gram matrix is exactly diag(n! sigma^n) for n <= 12"));
  }));
}

// ------------------------------------------------------------- transform --

void suite_transform(const VerifyConfig& config, std::vector<CheckResult>& out) {
  out.push_back(timed("transform", "transform.sc-equals-zn", false, [&] {
    double tol = config.tolerance("sc-equals-zn", 1e-9);
    const int M = 80;
    std::vector<Complex> pts = ring_points({0.5, 1.0, 1.5, 2.0}, 5);
    for (const ModelParams& p : config.param_sets) {
      OrthogonalBasis basis = OrthogonalBasis::charlier(p, 6);
      for (int n = 0; n <= 6; ++n) {
        GridFunction f;
        for (int k = 0; k <= M; ++k)
          f.values.emplace_back(to_double(basis.poly(n).eval(p.alpha * k)), 0.0);
        for (const Complex& z : pts) {
          Complex want = std::pow(z, n);
          Complex got = transform_apply(f, p, z).value;
          if (std::abs(got - want) > tol * std::abs(want))
            return std::make_pair(false, "image of c_" + std::to_string(n) +
                                             " misses z^n for " + params_str(p));
        }
      }
    }
    return std::make_pair(true, std::string("lattice summation sends c_n to z^n within 1e-9 "
                                            "relative at 20 points, n <= 6"));
  }));

  out.push_back(timed("transform", "transform.unit-constant", false, [&] {
    double tol = config.tolerance("unit-constant", 1e-12);
    const int M = 80;
    std::vector<Complex> pts = ring_points({0.5, 1.0, 1.5, 2.0}, 5);
    pts.emplace_back(0.0, 0.0);
    for (const ModelParams& p : config.param_sets) {
      GridFunction one;
      one.values.assign(M + 1, Complex(1.0, 0.0));
      for (const Complex& z : pts) {
        TransformValue got = transform_apply(one, p, z);
        if (std::abs(got.value - Complex(1.0, 0.0)) > tol + got.tail_bound)
          return std::make_pair(false, "constant function does not map to 1 for " +
                                           params_str(p));
      }
    }
    return std::make_pair(true,
                          std::string("the constant lattice function maps to 1 within 1e-12"));
  }));

  out.push_back(timed("transform", "transform.route-consistency", false, [&] {
    double tol = config.tolerance("route-consistency", 1e-9);
    const int M = 120;
    std::mt19937 rng(config.seed + 10);
    std::vector<Complex> pts = ring_points({0.5, 1.0, 1.5}, 4);
    for (const ModelParams& p : config.param_sets) {
      for (int d = 0; d <= 8; ++d) {
        std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
        for (auto& c : coeffs) c = random_rational(rng);
        coeffs[static_cast<size_t>(d)] = Rational(1);
        Poly poly = Poly::from_coeffs(coeffs);
        Poly image = transform_poly(poly, p);
        GridFunction f;
        for (int k = 0; k <= M; ++k)
          f.values.emplace_back(to_double(poly.eval(p.alpha * k)), 0.0);
        for (const Complex& z : pts) {
          Complex via_operator = image.eval(z);
          Complex via_sum = transform_apply(f, p, z).value;
          if (std::abs(via_operator - via_sum) >
              tol * std::max(1.0, std::abs(via_operator)))
            return std::make_pair(false, "routes disagree at degree " + std::to_string(d) +
                                             " for " + params_str(p));
        }
      }
    }
    return std::make_pair(true, std::string("operator and summation routes agree within 1e-9 "
                                            "for degrees <= 8 at 12 points"));
  }));

  out.push_back(timed("transform", "transform.unitarity-random", true, [&] {
    std::mt19937 rng(config.seed + 11);
    for (const ModelParams& p : config.param_sets) {
      for (int trial = 0; trial < 50; ++trial) {
        Poly a = random_poly(rng, 10);
        Poly b = random_poly(rng, 10);
        UnitarityReport rep = transform_unitarity_check(a, b, p);
        if (!rep.pass)
          return std::make_pair(false, "trial " + std::to_string(trial) + " for " +
                                           params_str(p) + ": " + rep.detail);
      }
      OrthogonalBasis basis = OrthogonalBasis::charlier(p, 5);
      UnitarityReport self = transform_unitarity_check(basis.poly(3), basis.poly(3), p);
      if (!self.pass || !(self.lhs == Rational(6) * rational_pow(p.sigma, 3)))
        return std::make_pair(false, "norm of c_3 is not 3! sigma^3 for " + params_str(p));
      UnitarityReport cross = transform_unitarity_check(basis.poly(2), basis.poly(5), p);
      if (!cross.pass || !(cross.lhs == 0))
        return std::make_pair(false, "c_2 and c_5 are not orthogonal for " + params_str(p));
    }
    return std::make_pair(true, std::string("moment-side and coefficient-side inner products "
                                            "agree exactly on 50 random degree-<=10 pairs per "
                                            "parameter set"));
  }));

  out.push_back(timed("transform", "transform.coherent-closed-forms", false, [&] {
    double tol = config.tolerance("coherent", 1e-10);
    const int truncation = 40;
    std::vector<Complex> zs = {{1.0, 0.0}, {0.0, 1.0}, {0.6, 0.8}, {0.3, -0.4}, {-1.0, 0.0}};
    for (const ModelParams& p : config.param_sets) {
      for (int n = 0; n <= 6; ++n) {
        Complex x(to_double(p.alpha) * n, 0.0);
        for (const Complex& z : zs) {
          Complex closed = coherent_state_charlier(p, n, z);
          Complex partial = coherent_state_charlier_partial(p, x, z, truncation);
          if (std::abs(closed - partial) > tol)
            return std::make_pair(false, "lattice coherent state off at atom " +
                                             std::to_string(n) + " for " + params_str(p));
        }
      }
      for (double xr : {0.0, 1.0, -0.5, 0.75}) {
        Complex x(xr, 0.0);
        for (const Complex& z : zs) {
          Complex closed = coherent_state_hermite(p.sigma, x, z);
          Complex partial = coherent_state_hermite_partial(p.sigma, x, z, truncation);
          if (std::abs(closed - partial) > tol)
            return std::make_pair(false, "Gaussian coherent state off at x=" +
                                             std::to_string(xr) + " for " + params_str(p));
        }
      }
    }
    return std::make_pair(true, std::string("closed forms match their defining partial sums "
                                            "within 1e-10 at truncation 40, |z| <= 1"));
  }));

  out.push_back(timed("transform", "transform.eigenfunction-partial", true, [&] {
    Complex z(0.3, 0.4);
    for (const ModelParams& p : config.param_sets) {
      for (int trunc = 4; trunc <= 12; ++trunc) {
        EigenReport rep = lowering_eigenfunction_check(p, z, trunc);
        if (!rep.pass)
          return std::make_pair(false, "N=" + std::to_string(trunc) + " " + params_str(p) +
                                           ": " + rep.detail);
      }
    }
    return std::make_pair(true, std::string("sigma-scaled difference operator shifts the "
                                            "partial sums exactly for N = 4..12 (eigenvalue z; "
                                            "the unscaled operator gives z/sigma)"));
  }));

  out.push_back(timed("transform", "transform.tail-soundness", false, [&] {
    std::mt19937 rng(config.seed + 12);
    std::uniform_real_distribution<double> mag(0.5, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    std::uniform_real_distribution<double> comp(-1.4, 1.4);
    for (int trial = 0; trial < 100; ++trial) {
      const ModelParams& p = config.param_sets[trial % config.param_sets.size()];
      std::vector<Complex> vals(400);
      for (auto& v : vals) v = std::polar(mag(rng), phase(rng));
      auto f = [&vals](int n) {
        return n < static_cast<int>(vals.size()) ? vals[static_cast<size_t>(n)]
                                                 : Complex(0.0, 0.0);
      };
      Complex z(comp(rng), comp(rng));
      TransformValue adaptive = transform_apply_adaptive(f, p, z);
      Complex longer = transform_apply_truncated(f, p, z, adaptive.terms * 2 + 64);
      if (std::abs(adaptive.value - longer) > adaptive.tail_bound)
        return std::make_pair(false, "certified bound violated on trial " +
                                         std::to_string(trial));
    }
    return std::make_pair(true, std::string("doubling the truncation stays within the "
                                            "certified tail bound on 100 randomized cases"));
  }));

  out.push_back(timed("transform", "transform.nu-sigma-quadrature", false, [&] {
    double tol = config.tolerance("nu-sigma", 1e-8);
    for (const Rational& sigma : {Rational(1), Rational(3, 4)}) {
      for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
          Complex got = nu_sigma_monomial_inner(m, n, sigma, 32);
          double want =
              (m == n) ? to_double(Rational(factorial(n)) * rational_pow(sigma, n)) : 0.0;
          if (std::abs(got - Complex(want, 0.0)) > tol)
            return std::make_pair(false, "quadrature misses at (m,n)=(" + std::to_string(m) +
                                             "," + std::to_string(n) + "), sigma=" +
                                             to_fraction_string(sigma));
        }
      }
    }
    return std::make_pair(true, std::string("polar quadrature reproduces delta_{mn} n! "
                                            "sigma^n within 1e-8 for m, n <= 8"));
  }));

  out.push_back(timed("transform", "transform.bargmann-diagonal", false, [&] {
    for (const ModelParams& p : config.param_sets) {
      for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
          BargmannElement em{std::vector<Complex>(static_cast<size_t>(m) + 1), p.sigma};
          BargmannElement en{std::vector<Complex>(static_cast<size_t>(n) + 1), p.sigma};
          em.coeffs[static_cast<size_t>(m)] = Complex(1.0, 0.0);
          en.coeffs[static_cast<size_t>(n)] = Complex(1.0, 0.0);
          Complex got = bargmann_inner(em, en);
          double want =
              (m == n) ? to_double(Rational(factorial(n)) * rational_pow(p.sigma, n)) : 0.0;
          if (std::abs(got - Complex(want, 0.0)) > 1e-12 * std::max(1.0, want))
            return std::make_pair(false, "monomial inner product off at (m,n)=(" +
                                             std::to_string(m) + "," + std::to_string(n) + ")");
        }
      }
    }
    return std::make_pair(true, std::string("weighted coefficient pairing is diagonal with "
                                            "entries n! sigma^n, m, n <= 8"));
  }));

  out.push_back(timed("transform", "transform.char-convergence", false, [&] {
    double factor = config.tolerance("char-shrink-factor", 1.6);
    std::vector<Rational> alphas = {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)};
    for (const ModelParams& p : config.param_sets) {
      std::vector<double> maxgap;
      for (const Rational& a : alphas) {
        ModelParams pa(a, p.sigma);
        double worst = 0.0;
        for (int j = 1; j <= 12; ++j) {
          double y = 0.25 * j;
          CharFnValue cf = centered_char_function(pa, y);
          worst = std::max(worst, std::abs(cf.value - Complex(cf.gaussian, 0.0)));
        }
        maxgap.push_back(worst);
      }
      for (size_t i = 0; i + 1 < maxgap.size(); ++i) {
        if (maxgap[i + 1] > maxgap[i])
          return std::make_pair(false, "gap grew from alpha=" + to_fraction_string(alphas[i]) +
                                           " to " + to_fraction_string(alphas[i + 1]) + " for " +
                                           params_str(p));
        if (maxgap[i] < factor * maxgap[i + 1])
          return std::make_pair(false, "gap shrank by less than the required factor at alpha=" +
                                           to_fraction_string(alphas[i + 1]) + " for " +
                                           params_str(p));
      }
    }
    return std::make_pair(true, std::string("characteristic-function gap is nonincreasing and "
                                            "shrinks by >= 1.6 per halving of alpha"));
  }));

  out.push_back(timed("transform", "transform.emin-diagnostic", false, [&] {
    for (const ModelParams& p : config.param_sets) {
      double s = to_double(p.sigma);
      std::vector<Complex> coeffs;
      double denom = 1.0;
      for (int n = 0; n <= 12; ++n) {
        coeffs.emplace_back(1.0 / denom, 0.0);
        denom *= (n + 1.0) * s;
      }
      double l2 = 0.0;
      for (size_t n = 0; n < coeffs.size(); ++n)
        l2 += std::norm(coeffs[n]) *
              std::exp(std::lgamma(n + 1.0) + static_cast<double>(n) * std::log(s));
      l2 = std::sqrt(l2);
      int l0 = 0;
      while (std::pow(2.0, l0) < s) ++l0;
      double n0 = emin_norm(coeffs, l0);
      double n1 = emin_norm(coeffs, l0 + 1);
      if (!(l2 <= n0 && n0 <= n1))
        return std::make_pair(false, "seminorm ordering fails for " + params_str(p));
    }
    return std::make_pair(true, std::string("coefficient norm is dominated by the l-indexed "
                                            "seminorms on truncated coherent coefficients "
                                            "(diagnostic; no embedding constant claimed)"));
  }));
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> kSuites = {"series",  "operators", "orthogonality",
                                                   "katriel", "hermite",   "transform"};
  return kSuites;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config) {
  std::vector<CheckResult> out;
  bool all = (suite == "all");
  bool known = all;
  auto want = [&](const std::string& name) { return all || suite == name; };
  for (const std::string& name : verify_suites())
    if (suite == name) known = true;
  if (!known) throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
  if (want("series")) suite_series(config, out);
  if (want("operators")) suite_operators(config, out);
  if (want("orthogonality")) suite_orthogonality(config, out);
  if (want("katriel")) suite_katriel(config, out);
  if (want("hermite")) suite_hermite(config, out);
  if (want("transform")) suite_transform(config, out);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace sbt
