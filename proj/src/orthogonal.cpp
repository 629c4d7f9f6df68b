#include "sbt/orthogonal.hpp"

#include "sbt/series.hpp"

#include <sstream>
#include <stdexcept>

namespace sbt {

OrthogonalBasis::OrthogonalBasis(Family family, Rational alpha, Rational sigma, int cap)
    : family_(family), alpha_(std::move(alpha)), sigma_(std::move(sigma)), cap_(cap) {
  if (cap_ < 0) throw std::domain_error("OrthogonalBasis: cap must be nonnegative");
  polys_.reserve(static_cast<size_t>(cap_) + 1);
  polys_.push_back(Poly(Rational(1)));
  if (cap_ >= 1) {
    // p_1 = z - A_0 where A_0 is the recurrence shift at n = 0.
    Rational a0 = (family_ == Family::charlier) ? sigma_ / alpha_ : Rational(0);
    polys_.push_back(Poly::monomial(1) - Poly(a0));
  }
  for (int n = 1; n < cap_; ++n) {
    Rational an = (family_ == Family::charlier) ? alpha_ * n + sigma_ / alpha_ : Rational(0);
    Rational bn = sigma_ * n;
    Poly next = Poly::monomial(1) * polys_[n] - an * polys_[n] - bn * polys_[n - 1];
    polys_.push_back(std::move(next));
  }
  monomial_rows_.reserve(static_cast<size_t>(cap_) + 1);
  for (int n = 0; n <= cap_; ++n) monomial_rows_.push_back(to_family(Poly::monomial(n)));
}

OrthogonalBasis OrthogonalBasis::charlier(const ModelParams& params, int cap) {
  return OrthogonalBasis(Family::charlier, params.alpha, params.sigma, cap);
}

OrthogonalBasis OrthogonalBasis::hermite(const Rational& sigma, int cap) {
  if (!is_positive(sigma)) throw std::domain_error("OrthogonalBasis: sigma must be positive");
  return OrthogonalBasis(Family::hermite, Rational(1), sigma, cap);
}

const Poly& OrthogonalBasis::poly(int n) const {
  if (n < 0 || n > cap_) throw std::domain_error("OrthogonalBasis: index beyond cap");
  return polys_[static_cast<size_t>(n)];
}

std::vector<Rational> OrthogonalBasis::to_family(const Poly& p) const {
  if (p.degree() > cap_) throw std::domain_error("OrthogonalBasis: degree beyond cap");
  if (p.is_zero()) return {Rational(0)};
  std::vector<Rational> out(static_cast<size_t>(p.degree()) + 1);
  Poly work = p;
  // The members are monic, so peeling from the top is exact.
  for (int d = p.degree(); d >= 0; --d) {
    Rational c = work.coeff(d);
    out[static_cast<size_t>(d)] = c;
    if (c != 0) work -= c * polys_[static_cast<size_t>(d)];
  }
  return out;
}

Poly OrthogonalBasis::from_family(std::span<const Rational> coeffs) const {
  if (static_cast<int>(coeffs.size()) > cap_ + 1)
    throw std::domain_error("OrthogonalBasis: coefficient list beyond cap");
  Poly acc;
  for (size_t n = 0; n < coeffs.size(); ++n) acc += coeffs[n] * polys_[n];
  return acc;
}

const std::vector<Rational>& OrthogonalBasis::monomial_row(int n) const {
  if (n < 0 || n > cap_) throw std::domain_error("OrthogonalBasis: index beyond cap");
  return monomial_rows_[static_cast<size_t>(n)];
}

Poly charlier_explicit(const ModelParams& params, int n) {
  if (n < 0) throw std::domain_error("charlier_explicit: degree must be nonnegative");
  Rational m = -params.sigma / params.alpha;
  Poly acc;
  for (int k = 0; k <= n; ++k) {
    Rational c = Rational(binomial(n, k)) * rational_pow(m, n - k);
    acc += c * generalized_factorial(k, params.alpha);
  }
  return acc;
}

Poly charlier_expanded(const ModelParams& params, int n) {
  if (n < 0) throw std::domain_error("charlier_expanded: degree must be nonnegative");
  const Rational& a = params.alpha;
  const Rational& s = params.sigma;
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
  coeffs[0] = rational_pow(-s / a, n);
  for (int i = 1; i <= n; ++i) {
    Rational sum(0);
    for (int k = 0; k <= n - i; ++k) {
      // alpha's exponent n-2k-i may be negative; the power is still exact.
      Rational term = Rational(binomial(n, k)) * Rational(stirling_first(n - k, i)) *
                      rational_pow(a, n - 2 * k - i) * rational_pow(s, k);
      if (k % 2 != 0) term = -term;
      sum += term;
    }
    coeffs[static_cast<size_t>(i)] = sum;
  }
  return Poly::from_coeffs(std::move(coeffs));
}

std::vector<Rational> monomial_in_charlier(const ModelParams& params, int n) {
  if (n < 0) throw std::domain_error("monomial_in_charlier: degree must be nonnegative");
  const Rational& a = params.alpha;
  Rational lam = params.sigma / a;
  std::vector<Rational> out(static_cast<size_t>(n) + 1);
  out[0] = touchard_scaled(n, a).eval(lam);
  for (int i = 1; i <= n; ++i) {
    Rational sum(0);
    for (int k = i; k <= n; ++k) {
      sum += Rational(binomial(n, k)) * touchard_scaled(n - k, a).eval(lam) *
             Rational(stirling_second(k, i)) * rational_pow(a, k - i);
    }
    out[static_cast<size_t>(i)] = sum;
  }
  return out;
}

Poly hermite_tilde(const Rational& sigma, int n) {
  if (n < 0) throw std::domain_error("hermite_tilde: degree must be nonnegative");
  Poly acc;
  for (int k = 0; k <= n; k += 2) {
    Rational c = Rational(binomial(n, k)) * gaussian_moment(k, sigma);
    acc += Poly::monomial(n - k, c);
  }
  return acc;
}

Poly hermite_tilde_twist(const Rational& sigma, int n) {
  if (n < 0) throw std::domain_error("hermite_tilde_twist: degree must be nonnegative");
  OrthogonalBasis basis = OrthogonalBasis::hermite(sigma, n);
  const Poly& h = basis.poly(n);
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
  for (int k = n; k >= 0; k -= 2) {
    Rational c = h.coeff(k);
    if (((n - k) / 2) % 2 != 0) c = -c;
    coeffs[static_cast<size_t>(k)] = c;
  }
  return Poly::from_coeffs(std::move(coeffs));
}

Poly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
  const size_t m = points.size();
  if (m == 0) throw std::invalid_argument("lagrange_interpolate: no points");
  Poly acc;
  for (size_t j = 0; j < m; ++j) {
    Poly basis(Rational(1));
    Rational denom(1);
    for (size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      Rational diff = points[j].first - points[i].first;
      if (diff == 0) throw std::invalid_argument("lagrange_interpolate: repeated node");
      basis *= Poly::monomial(1) - Poly(points[i].first);
      denom *= diff;
    }
    acc += (points[j].second / denom) * basis;
  }
  return acc;
}

namespace {

// Reconstructs the exact polynomial coefficient of t^n (times n!) from series
// expansions at integer nodes, and compares with the expected member.
GFCheckResult compare_against_series(int order, const std::vector<Series>& per_node,
                                     const std::vector<Rational>& nodes,
                                     const std::vector<Poly>& expected) {
  GFCheckResult res;
  for (int n = 0; n <= order; ++n) {
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(nodes.size());
    Rational nfact = Rational(factorial(n));
    for (size_t j = 0; j < nodes.size(); ++j)
      points.emplace_back(nodes[j], per_node[j].coeff(n) * nfact);
    Poly got = lagrange_interpolate(points);
    if (!(got == expected[static_cast<size_t>(n)])) {
      std::ostringstream os;
      os << "t^" << n << " coefficient: series gives " << got.str() << ", recurrence gives "
         << expected[static_cast<size_t>(n)].str();
      res.first_mismatch = n;
      res.detail = os.str();
      return res;
    }
  }
  res.pass = true;
  std::ostringstream os;
  os << "orders 0.." << order << " match exactly at " << nodes.size() << " nodes";
  res.detail = os.str();
  return res;
}

}  // namespace

GFCheckResult generating_function_check(Family family, const ModelParams& params, int order) {
  if (order < 0) throw std::domain_error("generating_function_check: order must be nonnegative");
  std::vector<Rational> nodes;
  for (int j = 0; j <= order; ++j) nodes.push_back(Rational(j));

  std::vector<Poly> expected;
  std::vector<Series> per_node;
  if (family == Family::charlier) {
    OrthogonalBasis basis = OrthogonalBasis::charlier(params, order);
    for (int n = 0; n <= order; ++n) expected.push_back(basis.poly(n));
    // exp((z/alpha) log(1+t alpha) - (sigma/alpha) t)
    Series lg = series_log(Series::from_coeffs(order, {Rational(1), params.alpha}));
    Series lin = Series::identity(order) * (params.sigma / params.alpha);
    for (const Rational& z : nodes)
      per_node.push_back(series_exp(lg * (z / params.alpha) - lin));
  } else {
    OrthogonalBasis basis = OrthogonalBasis::hermite(params.sigma, order);
    for (int n = 0; n <= order; ++n) expected.push_back(basis.poly(n));
    // exp(z t - sigma t^2 / 2)
    for (const Rational& z : nodes)
      per_node.push_back(
          series_exp(Series::from_coeffs(order, {Rational(0), z, -params.sigma / 2})));
  }
  return compare_against_series(order, per_node, nodes, expected);
}

GFCheckResult hermite_tilde_gf_check(const Rational& sigma, int order) {
  if (order < 0) throw std::domain_error("hermite_tilde_gf_check: order must be nonnegative");
  std::vector<Rational> nodes;
  for (int j = 0; j <= order; ++j) nodes.push_back(Rational(j));
  std::vector<Poly> expected;
  for (int n = 0; n <= order; ++n) expected.push_back(hermite_tilde(sigma, n));
  // exp(z t + sigma t^2 / 2)
  std::vector<Series> per_node;
  for (const Rational& z : nodes)
    per_node.push_back(series_exp(Series::from_coeffs(order, {Rational(0), z, sigma / 2})));
  return compare_against_series(order, per_node, nodes, expected);
}

}  // namespace sbt
