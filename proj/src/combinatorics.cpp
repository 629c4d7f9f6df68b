#include "sbt/combinatorics.hpp"

#include <stdexcept>

namespace sbt {

StirlingTable::StirlingTable(Kind kind, int cap) : kind_(kind), cap_(cap) {
  if (cap < 0) throw std::invalid_argument("StirlingTable: negative cap");
  rows_.resize(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    rows_[n].assign(static_cast<size_t>(n) + 1, BigInt(0));
    rows_[n][n] = 1;
    for (int k = (n > 0 ? 1 : 0); k < n; ++k) {
      if (kind == Kind::second)
        rows_[n][k] = BigInt(k) * rows_[n - 1][k] + (k > 0 ? rows_[n - 1][k - 1] : BigInt(0));
      else
        rows_[n][k] = (k > 0 ? rows_[n - 1][k - 1] : BigInt(0)) - BigInt(n - 1) * rows_[n - 1][k];
    }
  }
}

const BigInt& StirlingTable::value(int n, int k) const {
  if (n < 0 || k < 0 || k > n || n > cap_)
    throw std::domain_error("StirlingTable: indices out of range (need 0 <= k <= n <= cap)");
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

namespace {
constexpr int kSharedCap = 64;
}

const BigInt& stirling_first(int n, int k) {
  static const StirlingTable table(StirlingTable::Kind::first, kSharedCap);
  return table.value(n, k);
}

const BigInt& stirling_second(int n, int k) {
  static const StirlingTable table(StirlingTable::Kind::second, kSharedCap);
  return table.value(n, k);
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt double_factorial_odd(int k) {
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) result *= 2 * i - 1;
  return result;
}

Poly falling_factorial(int n) { return generalized_factorial(n, Rational(1)); }

Poly generalized_factorial(int n, const Rational& alpha) {
  if (n < 0) throw std::domain_error("generalized_factorial: negative degree");
  Poly p{Rational(1)};
  Poly z = Poly::monomial(1);
  for (int j = 0; j < n; ++j) p *= z - Poly(Rational(j) * alpha);
  return p;
}

Poly touchard(int n) { return touchard_scaled(n, Rational(1)); }

Poly touchard_scaled(int n, const Rational& alpha) {
  if (n < 0) throw std::domain_error("touchard_scaled: negative degree");
  if (n == 0) return Poly{Rational(1)};
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
  for (int k = 1; k <= n; ++k)
    coeffs[k] = Rational(stirling_second(n, k)) * rational_pow(alpha, n - k);
  return Poly::from_coeffs(std::move(coeffs));
}

Rational poisson_type_moment(int m, const ModelParams& params) {
  return rational_pow(params.alpha, m) * touchard(m).eval(params.intensity());
}

Rational gaussian_moment(int m, const Rational& sigma) {
  if (sigma <= 0) throw std::domain_error("gaussian_moment: sigma must be positive");
  if (m < 0) throw std::domain_error("gaussian_moment: negative order");
  if (m % 2 == 1) return Rational(0);
  int k = m / 2;
  return Rational(double_factorial_odd(k)) * rational_pow(sigma, k);
}

}  // namespace sbt
