#include "sbt/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sbt {

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("Series: negative order");
  coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

Series Series::from_coeffs(int order, std::vector<Rational> coeffs) {
  Series s(order);
  for (size_t k = 0; k < coeffs.size() && k < s.coeffs_.size(); ++k) s.coeffs_[k] = std::move(coeffs[k]);
  return s;
}

Series Series::constant(int order, const Rational& c) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::identity(int order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

const Rational& Series::coeff(int k) const {
  static const Rational zero{0};
  if (k < 0 || k > order()) return zero;
  return coeffs_[static_cast<size_t>(k)];
}

Series Series::truncated(int order) const {
  if (order >= this->order()) return *this;
  Series s(order);
  std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, s.coeffs_.begin());
  return s;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

Series operator+(const Series& a, const Series& b) {
  Series s(std::min(a.order(), b.order()));
  for (int k = 0; k <= s.order(); ++k) s.coeffs_[k] = a.coeff(k) + b.coeff(k);
  return s;
}

Series operator-(const Series& a, const Series& b) {
  Series s(std::min(a.order(), b.order()));
  for (int k = 0; k <= s.order(); ++k) s.coeffs_[k] = a.coeff(k) - b.coeff(k);
  return s;
}

Series operator*(const Series& a, const Series& b) {
  Series s(std::min(a.order(), b.order()));
  for (int i = 0; i <= s.order(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= s.order(); ++j) s.coeffs_[i + j] += a.coeff(i) * b.coeff(j);
  }
  return s;
}

Series operator*(const Series& a, const Rational& s) {
  Series r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

Series series_exp(const Series& a) {
  if (a.coeff(0) != 0) throw std::domain_error("series_exp: nonzero constant term");
  const int n = a.order();
  Series f(n);
  std::vector<Rational> out(n + 1);
  out[0] = 1;
  // f' = a' f  =>  k f_k = sum_{j=1..k} j a_j f_{k-j}
  for (int k = 1; k <= n; ++k) {
    Rational acc{0};
    for (int j = 1; j <= k; ++j) acc += Rational(j) * a.coeff(j) * out[k - j];
    out[k] = acc / k;
  }
  return Series::from_coeffs(n, std::move(out));
}

Series series_log(const Series& a) {
  if (a.coeff(0) != 1) throw std::domain_error("series_log: constant term must be 1");
  const int n = a.order();
  std::vector<Rational> out(n + 1);
  out[0] = 0;
  // a g' = a'  =>  k g_k = k a_k - sum_{j=1..k-1} a_j (k-j) g_{k-j}
  for (int k = 1; k <= n; ++k) {
    Rational acc = Rational(k) * a.coeff(k);
    for (int j = 1; j < k; ++j) acc -= a.coeff(j) * Rational(k - j) * out[k - j];
    out[k] = acc / k;
  }
  return Series::from_coeffs(n, std::move(out));
}

Series series_compose(const Series& a, const Series& b) {
  if (b.coeff(0) != 0) throw std::domain_error("series_compose: inner series must have zero constant term");
  const int n = std::min(a.order(), b.order());
  Series bt = b.truncated(n);
  // Horner over series.
  Series acc = Series::constant(n, a.coeff(n));
  for (int k = n - 1; k >= 0; --k) acc = acc * bt + Series::constant(n, a.coeff(k));
  return acc;
}

Series series_reversion(const Series& b) {
  if (b.coeff(0) != 0) throw std::domain_error("series_reversion: constant term must be zero");
  if (b.coeff(1) == 0) throw std::domain_error("series_reversion: linear coefficient must be nonzero");
  const int n = b.order();
  // Solve B(C(t)) = t order by order; the coefficient of t^k in B(C) is
  // b_1 c_k plus terms in c_1..c_{k-1} only.
  std::vector<Rational> c(n + 1, Rational(0));
  if (n >= 1) c[1] = Rational(1) / b.coeff(1);
  for (int k = 2; k <= n; ++k) {
    Series partial = Series::from_coeffs(k, {c.begin(), c.begin() + k + 1});
    Rational residual = series_compose(b.truncated(k), partial).coeff(k);
    c[k] = -residual / b.coeff(1);
  }
  return Series::from_coeffs(n, std::move(c));
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (coeff(k) == 0) continue;
    if (!first) os << " + ";
    os << to_fraction_string(coeff(k)) << "*t^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << order() + 1 << ")";
  return os.str();
}

}  // namespace sbt
