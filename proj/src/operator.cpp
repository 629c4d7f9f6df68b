#include "sbt/operator.hpp"

#include "sbt/combinatorics.hpp"
#include "sbt/orthogonal.hpp"

#include <sstream>
#include <stdexcept>

namespace sbt {

PolyOperator PolyOperator::from_images(int cap, int growth, std::vector<Poly> images) {
  if (cap < 0) throw std::invalid_argument("PolyOperator: cap must be nonnegative");
  if (growth < 0) throw std::invalid_argument("PolyOperator: growth must be nonnegative");
  if (images.size() != static_cast<size_t>(cap) + 1)
    throw std::invalid_argument("PolyOperator: need exactly cap+1 images");
  for (int n = 0; n <= cap; ++n) {
    if (images[static_cast<size_t>(n)].degree() > n + growth) {
      std::ostringstream os;
      os << "PolyOperator: image of z^" << n << " has degree "
         << images[static_cast<size_t>(n)].degree() << ", beyond declared growth " << growth;
      throw std::invalid_argument(os.str());
    }
  }
  return PolyOperator(cap, growth, std::move(images));
}

PolyOperator PolyOperator::identity(int cap) {
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) images.push_back(Poly::monomial(n));
  return from_images(cap, 0, std::move(images));
}

const Poly& PolyOperator::image(int n) const {
  if (n < 0 || n > cap_) throw std::domain_error("PolyOperator: image index beyond cap");
  return images_[static_cast<size_t>(n)];
}

Poly PolyOperator::apply(const Poly& p) const {
  if (p.degree() > cap_) {
    std::ostringstream os;
    os << "PolyOperator: cannot apply cap-" << cap_ << " operator to degree-" << p.degree()
       << " polynomial";
    throw std::domain_error(os.str());
  }
  Poly acc;
  for (int n = 0; n <= p.degree(); ++n) {
    const Rational& c = p.coeff(n);
    if (c != 0) acc += c * images_[static_cast<size_t>(n)];
  }
  return acc;
}

PolyOperator PolyOperator::restricted(int new_cap) const {
  if (new_cap < 0 || new_cap > cap_)
    throw std::invalid_argument("PolyOperator: restriction cap out of range");
  std::vector<Poly> images(images_.begin(), images_.begin() + new_cap + 1);
  return PolyOperator(new_cap, growth_, std::move(images));
}

PolyOperator PolyOperator::operator-() const {
  std::vector<Poly> images;
  images.reserve(images_.size());
  for (const Poly& p : images_) images.push_back(-p);
  return PolyOperator(cap_, growth_, std::move(images));
}

PolyOperator operator+(const PolyOperator& a, const PolyOperator& b) {
  int cap = std::min(a.cap_, b.cap_);
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n)
    images.push_back(a.images_[static_cast<size_t>(n)] + b.images_[static_cast<size_t>(n)]);
  return PolyOperator(cap, std::max(a.growth_, b.growth_), std::move(images));
}

PolyOperator operator-(const PolyOperator& a, const PolyOperator& b) { return a + (-b); }

PolyOperator operator*(const Rational& s, const PolyOperator& a) {
  std::vector<Poly> images;
  images.reserve(a.images_.size());
  for (const Poly& p : a.images_) images.push_back(s * p);
  return PolyOperator(a.cap_, a.growth_, std::move(images));
}

PolyOperator op_compose(const PolyOperator& a, const PolyOperator& b) {
  if (a.cap() < b.cap() + b.growth()) {
    std::ostringstream os;
    os << "op_compose: outer cap " << a.cap() << " too small; inner cap " << b.cap()
       << " with growth " << b.growth() << " needs outer cap >= " << b.cap() + b.growth();
    throw std::invalid_argument(os.str());
  }
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(b.cap()) + 1);
  for (int n = 0; n <= b.cap(); ++n) images.push_back(a.apply(b.image(n)));
  return PolyOperator::from_images(b.cap(), a.growth() + b.growth(), std::move(images));
}

PolyOperator op_commutator(const PolyOperator& a, const PolyOperator& b) {
  int cap = std::min(a.cap() - b.growth(), b.cap() - a.growth());
  if (cap < 0) throw std::invalid_argument("op_commutator: caps leave no common domain");
  PolyOperator ab = op_compose(a, b.restricted(cap));
  PolyOperator ba = op_compose(b, a.restricted(cap));
  return ab - ba;
}

PolyOperator op_power(const PolyOperator& a, int e) {
  if (e < 0) throw std::domain_error("op_power: exponent must be nonnegative");
  if (e == 0) return PolyOperator::identity(a.cap());
  PolyOperator acc = a;
  for (int i = 2; i <= e; ++i) {
    int need = a.cap() - acc.growth();
    if (need < 0) {
      std::ostringstream os;
      os << "op_power: cap " << a.cap() << " exhausted at power " << i << " (accumulated growth "
         << acc.growth() << ")";
      throw std::invalid_argument(os.str());
    }
    acc = op_compose(a, acc.restricted(std::min(need, acc.cap())));
  }
  return acc;
}

bool op_agree(const PolyOperator& a, const PolyOperator& b) {
  int cap = std::min(a.cap(), b.cap());
  for (int n = 0; n <= cap; ++n)
    if (!(a.image(n) == b.image(n))) return false;
  return true;
}

PolyOperator op_diff(int cap) {
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) images.push_back(Poly::monomial(n).derivative());
  return PolyOperator::from_images(cap, 0, std::move(images));
}

PolyOperator op_mulz(int cap) {
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) images.push_back(Poly::monomial(n + 1));
  return PolyOperator::from_images(cap, 1, std::move(images));
}

PolyOperator op_shift(const Rational& h, int cap) {
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) images.push_back(Poly::monomial(n).shifted(h));
  return PolyOperator::from_images(cap, 0, std::move(images));
}

PolyOperator op_shift_taylor(const Rational& h, int cap) {
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    Poly acc;
    Poly cur = Poly::monomial(n);
    Rational c(1);  // h^k / k!
    for (int k = 0; k <= cap && !cur.is_zero(); ++k) {
      acc += c * cur;
      cur = cur.derivative();
      c = c * h / (k + 1);
    }
    images.push_back(std::move(acc));
  }
  return PolyOperator::from_images(cap, 0, std::move(images));
}

PolyOperator op_umbral_touchard(const ModelParams& params, int cap) {
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) images.push_back(touchard_scaled(n, params.alpha));
  return PolyOperator::from_images(cap, 0, std::move(images));
}

PolyOperator op_umbral_factorial(const ModelParams& params, int cap) {
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) images.push_back(generalized_factorial(n, params.alpha));
  return PolyOperator::from_images(cap, 0, std::move(images));
}

PolyOperator op_sheffer_S(const ModelParams& params, int cap) {
  Rational shift = params.mean();
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) images.push_back(touchard_scaled(n, params.alpha).shifted(shift));
  return PolyOperator::from_images(cap, 0, std::move(images));
}

PolyOperator op_sheffer_S_inv(const ModelParams& params, int cap) {
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) images.push_back(charlier_explicit(params, n));
  return PolyOperator::from_images(cap, 0, std::move(images));
}

std::pair<PolyOperator, PolyOperator> op_weyl_pair(const ModelParams& params, int cap) {
  Rational mean = params.mean();
  std::vector<Poly> u_images, v_images;
  u_images.reserve(static_cast<size_t>(cap) + 1);
  v_images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    u_images.push_back(Poly::monomial(n + 1) + Poly::monomial(n, mean));
    Poly v = Poly::monomial(n);
    if (n >= 1) v += Poly::monomial(n - 1, params.alpha * n);
    v_images.push_back(std::move(v));
  }
  return {PolyOperator::from_images(cap, 1, std::move(u_images)),
          PolyOperator::from_images(cap, 0, std::move(v_images))};
}

PolyOperator op_jacobi(const ModelParams& params, int cap) {
  Rational mean = params.mean();
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    Poly p = Poly::monomial(n + 1) + Poly::monomial(n, params.alpha * n + mean);
    if (n >= 1) p += Poly::monomial(n - 1, params.sigma * n);
    images.push_back(std::move(p));
  }
  return PolyOperator::from_images(cap, 1, std::move(images));
}

PolyOperator op_lowering_charlier(const ModelParams& params, int cap) {
  Rational inv = Rational(1) / params.alpha;
  return inv * (op_shift(params.alpha, cap) - PolyOperator::identity(cap));
}

PolyOperator op_raising_charlier(const ModelParams& params, int cap) {
  OrthogonalBasis basis = OrthogonalBasis::charlier(params, cap + 1);
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    const std::vector<Rational>& row = basis.monomial_row(n);
    std::vector<Rational> raised(row.size() + 1);
    for (size_t i = 0; i < row.size(); ++i) raised[i + 1] = row[i];
    images.push_back(basis.from_family(raised));
  }
  return PolyOperator::from_images(cap, 1, std::move(images));
}

OpCheckReport katriel_check(const ModelParams& params, int n, int cap) {
  if (n < 0) throw std::domain_error("katriel_check: n must be nonnegative");
  if (cap < n) {
    std::ostringstream os;
    os << "katriel_check: cap " << cap << " too small for n = " << n
       << " (growth bookkeeping needs cap >= n)";
    throw std::invalid_argument(os.str());
  }
  auto [u, v] = op_weyl_pair(params, cap);
  PolyOperator uv = op_compose(u, v);
  PolyOperator lhs = op_power(uv, n);

  int target = cap - std::max(n - 1, 0);
  std::vector<Poly> zeros(static_cast<size_t>(target) + 1);
  PolyOperator rhs = PolyOperator::from_images(target, 0, std::move(zeros));
  for (int k = (n == 0 ? 0 : 1); k <= n; ++k) {
    Rational coeff = Rational(stirling_second(n, k)) * rational_pow(params.alpha, n - k);
    if (coeff == 0) continue;
    PolyOperator uk = op_power(u, k);
    PolyOperator vk = op_power(v, k).restricted(uk.cap());
    rhs = rhs + coeff * op_compose(uk, vk);
  }

  OpCheckReport report;
  int common = std::min(lhs.cap(), rhs.cap());
  for (int m = 0; m <= common; ++m) {
    if (!(lhs.image(m) == rhs.image(m))) {
      std::ostringstream os;
      os << "first discrepancy at z^" << m << ": product side gives " << lhs.image(m).str()
         << ", ordered sum gives " << rhs.image(m).str();
      report.detail = os.str();
      return report;
    }
  }
  report.pass = true;
  std::ostringstream os;
  os << "(UV)^" << n << " equals the ordered expansion on z^0..z^" << common;
  report.detail = os.str();
  return report;
}

}  // namespace sbt
