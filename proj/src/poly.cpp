#include "sbt/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace sbt {

namespace {
const Rational kZero{0};
}

Poly::Poly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::monomial(int k, const Rational& coeff) {
  if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  Poly p;
  if (coeff != 0) {
    p.coeffs_.assign(static_cast<size_t>(k) + 1, Rational(0));
    p.coeffs_.back() = coeff;
  }
  return p;
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
  Poly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
  if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
  return coeffs_.back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc{0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex Poly::eval(const Complex& z) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly{};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Rational(k);
  return from_coeffs(std::move(out));
}

Poly Poly::shifted(const Rational& h) const {
  if (h == 0 || is_zero()) return *this;
  // Horner in (z+h): acc = acc*(z+h) + c_k.
  Poly zh = from_coeffs({h, Rational(1)});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= zh;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly acc{Rational(1)};
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly{};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Poly::from_coeffs(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c == 0) continue;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0 || a != 1) os << to_fraction_string(a);
    if (k >= 1) {
      if (a != 1) os << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace sbt
