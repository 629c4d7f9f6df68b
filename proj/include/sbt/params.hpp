#pragma once

#include "sbt/rational.hpp"

#include <stdexcept>

namespace sbt {

// The pair (alpha, sigma) of strictly positive rationals fixing the measure.
struct ModelParams {
  Rational alpha;
  Rational sigma;

  ModelParams(Rational a, Rational s) : alpha(std::move(a)), sigma(std::move(s)) {
    if (alpha <= 0) throw std::domain_error("ModelParams: alpha must be positive");
    if (sigma <= 0) throw std::domain_error("ModelParams: sigma must be positive");
  }

  // lambda = sigma/alpha^2, the weight parameter of the atom distribution.
  Rational intensity() const { return sigma / (alpha * alpha); }
  // sigma/alpha, the mean of the measure and the shift in the Sheffer factorization.
  Rational mean() const { return sigma / alpha; }
};

}  // namespace sbt
