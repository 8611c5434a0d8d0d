#pragma once

#include <cmath>

#include "nlkg/errors.hpp"
#include "nlkg/grid.hpp"

namespace nlkg {

/// Pure-power nonlinearity f(u) = |u|^{p-1} u with p > 1.
struct Nonlinearity {
  double p = 3.0;

  explicit Nonlinearity(double power = 3.0) : p(power) {
    if (!(p > 1.0)) throw ConfigError("Nonlinearity: p must be > 1");
    integer_p = (p == 2.0) ? 2 : (p == 3.0 ? 3 : 0);
  }

  double p0() const { return std::min(2.0, p); }

  double f(double u) const {
    if (integer_p == 3) return u * u * u;
    if (integer_p == 2) return std::abs(u) * u;
    return std::pow(std::abs(u), p - 1.0) * u;
  }
  double F(double u) const {
    if (integer_p == 3) {
      const double u2 = u * u;
      return 0.25 * u2 * u2;
    }
    return std::pow(std::abs(u), p + 1.0) / (p + 1.0);
  }
  double fprime(double u) const {
    if (integer_p == 3) return 3.0 * u * u;
    if (integer_p == 2) return 2.0 * std::abs(u);
    return p * std::pow(std::abs(u), p - 1.0);
  }

  ScalarField f(const ScalarField& u) const { return map(u, &Nonlinearity::f); }
  ScalarField F(const ScalarField& u) const { return map(u, &Nonlinearity::F); }
  ScalarField fprime(const ScalarField& u) const {
    return map(u, &Nonlinearity::fprime);
  }

 private:
  int integer_p = 3;

  template <typename M>
  ScalarField map(const ScalarField& u, M m) const {
    Eigen::VectorXd v(u.size());
    for (int i = 0; i < u.size(); ++i) v[i] = (this->*m)(u.values[i]);
    return ScalarField(u.grid, std::move(v));
  }
};

}  // namespace nlkg
