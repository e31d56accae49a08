#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace egv {

// Errors are split by who is at fault: bad inputs (ParameterError,
// DomainError), a request the object cannot serve (CapabilityError), and
// numerics that failed to converge (NumericalError).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CapabilityError : public std::runtime_error {
 public:
  CapabilityError(const std::string& msg, int needed_order)
      : std::runtime_error(msg), needed_order(needed_order) {}
  int needed_order = 0;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The (tau, sigma, h) triple that parameterizes every weight sequence,
// associated function, norm and decay threshold. Requires tau > 0 and
// sigma > 1 (strictly); h > 0. h defaults to 1 where only tau, sigma matter.
struct GevreyParams {
  double tau = 1.0;
  double sigma = 2.0;
  double h = 1.0;

  GevreyParams(double tau_, double sigma_, double h_ = 1.0)
      : tau(tau_), sigma(sigma_), h(h_) {
    if (!(tau > 0.0) || !std::isfinite(tau))
      throw ParameterError("GevreyParams: tau must be positive, got " + std::to_string(tau));
    if (!(sigma > 1.0) || !std::isfinite(sigma))
      throw ParameterError("GevreyParams: sigma must be > 1, got " + std::to_string(sigma));
    if (!(h > 0.0) || !std::isfinite(h))
      throw ParameterError("GevreyParams: h must be positive, got " + std::to_string(h));
  }

  GevreyParams with_h(double new_h) const { return GevreyParams(tau, sigma, new_h); }
  GevreyParams with_tau(double new_tau) const { return GevreyParams(new_tau, sigma, h); }

  // 2^(sigma-1), the factor that shifts tau between the two index scales.
  double two_pow_sm1() const { return std::pow(2.0, sigma - 1.0); }
};

// Axis-aligned box in R^d, d <= 2.
struct Box {
  int dim = 1;
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{0.0, 0.0};

  double length(int axis) const { return hi[axis] - lo[axis]; }
  bool contains(const std::array<double, 2>& x) const {
    for (int i = 0; i < dim; ++i)
      if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
  }
};

using Vec2 = std::array<double, 2>;

inline double norm2(const Vec2& v, int dim) {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += v[i] * v[i];
  return std::sqrt(s);
}

}  // namespace egv
