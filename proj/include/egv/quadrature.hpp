#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace egv {

// Gauss-Legendre rule on [-1, 1]; nodes by Newton iteration on P_n.
// Rules are cached per order and immutable afterwards.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  static const GaussLegendre& order(int n);
};

using Integrand = std::function<std::complex<double>(double)>;

struct PanelEstimate {
  std::complex<double> value;  // higher-order result
  double error = 0.0;          // |GL(n) - GL(2n)|
};

// one panel [a, b], error from order doubling
PanelEstimate integrate_panel(const Integrand& f, double a, double b, int order);

struct AdaptiveResult {
  std::complex<double> value;
  double error = 0.0;
  int panels = 0;
  bool converged = false;
};

// Adaptive bisection on [a, b] starting from the given breakpoints (panel
// edges; a and b are added automatically). A panel is accepted when its
// order-doubling estimate is below tol * panel_fraction.
AdaptiveResult integrate_adaptive(const Integrand& f, double a, double b, double tol,
                                  int order = 32, int max_depth = 48,
                                  const std::vector<double>& breakpoints = {});

}  // namespace egv
