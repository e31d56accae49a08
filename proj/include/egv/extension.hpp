#pragma once

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "egv/bump.hpp"
#include "egv/parallel.hpp"
#include "egv/params.hpp"

namespace egv {

// All partial derivatives of phi at one point, total order 0..n_top, each
// order in the lexicographic layout of multi_indices(). Lets quadrature loops
// reuse derivative evaluations across many heights y.
struct PointDerivs {
  int dim = 1;
  int n_top = 0;
  std::vector<std::vector<double>> by_order;  // [n][position]

  double get(const std::array<int, 2>& alpha) const {
    const int n = alpha[0] + alpha[1];
    return by_order[static_cast<std::size_t>(n)]
                   [static_cast<std::size_t>(dim == 1 ? 0 : n - alpha[0])];
  }
};

PointDerivs compute_point_derivs(const TestFunction& phi, std::span<const double> x, int n_top);

// Almost-analytic extension of a compactly supported phi:
//
//   Phi(x + iy) = sum_alpha  d^alpha phi(x) / |alpha|^(tau |alpha|)
//                 * (iy)^alpha * kappa(4 h m_|alpha| y)
//
// with m_p = p^(tau((2p)^(sigma-1)-1)), m_0 = 1, and the |alpha| = 0
// coefficient equal to 1. The kappa factor kills every term with
// |y| >= 1/(2 h m_|alpha|), so the sum is finite for y != 0 and the number of
// contributing orders is contributing_max_order(|y|). At y = 0 the value is
// phi(x) exactly.
class AlmostAnalyticExtension {
 public:
  AlmostAnalyticExtension(std::shared_ptr<const TestFunction> phi, GevreyParams params,
                          BumpFunction kappa);

  const GevreyParams& params() const { return params_; }
  const TestFunction& phi() const { return *phi_; }
  const BumpFunction& kappa() const { return kappa_; }
  int dim() const { return phi_->dim(); }

  // largest n with m_n <= 1/(2 h |y|); 0 at |y| >= 1/(2h) (where even the
  // order-0 cutoff has died and Phi vanishes identically)
  long contributing_max_order(double y_norm) const;

  std::complex<double> evaluate(std::span<const double> x, std::span<const double> y) const;
  std::complex<double> dbar(std::span<const double> x, std::span<const double> y, int j) const;

  // table-driven variants for quadrature inner loops; the table must cover
  // contributing_max_order(|y|) (+1 for dbar)
  std::complex<double> evaluate_at(const PointDerivs& derivs, std::span<const double> y) const;
  std::complex<double> dbar_at(const PointDerivs& derivs, std::span<const double> y, int j) const;

 private:
  std::shared_ptr<const TestFunction> phi_;
  GevreyParams params_;
  BumpFunction kappa_;
};

// Envelope fit of the dbar decay estimate on a (t, x) grid at fixed Y:
//   |dbar Phi(x + i t Y)| <= B exp(-T_{(2^sigma-1) tau, sigma, h}(1 / |t Y|)).
// lnB is the minimal constant making the bound hold at every grid point.
struct DbarEnvelopeFit {
  double lnB = 0.0;
  double worst_t = 0.0;
  GevreyParams threshold_params;  // ((2^sigma-1) tau, sigma, h)
  std::vector<std::array<double, 3>> rows;  // t, sup_x |dbar|, T(1/|tY|)
};

DbarEnvelopeFit fit_dbar_envelope(const AlmostAnalyticExtension& ext,
                                  std::span<const double> t_grid,
                                  std::span<const double> x_grid, double Y,
                                  ExecPolicy policy = ExecPolicy::Parallel);

// max over the (t, x) grid of |Phi(x + i t Y)|; divided by the extended norm
// of phi this gives the A_h of the growth estimate
double max_abs_extension(const AlmostAnalyticExtension& ext, std::span<const double> t_grid,
                         std::span<const double> x_grid, double Y,
                         ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace egv
