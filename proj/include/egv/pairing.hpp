#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "egv/extension.hpp"
#include "egv/parallel.hpp"
#include "egv/params.hpp"

namespace egv {

// Analytic function on the tube {Re z in U, Im z in the cone, |Im z| < gamma}.
// Pairings and growth checks are computed for d = 1, where the cone is one of
// the two half-lines (cone_sign). Analyticity is the caller's responsibility.
struct TubeFunction {
  std::string name;
  int dim = 1;
  Box U;
  double gamma = 1.0;
  int cone_sign = +1;
  std::function<std::complex<double>(double, double)> f1;  // z = x + iy, d=1
  std::vector<double> singular_x;  // real singularities; quadrature grades toward these

  std::complex<double> operator()(double x, double y) const { return f1(x, y); }
};

struct QuadratureSpec {
  double t_min = 1e-6;   // dyadic t panels cover [t_min, 1]
  int gl_order = 32;     // error estimated against order 2n
  double tol = 1e-7;     // stop refining when the total estimate is below this
  int max_extra_splits = 64;
  bool adaptive = true;  // false = fixed panel set (exactly linear in F, phi)
};

struct PairingResult {
  std::complex<double> value;
  double error_estimate = 0.0;
  std::complex<double> surface_term;  // int_K F(x+iY) Phi(x+iY) dx
  std::complex<double> volume_term;   // 2iY int_0^1 int_K dbar Phi F dx dt
};

// <F(x+i0), phi> by the Stokes formula, with signed height Y (the sign is the
// cone side). phi and the cutoff live inside ext.
PairingResult stokes_pairing(const TubeFunction& F, const AlmostAnalyticExtension& ext,
                             double Y, const QuadratureSpec& spec = {},
                             ExecPolicy policy = ExecPolicy::Parallel);

struct DirectPairingResult {
  std::complex<double> value;  // Richardson extrapolant
  bool converged = false;
  double last_delta = 0.0;  // |last two extrapolants|
  std::vector<std::array<double, 3>> trace;  // t, Re, Im of int F(x+itY) phi dx
};

// Richardson extrapolation of t -> int F(x+itY) phi(x) dx over a decreasing
// t sequence; convergence is declared only when the last two extrapolants
// agree within tol.
DirectPairingResult direct_pairing(const TubeFunction& F, const TestFunction& phi,
                                   std::span<const double> t_sequence, double Y,
                                   double tol = 1e-7);

struct GrowthSampleSpec {
  int x_count = 101;
  int t_count = 25;
  double t_lo = 1e-3;
  double t_hi = 1.0;
  double Y = 0.5;  // signed height direction
  int refinements = 2;
};

struct GrowthCheckResult {
  bool pass = false;
  double lnA = 0.0;  // fitted at the base grid
  double H = 0.0;
  GevreyParams threshold_params;  // ((2^sigma-1) tau, sigma, H)
  std::vector<double> lnA_by_refinement;
  double worst_x = 0.0, worst_t = 0.0;
  double worst_lnF = 0.0, worst_threshold = 0.0;
  // log-power threshold variant (evaluated on the samples inside its domain)
  double logpower_lnA = 0.0;
  bool logpower_domain_nonempty = false;
};

// Fits the minimal A with |F(z)| <= A exp(T_{(2^sigma-1)tau, sigma, H}(1/|y|))
// on the sample grid, then refines the grid toward y -> 0 twice; reports FAIL
// if the fitted A doubles across both refinements.
GrowthCheckResult growth_check(const TubeFunction& F, const GevreyParams& params, double H,
                               const GrowthSampleSpec& spec = {},
                               ExecPolicy policy = ExecPolicy::Parallel);

std::string to_text(const PairingResult& r);
std::string to_text(const DirectPairingResult& r);
std::string to_text(const GrowthCheckResult& r);

}  // namespace egv
