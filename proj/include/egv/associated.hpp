#pragma once

#include <span>
#include <string>
#include <vector>

#include "egv/parallel.hpp"
#include "egv/params.hpp"

namespace egv {

// Associated functions of the weight sequence, evaluated as forward sup-scans
// over integer p in the log domain:
//
//   T(k)  = sup_p [ p^sigma ln h + p ln k - tau p^sigma ln p ]
//   T*(k) = sup_p [ p^sigma ln h + p ln k - p (tau p^(sigma-1) - 1) ln p ]
//
// with the p = 0 term equal to 0. The scan stops once ln p exceeds
// (max(0, ln h) + max(0, ln k) p^(1-sigma) + 1) / tau and the current term has
// dropped a full unit below the best: past that point the negative exponent
// term dominates both positive contributions, every later term is below
// -p^sigma, and the sup cannot move. p is capped at 10^6 as a guard.

struct AssocEvaluation {
  double value = 0.0;   // natural-log units, >= 0
  long argmax_p = 0;    // smallest maximizing p
  long scanned_up_to = 0;
};

AssocEvaluation T_eval(const GevreyParams& params, double k);
AssocEvaluation T_star_eval(const GevreyParams& params, double k);

std::vector<AssocEvaluation> T_eval_grid(const GevreyParams& params,
                                         std::span<const double> ks,
                                         ExecPolicy policy = ExecPolicy::Parallel);

// Explicit constants of the asymptotic sandwich:
//   c1 = ((sigma-1)/(tau sigma))^(1/(sigma-1))
//   c2 = h^(-(sigma-1)/tau) e^((sigma-1)/sigma) (sigma-1)/(tau sigma)
// k_min guards the exponent so ln(c2 ln k) >= 1.
struct BoundConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  double k_min = 0.0;
};

BoundConstants bound_constants(const GevreyParams& params);

// Sandwich exponents, excluding the unknown multiplicative constants A1, A2:
//   log_upper = c1 ln k (ln k / ln(c2 ln k))^(1/(sigma-1))
//   log_lower = (1/2)((sigma-1)/sigma) * log_upper
struct SandwichBounds {
  double log_lower = 0.0;
  double log_upper = 0.0;
  BoundConstants constants;
};

SandwichBounds bounds(const GevreyParams& params, double k);

// log-spaced grid helper (inclusive endpoints)
std::vector<double> log_grid(double lo, double hi, int n);

struct FitOutcome {
  bool pass = false;
  double fitted = 0.0;         // the fitted constant (meaning depends on part)
  double worst_point_k = 0.0;  // grid point with the least slack
  double worst_point_l = 0.0;  // used by part (c)
  double worst_slack = 0.0;    // min over grid of (rhs - lhs); >= 0 iff pass
  std::string detail;
};

struct SandwichFit {
  bool pass = false;
  double lnA1 = 0.0;
  double lnA2 = 0.0;
  long violations_fit_grid = 0;
  long violations_dense_grid = 0;  // after refitting grid x10 denser check
  double k_min = 0.0;
};

struct AppendixReport {
  GevreyParams params;
  // part (a): strict monotonicity in h over the grid plus T <= T* <= T_{C h}
  bool a_monotone_pass = false;
  double a_monotone_h1 = 0.0, a_monotone_h2 = 0.0;
  FitOutcome a_star_fit;  // fitted C with T* <= T_{C h}
  // part (b): T_h1 + T_h2 <= T_{tau/2^(sigma-1), c} + ln C
  FitOutcome b_fit;       // fitted = lnC; detail carries c
  double b_fitted_c = 0.0;
  // part (c): T_H(l) <= T_h(1/k) + k l
  FitOutcome c_fit;       // fitted = largest passing H
  // Lemma sandwich fit on the k grid
  SandwichFit sandwich;

  bool all_pass() const {
    return a_monotone_pass && a_star_fit.pass && b_fit.pass && c_fit.pass && sandwich.pass;
  }
};

// Runs all Appendix Lemma parts for one parameter triple. h_pair supplies the
// (h1, h2) used by the monotonicity check and part (b); part (a)'s star fit,
// part (c) and the sandwich use params.h.
AppendixReport verify_appendix(const GevreyParams& params, double h1, double h2,
                               std::span<const double> k_grid,
                               std::span<const double> l_grid,
                               ExecPolicy policy = ExecPolicy::Parallel);

// Fit the sandwich constants on k_grid (points below the k_min guard are
// skipped), then re-check on a denser grid with the same endpoints.
SandwichFit fit_sandwich(const GevreyParams& params, std::span<const double> k_grid,
                         int dense_factor = 10, ExecPolicy policy = ExecPolicy::Parallel);

std::string to_text(const AppendixReport& report);

}  // namespace egv
