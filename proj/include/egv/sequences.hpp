#pragma once

#include <optional>
#include <string>
#include <vector>

#include "egv/params.hpp"

namespace egv {

// Log-domain evaluation of the weight sequences
//
//   M_p = p^(tau p^sigma)                    log_M(p) = tau p^sigma ln p
//   m_p = p^(tau ((2p)^(sigma-1) - 1))       log_m(p) = tau ((2p)^(sigma-1) - 1) ln p
//
// with the conventions M_0 = m_0 = 1 (0^0 := 1), so both logs are 0 at
// p = 0 and p = 1. Raw M_p overflows doubles already at p ~ 5, hence
// everything downstream works with logs.

enum class WeightKind { M, m };

double log_M(long p, const GevreyParams& params);
double log_m(long p, const GevreyParams& params);
double log_weight(WeightKind kind, long p, const GevreyParams& params);

struct LogWeightSequence {
  GevreyParams params;
  WeightKind kind = WeightKind::M;
  double operator()(long p) const { return log_weight(kind, p, params); }
};

// per-p requirement on ln C for condition (M.2)~': log_M(p+1) <= (p^sigma+1) ln C + log_M(p)
double m2prime_requirement(long p, const GevreyParams& params);

// per-(p,q) requirement on ln C for condition (M.2)~:
//   log_M(p+q; tau) <= (p^sigma + q^sigma + 1) ln C
//                      + log_M(p; 2^(sigma-1) tau) + log_M(q; 2^(sigma-1) tau)
double m2_requirement(long p, long q, const GevreyParams& params);

struct ConditionReport {
  GevreyParams params;
  long p_max = 0;

  // (M.1) log-convexity: 2 log_M(p) <= log_M(p-1) + log_M(p+1)
  bool m1_holds = false;
  std::optional<long> m1_first_violation;

  // minimal ln C over p <= p_max for (M.2)~'
  double m2prime_min_lnC = 0.0;
  long m2prime_argmax_p = 0;
  double m2prime_lnC_at_p1 = 0.0;

  // minimal ln C over p, q <= p_max for (M.2)~
  double m2_min_lnC = 0.0;
  long m2_argmax_p = 0;
  long m2_argmax_q = 0;

  // (M.3)' summability diagnostic: partial sums of M_{p-1}/M_p plus a
  // geometric tail bound from the last ratio.
  double m3_partial_sum = 0.0;
  double m3_last_term = 0.0;
  double m3_tail_bound = 0.0;
  double m3_max_ratio_from_p2 = 0.0;  // max over p >= 2 of M_{p-1}/M_p
  bool m3_converged = false;
};

ConditionReport check_conditions(const GevreyParams& params, long p_max);

std::string to_text(const ConditionReport& report);

}  // namespace egv
