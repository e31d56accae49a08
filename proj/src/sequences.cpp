#include "egv/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "egv/report.hpp"

namespace egv {

double log_M(long p, const GevreyParams& params) {
  if (p < 0) throw DomainError("log_M: p must be >= 0");
  if (p <= 1) return 0.0;
  const double pd = static_cast<double>(p);
  return params.tau * std::pow(pd, params.sigma) * std::log(pd);
}

double log_m(long p, const GevreyParams& params) {
  if (p < 0) throw DomainError("log_m: p must be >= 0");
  if (p <= 1) return 0.0;
  const double pd = static_cast<double>(p);
  return params.tau * (std::pow(2.0 * pd, params.sigma - 1.0) - 1.0) * std::log(pd);
}

double log_weight(WeightKind kind, long p, const GevreyParams& params) {
  return kind == WeightKind::M ? log_M(p, params) : log_m(p, params);
}

double m2prime_requirement(long p, const GevreyParams& params) {
  const double pd = static_cast<double>(p);
  return (log_M(p + 1, params) - log_M(p, params)) / (std::pow(pd, params.sigma) + 1.0);
}

double m2_requirement(long p, long q, const GevreyParams& params) {
  const GevreyParams shifted = params.with_tau(params.tau * params.two_pow_sm1());
  const double num = log_M(p + q, params) - log_M(p, shifted) - log_M(q, shifted);
  const double den = std::pow(static_cast<double>(p), params.sigma) +
                     std::pow(static_cast<double>(q), params.sigma) + 1.0;
  return num / den;
}

ConditionReport check_conditions(const GevreyParams& params, long p_max) {
  if (p_max < 3) throw ParameterError("check_conditions: p_max must be >= 3");

  ConditionReport report{params};
  report.p_max = p_max;

  // (M.1): 2 log_M(p) <= log_M(p-1) + log_M(p+1), 1 <= p <= p_max-1.
  report.m1_holds = true;
  for (long p = 1; p + 1 <= p_max; ++p) {
    const double lhs = 2.0 * log_M(p, params);
    const double rhs = log_M(p - 1, params) + log_M(p + 1, params);
    if (lhs > rhs + 1e-12 * std::max(1.0, std::abs(rhs))) {
      report.m1_holds = false;
      report.m1_first_violation = p;
      break;
    }
  }

  // (M.2)~'
  report.m2prime_min_lnC = 0.0;
  report.m2prime_argmax_p = 0;
  for (long p = 0; p <= p_max; ++p) {
    const double req = m2prime_requirement(p, params);
    if (req > report.m2prime_min_lnC) {
      report.m2prime_min_lnC = req;
      report.m2prime_argmax_p = p;
    }
  }
  report.m2prime_lnC_at_p1 = m2prime_requirement(1, params);

  // (M.2)~ over the (p, q) square
  report.m2_min_lnC = 0.0;
  report.m2_argmax_p = 0;
  report.m2_argmax_q = 0;
  for (long p = 0; p <= p_max; ++p) {
    for (long q = 0; q <= p_max; ++q) {
      const double req = m2_requirement(p, q, params);
      if (req > report.m2_min_lnC) {
        report.m2_min_lnC = req;
        report.m2_argmax_p = p;
        report.m2_argmax_q = q;
      }
    }
  }

  // (M.3)' partial sums of a_p = M_{p-1}/M_p with a geometric tail bound.
  double sum = 0.0;
  double prev_term = 0.0;
  double max_ratio = 0.0;
  for (long p = 1; p <= p_max; ++p) {
    const double term = std::exp(log_M(p - 1, params) - log_M(p, params));
    sum += term;
    if (p >= 2) max_ratio = std::max(max_ratio, term);
    prev_term = term;
  }
  report.m3_partial_sum = sum;
  report.m3_last_term = prev_term;
  const double rho =
      std::exp(log_M(p_max - 1, params) - log_M(p_max, params)) /
      std::exp(log_M(p_max - 2, params) - log_M(p_max - 1, params));
  report.m3_max_ratio_from_p2 = max_ratio;
  if (rho < 1.0) {
    report.m3_tail_bound = prev_term * rho / (1.0 - rho);
    report.m3_converged = true;
  } else {
    report.m3_tail_bound = std::numeric_limits<double>::infinity();
    report.m3_converged = false;
  }
  return report;
}

std::string to_text(const ConditionReport& r) {
  TextReport t;
  t.section("seqcheck");
  t.kv("tau", r.params.tau);
  t.kv("sigma", r.params.sigma);
  t.kv("p_max", static_cast<long long>(r.p_max));
  t.kv("M1_log_convex", r.m1_holds);
  if (r.m1_first_violation)
    t.kv("M1_first_violation_p", static_cast<long long>(*r.m1_first_violation));
  t.kv("M2prime_min_lnC", r.m2prime_min_lnC);
  t.kv("M2prime_min_C", std::exp(r.m2prime_min_lnC));
  t.kv("M2prime_argmax_p", static_cast<long long>(r.m2prime_argmax_p));
  t.kv("M2prime_lnC_at_p1", r.m2prime_lnC_at_p1);
  t.kv("M2_min_lnC", r.m2_min_lnC);
  t.kv("M2_min_C", std::exp(r.m2_min_lnC));
  t.kv("M2_argmax_p", static_cast<long long>(r.m2_argmax_p));
  t.kv("M2_argmax_q", static_cast<long long>(r.m2_argmax_q));
  t.kv("M3_partial_sum", r.m3_partial_sum);
  t.kv("M3_last_term", r.m3_last_term);
  t.kv("M3_tail_bound", r.m3_tail_bound);
  t.kv("M3_max_ratio_from_p2", r.m3_max_ratio_from_p2);
  t.kv("M3_converged", r.m3_converged);
  return t.str();
}

}  // namespace egv
