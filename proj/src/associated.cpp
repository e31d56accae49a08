#include "egv/associated.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "egv/report.hpp"

namespace egv {

namespace {

constexpr long kScanCap = 1000000;

// Kind of exponent in the denominator of the sup terms.
enum class SupKind { T, TStar };

double term_at(SupKind kind, const GevreyParams& g, double lnh, double lnk, long p) {
  if (p == 0) return 0.0;
  const double pd = static_cast<double>(p);
  const double lnp = std::log(pd);
  const double ps = std::pow(pd, g.sigma);
  if (kind == SupKind::T) return ps * lnh + pd * lnk - g.tau * ps * lnp;
  const double coeff = pd * (g.tau * std::pow(pd, g.sigma - 1.0) - 1.0);
  return ps * lnh + pd * lnk - coeff * lnp;
}

// Forward sup-scan. The early-out condition guarantees the current term is
// below -p^sigma and every later term is smaller still (see header comment),
// so the recorded sup is exact.
AssocEvaluation sup_scan(SupKind kind, const GevreyParams& g, double k) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw DomainError("associated: k must be positive and finite");
  const double lnh = std::log(g.h);
  const double lnk = std::log(k);
  const double pos_lnh = std::max(0.0, lnh);
  const double pos_lnk = std::max(0.0, lnk);
  // T uses the full tau in the dominant exponent; T* only tau/2 once
  // tau p^(sigma-1) >= 2.
  const double tau_eff = (kind == SupKind::T) ? g.tau : 0.5 * g.tau;

  AssocEvaluation best;  // p = 0 term
  long p = 0;
  while (p < kScanCap) {
    ++p;
    const double f = term_at(kind, g, lnh, lnk, p);
    if (f > best.value) {
      best.value = f;
      best.argmax_p = p;
    }
    if (p >= 2) {
      const double pd = static_cast<double>(p);
      const double lnp = std::log(pd);
      const bool star_ok =
          (kind == SupKind::T) || (g.tau * std::pow(pd, g.sigma - 1.0) >= 2.0);
      const double threshold =
          (pos_lnh + pos_lnk * std::pow(pd, 1.0 - g.sigma) + 1.0) / tau_eff;
      if (star_ok && lnp > threshold && f < best.value - 1.0) break;
    }
  }
  best.scanned_up_to = p;
  return best;
}

}  // namespace

AssocEvaluation T_eval(const GevreyParams& params, double k) {
  return sup_scan(SupKind::T, params, k);
}

AssocEvaluation T_star_eval(const GevreyParams& params, double k) {
  return sup_scan(SupKind::TStar, params, k);
}

std::vector<AssocEvaluation> T_eval_grid(const GevreyParams& params,
                                         std::span<const double> ks, ExecPolicy policy) {
  return map_index<AssocEvaluation>(policy, ks.size(),
                                    [&](std::size_t i) { return T_eval(params, ks[i]); });
}

BoundConstants bound_constants(const GevreyParams& params) {
  const double s = params.sigma, t = params.tau, h = params.h;
  BoundConstants c;
  c.c1 = std::pow((s - 1.0) / (t * s), 1.0 / (s - 1.0));
  c.c2 = std::pow(h, -(s - 1.0) / t) * std::exp((s - 1.0) / s) * (s - 1.0) / (t * s);
  // keep ln(c2 ln k) >= 1, and k >= e^2 regardless
  const double e = std::exp(1.0);
  c.k_min = std::max(std::exp(2.0), std::exp(e / c.c2));
  return c;
}

SandwichBounds bounds(const GevreyParams& params, double k) {
  SandwichBounds b;
  b.constants = bound_constants(params);
  if (!(k >= b.constants.k_min))
    throw DomainError("bounds: k below the k_min guard");
  const double s = params.sigma;
  const double lnk = std::log(k);
  const double ratio = lnk / std::log(b.constants.c2 * lnk);
  b.log_upper = b.constants.c1 * lnk * std::pow(ratio, 1.0 / (s - 1.0));
  b.log_lower = 0.5 * ((s - 1.0) / s) * b.log_upper;
  return b;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 2 || !(lo > 0.0) || !(hi > lo))
    throw ParameterError("log_grid: need n >= 2 and 0 < lo < hi");
  std::vector<double> g(static_cast<std::size_t>(n));
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    g[static_cast<std::size_t>(i)] =
        (i == 0) ? lo : (i == n - 1) ? hi : std::exp(llo + (lhi - llo) * i / (n - 1));
  return g;
}

namespace {

// minimal constant s.t. lhs(k) <= rhs(k) + c for all grid points
struct Envelope {
  double value = -std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
};

template <typename F>
Envelope envelope_max(std::span<const double> grid, F&& f) {
  Envelope e;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = f(grid[i]);
    if (v > e.value) {
      e.value = v;
      e.arg = i;
    }
  }
  return e;
}

}  // namespace

SandwichFit fit_sandwich(const GevreyParams& params, std::span<const double> k_grid,
                         int dense_factor, ExecPolicy policy) {
  SandwichFit fit;
  const BoundConstants bc = bound_constants(params);
  fit.k_min = bc.k_min;

  std::vector<double> ks;
  for (double k : k_grid)
    if (k >= bc.k_min) ks.push_back(k);
  if (ks.size() < 2) {
    fit.pass = false;
    return fit;
  }

  struct Point {
    double up_resid, low_resid;
  };
  auto eval_point = [&](double k) {
    const SandwichBounds sb = bounds(params, k);
    const double T = T_eval(params, k).value;
    return Point{T - sb.log_upper, T - sb.log_lower};
  };

  const auto pts = map_index<Point>(policy, ks.size(),
                                    [&](std::size_t i) { return eval_point(ks[i]); });
  fit.lnA2 = -std::numeric_limits<double>::infinity();
  fit.lnA1 = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    fit.lnA2 = std::max(fit.lnA2, p.up_resid);
    fit.lnA1 = std::min(fit.lnA1, p.low_resid);
  }
  fit.violations_fit_grid = 0;
  for (const auto& p : pts)
    if (p.up_resid > fit.lnA2 || p.low_resid < fit.lnA1) ++fit.violations_fit_grid;

  // generalization check: same endpoints, dense_factor x the point count
  const int n_dense = static_cast<int>(ks.size()) * dense_factor;
  const auto dense = log_grid(ks.front(), ks.back(), n_dense);
  const auto dpts = map_index<Point>(policy, dense.size(),
                                     [&](std::size_t i) { return eval_point(dense[i]); });
  fit.violations_dense_grid = 0;
  for (const auto& p : dpts)
    if (p.up_resid > fit.lnA2 || p.low_resid < fit.lnA1) ++fit.violations_dense_grid;

  fit.pass = std::isfinite(fit.lnA1) && std::isfinite(fit.lnA2) &&
             fit.violations_fit_grid == 0 && fit.violations_dense_grid == 0;
  return fit;
}

AppendixReport verify_appendix(const GevreyParams& params, double h1, double h2,
                               std::span<const double> k_grid,
                               std::span<const double> l_grid, ExecPolicy policy) {
  if (k_grid.empty() || l_grid.empty())
    throw ParameterError("verify_appendix: grids must be nonempty");
  for (double k : k_grid)
    if (!(k > 0.0)) throw ParameterError("verify_appendix: k grid must be positive");
  for (double l : l_grid)
    if (!(l > 0.0)) throw ParameterError("verify_appendix: l grid must be positive");
  if (!(h1 > 0.0 && h2 > 0.0)) throw ParameterError("verify_appendix: h1, h2 must be positive");

  AppendixReport rep{params};
  const double hlo = std::min(h1, h2), hhi = std::max(h1, h2);
  rep.a_monotone_h1 = hlo;
  rep.a_monotone_h2 = hhi;

  // part (a) strict monotonicity in h
  {
    const GevreyParams glo = params.with_h(hlo), ghi = params.with_h(hhi);
    rep.a_monotone_pass = hlo < hhi;
    for (double k : k_grid) {
      if (!(T_eval(glo, k).value < T_eval(ghi, k).value)) {
        rep.a_monotone_pass = false;
        break;
      }
    }
    if (hlo == hhi) rep.a_monotone_pass = false;
  }

  // part (a) star fit: smallest C >= 1 with T <= T* <= T_{C h} on the grid.
  {
    const auto t_star = map_index<double>(
        policy, k_grid.size(), [&](std::size_t i) { return T_star_eval(params, k_grid[i]).value; });
    const auto t_plain = map_index<double>(
        policy, k_grid.size(), [&](std::size_t i) { return T_eval(params, k_grid[i]).value; });

    bool t_le_star = true;
    for (std::size_t i = 0; i < k_grid.size(); ++i)
      if (t_plain[i] > t_star[i] + 1e-12) t_le_star = false;

    auto pass_at = [&](double C) {
      for (std::size_t i = 0; i < k_grid.size(); ++i)
        if (t_star[i] > T_eval(params.with_h(C * params.h), k_grid[i]).value) return false;
      return true;
    };
    double hi = 1.0;
    int guard = 0;
    while (!pass_at(hi) && guard++ < 60) hi *= 2.0;
    if (guard >= 60 || !t_le_star) {
      rep.a_star_fit.pass = false;
      rep.a_star_fit.detail = t_le_star ? "no finite C found" : "T <= T* failed";
    } else {
      double lo = hi * 0.5;
      if (hi == 1.0) lo = 1.0;
      for (int it = 0; it < 60 && lo < hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (pass_at(mid)) hi = mid; else lo = mid;
      }
      rep.a_star_fit.pass = true;
      rep.a_star_fit.fitted = hi;
      double worst = std::numeric_limits<double>::infinity();
      std::size_t warg = 0;
      const GevreyParams gH = params.with_h(hi * params.h);
      for (std::size_t i = 0; i < k_grid.size(); ++i) {
        const double slack = T_eval(gH, k_grid[i]).value - t_star[i];
        if (slack < worst) { worst = slack; warg = i; }
      }
      rep.a_star_fit.worst_slack = worst;
      rep.a_star_fit.worst_point_k = k_grid[warg];
    }
  }

  // part (b): grid-search c over powers of two, envelope-fit lnC for each,
  // keep the c with the smallest lnC.
  {
    const GevreyParams g1 = params.with_h(h1), g2 = params.with_h(h2);
    const GevreyParams ghalf(params.tau / params.two_pow_sm1(), params.sigma, params.h);
    const auto lhs = map_index<double>(policy, k_grid.size(), [&](std::size_t i) {
      return T_eval(g1, k_grid[i]).value + T_eval(g2, k_grid[i]).value;
    });
    double best_lnC = std::numeric_limits<double>::infinity();
    double best_c = 0.0;
    std::size_t best_arg = 0;
    for (int e = 0; e <= 10; ++e) {
      const double c = std::pow(2.0, e);
      const GevreyParams gc = ghalf.with_h(c);
      Envelope env;
      for (std::size_t i = 0; i < k_grid.size(); ++i) {
        const double req = lhs[i] - T_eval(gc, k_grid[i]).value;
        if (req > env.value) { env.value = req; env.arg = i; }
      }
      if (env.value < best_lnC) {
        best_lnC = env.value;
        best_c = c;
        best_arg = env.arg;
      }
    }
    rep.b_fit.pass = std::isfinite(best_lnC);
    rep.b_fit.fitted = best_lnC;
    rep.b_fitted_c = best_c;
    rep.b_fit.worst_point_k = k_grid[best_arg];
    rep.b_fit.detail = "c = " + fmt_g(best_c) + ", lnC = " + fmt_g(best_lnC);
  }

  // part (c): largest H with T_H(l) <= min_k [T_h(1/k) + k l] on the grids.
  {
    const auto t_inv = map_index<double>(policy, k_grid.size(), [&](std::size_t i) {
      return T_eval(params, 1.0 / k_grid[i]).value;
    });
    std::vector<double> rhs(l_grid.size());
    std::vector<std::size_t> rhs_argk(l_grid.size());
    for (std::size_t j = 0; j < l_grid.size(); ++j) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t arg = 0;
      for (std::size_t i = 0; i < k_grid.size(); ++i) {
        const double v = t_inv[i] + k_grid[i] * l_grid[j];
        if (v < best) { best = v; arg = i; }
      }
      rhs[j] = best;
      rhs_argk[j] = arg;
    }
    auto pass_at = [&](double H) {
      const GevreyParams gH = params.with_h(H);
      for (std::size_t j = 0; j < l_grid.size(); ++j)
        if (T_eval(gH, l_grid[j]).value > rhs[j]) return false;
      return true;
    };
    double H = params.h;
    int guard = 0;
    if (pass_at(H)) {
      double lo = H, hi = H;
      while (pass_at(hi * 2.0) && guard++ < 60) hi *= 2.0;
      lo = hi;
      double top = hi * 2.0;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + top);
        if (pass_at(mid)) lo = mid; else top = mid;
      }
      rep.c_fit.pass = true;
      rep.c_fit.fitted = lo;
    } else {
      while (!pass_at(H) && guard++ < 60) H *= 0.5;
      rep.c_fit.pass = guard < 60;
      rep.c_fit.fitted = H;
      if (!rep.c_fit.pass) rep.c_fit.detail = "no positive H satisfies the grid inequality";
    }
    if (rep.c_fit.pass) {
      const GevreyParams gH = params.with_h(rep.c_fit.fitted);
      double worst = std::numeric_limits<double>::infinity();
      std::size_t warg = 0;
      for (std::size_t j = 0; j < l_grid.size(); ++j) {
        const double slack = rhs[j] - T_eval(gH, l_grid[j]).value;
        if (slack < worst) { worst = slack; warg = j; }
      }
      rep.c_fit.worst_slack = worst;
      rep.c_fit.worst_point_l = l_grid[warg];
      rep.c_fit.worst_point_k = k_grid[rhs_argk[warg]];
    }
  }

  rep.sandwich = fit_sandwich(params, k_grid, 10, policy);
  return rep;
}

std::string to_text(const AppendixReport& r) {
  TextReport t;
  t.section("appendix");
  t.kv("tau", r.params.tau);
  t.kv("sigma", r.params.sigma);
  t.kv("h", r.params.h);
  t.kv("a_monotone_pass", r.a_monotone_pass);
  t.kv("a_monotone_h1", r.a_monotone_h1);
  t.kv("a_monotone_h2", r.a_monotone_h2);
  t.kv("a_star_pass", r.a_star_fit.pass);
  t.kv("a_star_C", r.a_star_fit.fitted);
  t.kv("a_star_worst_k", r.a_star_fit.worst_point_k);
  t.kv("a_star_worst_slack", r.a_star_fit.worst_slack);
  t.kv("b_pass", r.b_fit.pass);
  t.kv("b_lnC", r.b_fit.fitted);
  t.kv("b_c", r.b_fitted_c);
  t.kv("b_worst_k", r.b_fit.worst_point_k);
  t.kv("c_pass", r.c_fit.pass);
  t.kv("c_H", r.c_fit.fitted);
  t.kv("c_worst_l", r.c_fit.worst_point_l);
  t.kv("c_worst_k", r.c_fit.worst_point_k);
  t.kv("c_worst_slack", r.c_fit.worst_slack);
  t.kv("sandwich_pass", r.sandwich.pass);
  t.kv("sandwich_lnA1", r.sandwich.lnA1);
  t.kv("sandwich_lnA2", r.sandwich.lnA2);
  t.kv("sandwich_violations_fit", r.sandwich.violations_fit_grid);
  t.kv("sandwich_violations_dense", r.sandwich.violations_dense_grid);
  t.kv("sandwich_k_min", r.sandwich.k_min);
  t.kv("all_pass", r.all_pass());
  return t.str();
}

}  // namespace egv
