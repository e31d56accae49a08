#include "egv/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "egv/associated.hpp"
#include "egv/quadrature.hpp"
#include "egv/report.hpp"

namespace egv {

namespace {

using cplx = std::complex<double>;

// Panel edges on [k0, k1]: the coarse split plus dyadic grading toward each
// real singularity of F, down to min_scale (the pole distance at the smallest
// height matters for the inner integrals).
std::vector<double> build_x_edges(double k0, double k1, const std::vector<double>& singular,
                                  double min_scale) {
  std::vector<double> edges;
  const int base = 8;
  for (int i = 0; i <= base; ++i)
    edges.push_back(k0 + (k1 - k0) * i / base);
  const double L = k1 - k0;
  for (double s : singular) {
    if (s <= k0 || s >= k1) continue;
    edges.push_back(s);
    for (double step = 0.5 * L; step > min_scale; step *= 0.5) {
      if (s + step < k1) edges.push_back(s + step);
      if (s - step > k0) edges.push_back(s - step);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

struct XScheme {
  std::vector<double> nodes;
  std::vector<double> weights;
};

XScheme build_scheme(const std::vector<double>& edges, int order) {
  const auto& rule = GaussLegendre::order(order);
  XScheme s;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      s.nodes.push_back(mid + half * rule.nodes[i]);
      s.weights.push_back(half * rule.weights[i]);
    }
  }
  return s;
}

std::vector<PointDerivs> build_tables(const TestFunction& phi, const std::vector<double>& xs,
                                      int n_top, ExecPolicy policy) {
  std::vector<PointDerivs> tables(xs.size());
  for_each_index(policy, xs.size(), [&](std::size_t i) {
    tables[i] = compute_point_derivs(phi, std::span<const double>(&xs[i], 1), n_top);
  });
  return tables;
}

}  // namespace

PairingResult stokes_pairing(const TubeFunction& F, const AlmostAnalyticExtension& ext,
                             double Y, const QuadratureSpec& spec, ExecPolicy policy) {
  if (F.dim != 1 || ext.dim() != 1)
    throw ParameterError("stokes_pairing: implemented for d = 1");
  if (Y == 0.0 || std::abs(Y) >= F.gamma)
    throw ParameterError("stokes_pairing: need 0 < |Y| < gamma");
  if ((Y > 0.0) != (F.cone_sign > 0))
    throw ParameterError("stokes_pairing: Y must lie in the tube cone");

  const Box K = ext.phi().support_box();
  const double k0 = K.lo[0], k1 = K.hi[0];

  // snap the t floor to a dyadic level
  int levels = std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / spec.t_min))));
  const double t_floor = std::pow(2.0, -levels);

  const auto edges = build_x_edges(k0, k1, F.singular_x, 0.25 * t_floor * std::abs(Y));
  const XScheme lo = build_scheme(edges, spec.gl_order);
  const XScheme hi = build_scheme(edges, 2 * spec.gl_order);

  const int n_top =
      static_cast<int>(ext.contributing_max_order(0.25 * t_floor * std::abs(Y))) + 1;
  const auto tab_lo = build_tables(ext.phi(), lo.nodes, n_top, policy);
  const auto tab_hi = build_tables(ext.phi(), hi.nodes, n_top, policy);

  PairingResult res;

  // surface term int_K F(x+iY) Phi(x+iY) dx
  {
    auto sweep = [&](const XScheme& s, const std::vector<PointDerivs>& tab) {
      const auto terms = map_index<cplx>(policy, s.nodes.size(), [&](std::size_t i) {
        const double yv = Y;
        return s.weights[i] * F(s.nodes[i], Y) *
               ext.evaluate_at(tab[i], std::span<const double>(&yv, 1));
      });
      cplx acc(0.0, 0.0);
      for (const auto& t : terms) acc += t;
      return acc;
    };
    const cplx s_lo = sweep(lo, tab_lo);
    const cplx s_hi = sweep(hi, tab_hi);
    res.surface_term = s_hi;
    res.error_estimate += std::abs(s_hi - s_lo);
  }

  // inner x integral of F * dbarPhi at height t (always the fine scheme)
  auto g_of_t = [&](double t) {
    const double yv = t * Y;
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < hi.nodes.size(); ++i)
      acc += hi.weights[i] * F(hi.nodes[i], yv) *
             ext.dbar_at(tab_hi[i], std::span<const double>(&yv, 1), 0);
    return acc;
  };

  struct TPanel {
    double a, b;
    cplx value;
    double err;
  };
  auto eval_tpanel = [&](double a, double b) {
    const auto& rlo = GaussLegendre::order(spec.gl_order);
    const auto& rhi = GaussLegendre::order(2 * spec.gl_order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    // map over the union of both rules' nodes
    std::vector<double> ts;
    for (double u : rlo.nodes) ts.push_back(mid + half * u);
    for (double u : rhi.nodes) ts.push_back(mid + half * u);
    const auto gv = map_index<cplx>(policy, ts.size(), [&](std::size_t i) { return g_of_t(ts[i]); });
    cplx vlo(0.0, 0.0), vhi(0.0, 0.0);
    for (std::size_t i = 0; i < rlo.nodes.size(); ++i) vlo += half * rlo.weights[i] * gv[i];
    for (std::size_t i = 0; i < rhi.nodes.size(); ++i)
      vhi += half * rhi.weights[i] * gv[rlo.nodes.size() + i];
    return TPanel{a, b, vhi, std::abs(vhi - vlo)};
  };

  std::vector<TPanel> panels;
  for (int l = 0; l < levels; ++l)
    panels.push_back(eval_tpanel(std::pow(2.0, -l - 1), std::pow(2.0, -l)));

  auto total_err = [&]() {
    double e = 0.0;
    for (const auto& p : panels) e += p.err;
    return e;
  };
  if (spec.adaptive) {
    int splits = 0;
    while (total_err() > 0.25 * spec.tol && splits < spec.max_extra_splits) {
      std::size_t worst = 0;
      for (std::size_t i = 1; i < panels.size(); ++i)
        if (panels[i].err > panels[worst].err) worst = i;
      const TPanel p = panels[worst];
      const double mid = 0.5 * (p.a + p.b);
      panels[worst] = eval_tpanel(p.a, mid);
      panels.push_back(eval_tpanel(mid, p.b));
      ++splits;
    }
  }

  cplx vol(0.0, 0.0);
  // deterministic order: sort panels by left edge before accumulating
  std::sort(panels.begin(), panels.end(),
            [](const TPanel& a, const TPanel& b) { return a.a < b.a; });
  for (const auto& p : panels) vol += p.value;
  const cplx two_iY(0.0, 2.0 * Y);
  res.volume_term = two_iY * vol;
  res.error_estimate += std::abs(two_iY) * total_err();

  // [0, t_floor] remainder: bounded by t_floor * max |g| sampled below the floor
  double gmax = 0.0;
  for (double f : {1.0, 0.5, 0.25}) gmax = std::max(gmax, std::abs(g_of_t(t_floor * f)));
  res.error_estimate += std::abs(two_iY) * t_floor * gmax;

  res.value = res.surface_term + res.volume_term;
  return res;
}

DirectPairingResult direct_pairing(const TubeFunction& F, const TestFunction& phi,
                                   std::span<const double> t_sequence, double Y, double tol) {
  if (F.dim != 1 || phi.dim() != 1)
    throw ParameterError("direct_pairing: implemented for d = 1");
  for (std::size_t i = 1; i < t_sequence.size(); ++i)
    if (!(t_sequence[i] < t_sequence[i - 1]))
      throw ParameterError("direct_pairing: t sequence must be strictly decreasing");
  if (t_sequence.empty()) throw ParameterError("direct_pairing: empty t sequence");

  const Box K = phi.support_box();
  DirectPairingResult res;
  std::vector<cplx> vals;
  for (double t : t_sequence) {
    const double yv = t * Y;
    const auto r = integrate_adaptive(
        [&](double x) {
          const double xv = x;
          return F(x, yv) * phi.eval(std::span<const double>(&xv, 1));
        },
        K.lo[0], K.hi[0], 0.01 * tol, 32, 48, F.singular_x);
    vals.push_back(r.value);
    res.trace.push_back({t, r.value.real(), r.value.imag()});
  }

  // Neville extrapolation to t = 0
  const std::size_t n = vals.size();
  std::vector<cplx> diag;
  std::vector<cplx> row = vals;
  diag.push_back(row[0]);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = n - 1; k >= j; --k) {
      const double tk = t_sequence[k], tkj = t_sequence[k - j];
      row[k] = (tk * row[k - 1] - tkj * row[k]) / (tk - tkj);
      if (k == j) break;
    }
    diag.push_back(row[j]);
  }
  res.value = diag.back();
  if (n >= 2) {
    res.last_delta = std::abs(diag[n - 1] - diag[n - 2]);
    res.converged = res.last_delta <= tol;
  } else {
    res.converged = false;
  }
  return res;
}

GrowthCheckResult growth_check(const TubeFunction& F, const GevreyParams& params, double H,
                               const GrowthSampleSpec& spec, ExecPolicy policy) {
  if (F.dim != 1) throw ParameterError("growth_check: implemented for d = 1");
  if (!(H > 0.0)) throw ParameterError("growth_check: H must be positive");
  if ((spec.Y > 0.0) != (F.cone_sign > 0))
    throw ParameterError("growth_check: Y must lie in the tube cone");

  GrowthCheckResult res;
  res.H = H;
  res.threshold_params =
      GevreyParams((std::pow(2.0, params.sigma) - 1.0) * params.tau, params.sigma, H);

  struct Sample {
    double req;
    double x, t, lnF, thr;
    bool lp_ok;
    double lp_req;
  };

  auto fit_on = [&](double t_lo, int t_count, bool record_worst) {
    const auto ts = log_grid(t_lo, spec.t_hi, t_count);
    std::vector<double> xs(static_cast<std::size_t>(spec.x_count));
    for (int i = 0; i < spec.x_count; ++i)
      xs[static_cast<std::size_t>(i)] =
          F.U.lo[0] + (F.U.hi[0] - F.U.lo[0]) * i / (spec.x_count - 1);

    const std::size_t total = ts.size() * xs.size();
    const auto samples = map_index<Sample>(policy, total, [&](std::size_t idx) {
      const double t = ts[idx / xs.size()];
      const double x = xs[idx % xs.size()];
      const double y = t * spec.Y;
      const double absF = std::abs(F(x, y));
      const double lnF = absF > 0.0 ? std::log(absF) : -std::numeric_limits<double>::infinity();
      const double thr = T_eval(res.threshold_params, 1.0 / std::abs(y)).value;
      Sample s{lnF - thr, x, t, lnF, thr, false, 0.0};
      // log-power variant, only where its exponent is in the monotone regime
      const double inv_y = 1.0 / std::abs(y);
      if (std::log(inv_y) > std::exp(1.0 / params.sigma)) {
        const double lny = std::log(inv_y);
        const double expo = std::pow(lny / std::log(lny), 1.0 / (params.sigma - 1.0)) * lny;
        s.lp_ok = true;
        s.lp_req = lnF - H * expo;
      }
      return s;
    });
    double best = -std::numeric_limits<double>::infinity();
    double lp_best = -std::numeric_limits<double>::infinity();
    bool lp_any = false;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (samples[i].req > best) {
        best = samples[i].req;
        arg = i;
      }
      if (samples[i].lp_ok) {
        lp_any = true;
        lp_best = std::max(lp_best, samples[i].lp_req);
      }
    }
    if (record_worst) {
      res.worst_x = samples[arg].x;
      res.worst_t = samples[arg].t;
      res.worst_lnF = samples[arg].lnF;
      res.worst_threshold = samples[arg].thr;
      res.logpower_lnA = lp_best;
      res.logpower_domain_nonempty = lp_any;
    }
    return best;
  };

  double t_lo = spec.t_lo;
  int t_count = spec.t_count;
  res.lnA_by_refinement.push_back(fit_on(t_lo, t_count, false));
  for (int r = 0; r < spec.refinements; ++r) {
    t_lo *= 0.5;
    t_count *= 2;
    res.lnA_by_refinement.push_back(fit_on(t_lo, t_count, r + 1 == spec.refinements));
  }
  res.lnA = res.lnA_by_refinement.front();

  bool doubling = true;
  for (std::size_t i = 1; i < res.lnA_by_refinement.size(); ++i)
    if (res.lnA_by_refinement[i] < res.lnA_by_refinement[i - 1] + std::log(2.0)) doubling = false;
  res.pass = !doubling;
  return res;
}

std::string to_text(const PairingResult& r) {
  TextReport t;
  t.section("stokes_pairing");
  t.kv("value_re", r.value.real());
  t.kv("value_im", r.value.imag());
  t.kv("error_estimate", r.error_estimate);
  t.kv("surface_re", r.surface_term.real());
  t.kv("surface_im", r.surface_term.imag());
  t.kv("volume_re", r.volume_term.real());
  t.kv("volume_im", r.volume_term.imag());
  return t.str();
}

std::string to_text(const DirectPairingResult& r) {
  TextReport t;
  t.section("direct_pairing");
  t.kv("value_re", r.value.real());
  t.kv("value_im", r.value.imag());
  t.kv("converged", r.converged);
  t.kv("last_delta", r.last_delta);
  std::vector<std::vector<double>> rows;
  for (const auto& row : r.trace) rows.push_back({row[0], row[1], row[2]});
  t.table({"t", "re", "im"}, rows);
  return t.str();
}

std::string to_text(const GrowthCheckResult& r) {
  TextReport t;
  t.section("growth_check");
  t.kv("pass", r.pass);
  t.kv("H", r.H);
  t.kv("lnA", r.lnA);
  t.kv("A", std::exp(r.lnA));
  for (std::size_t i = 0; i < r.lnA_by_refinement.size(); ++i)
    t.kv("lnA_refinement_" + std::to_string(i), r.lnA_by_refinement[i]);
  t.kv("worst_x", r.worst_x);
  t.kv("worst_t", r.worst_t);
  t.kv("worst_lnF", r.worst_lnF);
  t.kv("worst_threshold", r.worst_threshold);
  t.kv("logpower_lnA", r.logpower_lnA);
  t.kv("logpower_domain_nonempty", r.logpower_domain_nonempty);
  return t.str();
}

}  // namespace egv
