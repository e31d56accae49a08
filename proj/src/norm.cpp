#include "egv/norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "egv/report.hpp"

namespace egv {

std::vector<std::array<int, 2>> multi_indices(int dim, int total_order) {
  std::vector<std::array<int, 2>> out;
  if (dim == 1) {
    out.push_back({total_order, 0});
  } else {
    for (int a = total_order; a >= 0; --a) out.push_back({a, total_order - a});
  }
  return out;
}

namespace {

std::vector<std::vector<double>> grid_points(const Box& K, int per_axis) {
  std::vector<std::vector<double>> pts;
  if (K.dim == 1) {
    pts.reserve(static_cast<std::size_t>(per_axis));
    for (int i = 0; i < per_axis; ++i) {
      const double t = per_axis == 1 ? 0.5 : static_cast<double>(i) / (per_axis - 1);
      pts.push_back({K.lo[0] + t * (K.hi[0] - K.lo[0])});
    }
  } else {
    pts.reserve(static_cast<std::size_t>(per_axis) * per_axis);
    for (int i = 0; i < per_axis; ++i)
      for (int j = 0; j < per_axis; ++j) {
        const double ti = per_axis == 1 ? 0.5 : static_cast<double>(i) / (per_axis - 1);
        const double tj = per_axis == 1 ? 0.5 : static_cast<double>(j) / (per_axis - 1);
        pts.push_back({K.lo[0] + ti * (K.hi[0] - K.lo[0]), K.lo[1] + tj * (K.hi[1] - K.lo[1])});
      }
  }
  return pts;
}

}  // namespace

NormReport gevrey_norm(const TestFunction& phi, const Box& K, const GevreyParams& params,
                       int alpha_max, int grid_per_axis, ExecPolicy policy) {
  if (alpha_max < 1) throw ParameterError("gevrey_norm: alpha_max must be >= 1");
  if (grid_per_axis < 2) throw ParameterError("gevrey_norm: grid_per_axis must be >= 2");
  if (K.dim != phi.dim()) throw ParameterError("gevrey_norm: box/function dim mismatch");

  NormReport rep{params};
  rep.alpha_max_used = alpha_max;
  rep.grid_per_axis = grid_per_axis;
  rep.per_order_ratio.assign(static_cast<std::size_t>(alpha_max) + 1, 0.0);

  const auto pts = grid_points(K, grid_per_axis);
  const double neg_inf = -std::numeric_limits<double>::infinity();

  double best_ln = neg_inf;
  std::vector<double> cummax_ln(static_cast<std::size_t>(alpha_max) + 1, neg_inf);

  for (int n = 0; n <= alpha_max; ++n) {
    const double ln_denom =
        n == 0 ? 0.0
               : std::pow(static_cast<double>(n), params.sigma) *
                     (std::log(params.h) + params.tau * std::log(static_cast<double>(n)));
    double order_ln = neg_inf;
    for (const auto& alpha : multi_indices(phi.dim(), n)) {
      // NaN marks a non-finite derivative; the throw happens outside the
      // parallel region.
      const auto lnvals = map_index<double>(policy, pts.size(), [&](std::size_t i) {
        const double d = phi.derivative(std::span<const int>(alpha.data(),
                                                             static_cast<std::size_t>(phi.dim())),
                                        pts[i]);
        if (!std::isfinite(d)) return std::numeric_limits<double>::quiet_NaN();
        return d == 0.0 ? neg_inf : std::log(std::abs(d));
      });
      for (std::size_t i = 0; i < lnvals.size(); ++i) {
        if (std::isnan(lnvals[i]))
          throw NumericalError("gevrey_norm: non-finite derivative at |alpha|=" +
                               std::to_string(n) + ", x=" + fmt_g(pts[i][0]));
        order_ln = std::max(order_ln, lnvals[i] - ln_denom);
      }
    }
    rep.per_order_ratio[static_cast<std::size_t>(n)] =
        order_ln == neg_inf ? 0.0 : std::exp(order_ln);
    best_ln = std::max(best_ln, order_ln);
    cummax_ln[static_cast<std::size_t>(n)] = best_ln;
  }

  rep.value = best_ln == neg_inf ? 0.0 : std::exp(best_ln);
  // stabilized: the running max did not move over the last quarter of orders
  const int tail_start = alpha_max - std::max(1, alpha_max / 4);
  rep.stabilized = cummax_ln[static_cast<std::size_t>(tail_start)] ==
                   cummax_ln[static_cast<std::size_t>(alpha_max)];
  return rep;
}

std::string to_text(const NormReport& r) {
  TextReport t;
  t.section("gevrey_norm");
  t.kv("tau", r.params.tau);
  t.kv("sigma", r.params.sigma);
  t.kv("h", r.params.h);
  t.kv("value", r.value);
  t.kv("alpha_max_used", static_cast<long long>(r.alpha_max_used));
  t.kv("stabilized", r.stabilized);
  t.kv("grid_per_axis", static_cast<long long>(r.grid_per_axis));
  std::vector<std::vector<double>> rows;
  for (std::size_t n = 0; n < r.per_order_ratio.size(); ++n)
    rows.push_back({static_cast<double>(n), r.per_order_ratio[n]});
  t.table({"order", "max_ratio"}, rows);
  return t.str();
}

}  // namespace egv
