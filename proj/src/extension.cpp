#include "egv/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "egv/norm.hpp"
#include "egv/sequences.hpp"
#include "egv/associated.hpp"

namespace egv {

namespace {

using cplx = std::complex<double>;

constexpr cplx kIPow[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

double m_value(long n, const GevreyParams& g) { return std::exp(log_m(n, g)); }

}  // namespace

PointDerivs compute_point_derivs(const TestFunction& phi, std::span<const double> x, int n_top) {
  PointDerivs t;
  t.dim = phi.dim();
  t.n_top = n_top;
  t.by_order.resize(static_cast<std::size_t>(n_top) + 1);
  for (int n = 0; n <= n_top; ++n) {
    const auto idx = multi_indices(t.dim, n);
    auto& row = t.by_order[static_cast<std::size_t>(n)];
    row.resize(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      row[i] = phi.derivative(
          std::span<const int>(idx[i].data(), static_cast<std::size_t>(t.dim)), x);
  }
  return t;
}

AlmostAnalyticExtension::AlmostAnalyticExtension(std::shared_ptr<const TestFunction> phi,
                                                 GevreyParams params, BumpFunction kappa)
    : phi_(std::move(phi)), params_(params), kappa_(std::move(kappa)) {
  if (!phi_) throw ParameterError("AlmostAnalyticExtension: null phi");
  if (kappa_.dim() != phi_->dim())
    throw ParameterError("AlmostAnalyticExtension: kappa/phi dimension mismatch");
}

long AlmostAnalyticExtension::contributing_max_order(double y_norm) const {
  if (y_norm <= 0.0) return 0;
  const double bound = -std::log(2.0 * params_.h * y_norm);  // ln(1/(2h|y|))
  if (bound < 0.0) return 0;
  long n = 0;
  while (log_m(n + 1, params_) <= bound) {
    ++n;
    if (n > 1000000) throw NumericalError("contributing_max_order: runaway order");
  }
  return n;
}

std::complex<double> AlmostAnalyticExtension::evaluate(std::span<const double> x,
                                                       std::span<const double> y) const {
  Vec2 yv{0.0, 0.0};
  for (int i = 0; i < dim(); ++i) yv[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)];
  const double yn = norm2(yv, dim());
  if (yn == 0.0) return phi_->eval(x);
  const long n_need = contributing_max_order(yn);
  if (n_need > phi_->max_order())
    throw CapabilityError("extension: needs derivative order " + std::to_string(n_need) +
                              " at |y|=" + std::to_string(yn),
                          static_cast<int>(n_need));
  const PointDerivs derivs = compute_point_derivs(*phi_, x, static_cast<int>(n_need));
  return evaluate_at(derivs, y);
}

std::complex<double> AlmostAnalyticExtension::evaluate_at(const PointDerivs& derivs,
                                                          std::span<const double> y) const {
  Vec2 yv{0.0, 0.0};
  for (int i = 0; i < dim(); ++i) yv[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)];
  const double yn = norm2(yv, dim());
  if (yn == 0.0) {
    std::array<int, 2> zero{0, 0};
    return derivs.get(zero);
  }
  const long n_max = contributing_max_order(yn);
  if (n_max > derivs.n_top)
    throw CapabilityError("extension: derivative table too shallow", static_cast<int>(n_max));

  cplx sum(0.0, 0.0);
  for (long n = 0; n <= n_max; ++n) {
    const double ln_coeff_den =
        n == 0 ? 0.0 : params_.tau * static_cast<double>(n) * std::log(static_cast<double>(n));
    const double inv_den = std::exp(-ln_coeff_den);  // 1 / n^(tau n)
    const double scale = 4.0 * params_.h * m_value(n, params_);
    Vec2 arg{scale * yv[0], scale * yv[1]};
    const double kappa_val =
        kappa_.eval(std::span<const double>(arg.data(), static_cast<std::size_t>(dim())));
    if (kappa_val == 0.0) continue;
    const cplx iphase = kIPow[n % 4];
    for (const auto& alpha : multi_indices(dim(), static_cast<int>(n))) {
      double ypow = 1.0;
      for (int i = 0; i < dim(); ++i)
        ypow *= std::pow(yv[static_cast<std::size_t>(i)], alpha[static_cast<std::size_t>(i)]);
      sum += derivs.get(alpha) * inv_den * iphase * ypow * kappa_val;
    }
  }
  return sum;
}

std::complex<double> AlmostAnalyticExtension::dbar(std::span<const double> x,
                                                   std::span<const double> y, int j) const {
  Vec2 yv{0.0, 0.0};
  for (int i = 0; i < dim(); ++i) yv[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)];
  const double yn = norm2(yv, dim());
  const long n_need = contributing_max_order(yn) + 1;
  if (n_need > phi_->max_order())
    throw CapabilityError("extension dbar: needs derivative order " + std::to_string(n_need),
                          static_cast<int>(n_need));
  const PointDerivs derivs = compute_point_derivs(*phi_, x, static_cast<int>(n_need));
  return dbar_at(derivs, y, j);
}

std::complex<double> AlmostAnalyticExtension::dbar_at(const PointDerivs& derivs,
                                                      std::span<const double> y, int j) const {
  if (j < 0 || j >= dim()) throw ParameterError("dbar: coordinate index out of range");
  Vec2 yv{0.0, 0.0};
  for (int i = 0; i < dim(); ++i) yv[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)];
  const double yn = norm2(yv, dim());
  const long n_max = contributing_max_order(yn);
  if (n_max + 1 > derivs.n_top)
    throw CapabilityError("extension dbar: derivative table too shallow",
                          static_cast<int>(n_max + 1));

  // dbar_j = (1/2)(d/dx_j + i d/dy_j) applied term by term:
  //   S1: derivative hits phi          S2: derivative hits (iy)^alpha
  //   S3: derivative hits the cutoff (chain rule factor 4 h m_n)
  cplx s1(0.0, 0.0), s2(0.0, 0.0), s3(0.0, 0.0);
  for (long n = 0; n <= n_max; ++n) {
    const double ln_coeff_den =
        n == 0 ? 0.0 : params_.tau * static_cast<double>(n) * std::log(static_cast<double>(n));
    const double inv_den = std::exp(-ln_coeff_den);
    const double scale = 4.0 * params_.h * m_value(n, params_);
    Vec2 arg{scale * yv[0], scale * yv[1]};
    const auto arg_span = std::span<const double>(arg.data(), static_cast<std::size_t>(dim()));
    const double kappa_val = kappa_.eval(arg_span);
    std::array<int, 2> ej{0, 0};
    ej[static_cast<std::size_t>(j)] = 1;
    const double kappa_dj =
        kappa_.derivative(std::span<const int>(ej.data(), static_cast<std::size_t>(dim())),
                          arg_span);
    if (kappa_val == 0.0 && kappa_dj == 0.0) continue;
    const cplx iphase = kIPow[n % 4];
    const cplx iphase1 = kIPow[(n + 1) % 4];
    for (const auto& alpha : multi_indices(dim(), static_cast<int>(n))) {
      const double dphi = derivs.get(alpha);
      double ypow = 1.0;
      for (int i = 0; i < dim(); ++i)
        ypow *= std::pow(yv[static_cast<std::size_t>(i)], alpha[static_cast<std::size_t>(i)]);

      if (kappa_val != 0.0) {
        std::array<int, 2> alpha_ej = alpha;
        alpha_ej[static_cast<std::size_t>(j)] += 1;
        s1 += derivs.get(alpha_ej) * inv_den * iphase * ypow * kappa_val;

        const int aj = alpha[static_cast<std::size_t>(j)];
        if (aj > 0) {
          double ypow_m = 1.0;
          for (int i = 0; i < dim(); ++i) {
            const int e = alpha[static_cast<std::size_t>(i)] - (i == j ? 1 : 0);
            ypow_m *= std::pow(yv[static_cast<std::size_t>(i)], e);
          }
          s2 += dphi * inv_den * iphase1 * static_cast<double>(aj) * ypow_m * kappa_val;
        }
      }
      if (kappa_dj != 0.0) s3 += dphi * inv_den * iphase1 * ypow * scale * kappa_dj;
    }
  }
  return 0.5 * (s1 + s2 + s3);
}

DbarEnvelopeFit fit_dbar_envelope(const AlmostAnalyticExtension& ext,
                                  std::span<const double> t_grid,
                                  std::span<const double> x_grid, double Y, ExecPolicy policy) {
  if (ext.dim() != 1) throw ParameterError("fit_dbar_envelope: d=1 only");
  DbarEnvelopeFit fit;
  const GevreyParams& g = ext.params();
  fit.threshold_params =
      GevreyParams((std::pow(2.0, g.sigma) - 1.0) * g.tau, g.sigma, g.h);

  // derivative tables at the x nodes, reused across all t
  int n_top = 1;
  for (double t : t_grid)
    n_top = std::max<int>(n_top,
                          static_cast<int>(ext.contributing_max_order(std::abs(t * Y))) + 1);
  std::vector<PointDerivs> tables(x_grid.size());
  for_each_index(policy, x_grid.size(), [&](std::size_t i) {
    tables[i] = compute_point_derivs(ext.phi(), std::span<const double>(&x_grid[i], 1), n_top);
  });

  fit.lnB = -std::numeric_limits<double>::infinity();
  fit.rows.resize(t_grid.size());
  for_each_index(policy, t_grid.size(), [&](std::size_t ti) {
    const double t = t_grid[ti];
    const double y = t * Y;
    double sup = 0.0;
    for (std::size_t xi = 0; xi < x_grid.size(); ++xi) {
      const auto v = ext.dbar_at(tables[xi], std::span<const double>(&y, 1), 0);
      sup = std::max(sup, std::abs(v));
    }
    const double T = T_eval(fit.threshold_params, 1.0 / std::abs(y)).value;
    fit.rows[ti] = {t, sup, T};
  });
  for (const auto& row : fit.rows) {
    const double req = (row[1] > 0.0 ? std::log(row[1]) : -std::numeric_limits<double>::infinity()) + row[2];
    if (req > fit.lnB) {
      fit.lnB = req;
      fit.worst_t = row[0];
    }
  }
  return fit;
}

double max_abs_extension(const AlmostAnalyticExtension& ext, std::span<const double> t_grid,
                         std::span<const double> x_grid, double Y, ExecPolicy policy) {
  if (ext.dim() != 1) throw ParameterError("max_abs_extension: d=1 only");
  int n_top = 0;
  for (double t : t_grid)
    n_top = std::max<int>(n_top,
                          static_cast<int>(ext.contributing_max_order(std::abs(t * Y))));
  std::vector<PointDerivs> tables(x_grid.size());
  for_each_index(policy, x_grid.size(), [&](std::size_t i) {
    tables[i] = compute_point_derivs(ext.phi(), std::span<const double>(&x_grid[i], 1), n_top);
  });
  const auto sup_t = map_index<double>(policy, t_grid.size(), [&](std::size_t ti) {
    const double y = t_grid[ti] * Y;
    double sup = 0.0;
    for (std::size_t xi = 0; xi < x_grid.size(); ++xi)
      sup = std::max(sup, std::abs(ext.evaluate_at(tables[xi], std::span<const double>(&y, 1))));
    return sup;
  });
  double best = 0.0;
  for (double s : sup_t) best = std::max(best, s);
  return best;
}

}  // namespace egv
