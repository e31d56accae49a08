#include "egv/bump.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace egv {

namespace {

using cplx = std::complex<double>;

// 1/(1 + exp(-v)) without overflow for large |Re v|
cplx stable_sigmoid(cplx v) {
  if (v.real() >= 0.0) return 1.0 / (1.0 + std::exp(-v));
  const cplx ev = std::exp(v);
  return ev / (1.0 + ev);
}

}  // namespace

BumpFunction::BumpFunction(std::vector<double> center, double r_plateau, double r_support,
                           int max_order, int quad_nodes)
    : center_(std::move(center)),
      r_plateau_(r_plateau),
      r_support_(r_support),
      max_order_(max_order),
      quad_nodes_(quad_nodes) {
  const int d = static_cast<int>(center_.size());
  if (d < 1 || d > 2) throw ParameterError("BumpFunction: dim must be 1 or 2");
  if (!(r_plateau_ > 0.0)) throw ParameterError("BumpFunction: r_plateau must be positive");
  const double sqrt_d = std::sqrt(static_cast<double>(d));
  if (!(r_support_ > sqrt_d * r_plateau_))
    throw ParameterError("BumpFunction: need r_support > sqrt(d) * r_plateau");
  axis_support_ = r_support_ / sqrt_d;
  if (max_order_ < 1) throw ParameterError("BumpFunction: max_order must be >= 1");
  if (quad_nodes_ < 2 * max_order_ + 16)
    quad_nodes_ = 2 * max_order_ + 16;  // keep trapezoid alias-free
}

Box BumpFunction::support_box() const {
  Box b;
  b.dim = dim();
  for (int i = 0; i < b.dim; ++i) {
    b.lo[static_cast<std::size_t>(i)] = center_[static_cast<std::size_t>(i)] - axis_support_;
    b.hi[static_cast<std::size_t>(i)] = center_[static_cast<std::size_t>(i)] + axis_support_;
  }
  return b;
}

double BumpFunction::profile_eval(double u) const {
  const double r = std::abs(u);
  if (r <= r_plateau_) return 1.0;
  if (r >= axis_support_) return 0.0;
  const double w = 1.0 / (axis_support_ - r) - 1.0 / (r - r_plateau_);
  // kappa = sigmoid(-w)
  if (w >= 0.0) {
    const double e = std::exp(-w);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(w));
}

double BumpFunction::profile_derivative(int order, double u) const {
  if (order < 0) throw ParameterError("profile_derivative: negative order");
  if (order == 0) return profile_eval(u);
  if (order > max_order_)
    throw CapabilityError("BumpFunction: derivative order " + std::to_string(order) +
                              " beyond configured max " + std::to_string(max_order_),
                          order);
  const double r = std::abs(u);
  if (r <= r_plateau_ || r >= axis_support_) return 0.0;  // locally constant

  const double dist = std::min(r - r_plateau_, axis_support_ - r);
  const double rho = 0.5 * dist;
  if (rho < 1e-14) return 0.0;  // true derivatives underflow long before this

  // On the ramp kappa = sigmoid(-w). Integrate kappa - 1 = -sigmoid(w) when
  // the base point sits on the plateau side (w0 < 0): the integrand then has
  // magnitude matched to the derivative and the constant term cancels exactly.
  const double w0 = 1.0 / (axis_support_ - r) - 1.0 / (r - r_plateau_);
  const bool subtract_one = (w0 < 0.0);

  const int n_nodes = quad_nodes_;
  cplx acc(0.0, 0.0);
  for (int j = 0; j < n_nodes; ++j) {
    const double theta = 2.0 * M_PI * j / n_nodes;
    const cplx z = r + rho * std::polar(1.0, theta);
    const cplx w = 1.0 / (axis_support_ - z) - 1.0 / (z - r_plateau_);
    const cplx g = subtract_one ? -stable_sigmoid(w) : stable_sigmoid(-w);
    acc += g * std::polar(1.0, -order * theta);
  }
  const double coeff = acc.real() / n_nodes;  // derivative is real on the real axis
  if (coeff == 0.0) return 0.0;

  const double lnfac = std::lgamma(order + 1.0) - order * std::log(rho);
  double value;
  if (lnfac < 700.0) {
    value = coeff * std::exp(lnfac);
  } else {
    const double lnres = std::log(std::abs(coeff)) + lnfac;
    value = (coeff > 0.0 ? 1.0 : -1.0) * std::exp(lnres);
  }
  // even profile: odd-order derivatives flip sign across the center
  if (u < 0.0 && (order % 2) == 1) value = -value;
  return value;
}

double BumpFunction::eval(std::span<const double> x) const {
  double v = 1.0;
  for (int i = 0; i < dim(); ++i)
    v *= profile_eval(x[static_cast<std::size_t>(i)] - center_[static_cast<std::size_t>(i)]);
  return v;
}

double BumpFunction::derivative(std::span<const int> alpha, std::span<const double> x) const {
  int total = 0;
  for (int i = 0; i < dim(); ++i) {
    if (alpha[static_cast<std::size_t>(i)] < 0)
      throw ParameterError("BumpFunction: negative multi-index component");
    total += alpha[static_cast<std::size_t>(i)];
  }
  if (total > max_order_)
    throw CapabilityError("BumpFunction: total order " + std::to_string(total) +
                              " beyond configured max " + std::to_string(max_order_),
                          total);
  double v = 1.0;
  for (int i = 0; i < dim(); ++i) {
    v *= profile_derivative(alpha[static_cast<std::size_t>(i)],
                            x[static_cast<std::size_t>(i)] - center_[static_cast<std::size_t>(i)]);
    if (v == 0.0) return 0.0;
  }
  return v;
}

LinearCombination::LinearCombination(double a, std::shared_ptr<const TestFunction> f, double b,
                                     std::shared_ptr<const TestFunction> g)
    : a_(a), b_(b), f_(std::move(f)), g_(std::move(g)) {
  if (f_->dim() != g_->dim())
    throw ParameterError("LinearCombination: dimension mismatch");
}

int LinearCombination::max_order() const { return std::min(f_->max_order(), g_->max_order()); }

Box LinearCombination::support_box() const {
  const Box a = f_->support_box();
  const Box b = g_->support_box();
  Box out = a;
  for (int i = 0; i < a.dim; ++i) {
    out.lo[static_cast<std::size_t>(i)] =
        std::min(a.lo[static_cast<std::size_t>(i)], b.lo[static_cast<std::size_t>(i)]);
    out.hi[static_cast<std::size_t>(i)] =
        std::max(a.hi[static_cast<std::size_t>(i)], b.hi[static_cast<std::size_t>(i)]);
  }
  return out;
}

double LinearCombination::eval(std::span<const double> x) const {
  return a_ * f_->eval(x) + b_ * g_->eval(x);
}

double LinearCombination::derivative(std::span<const int> alpha, std::span<const double> x) const {
  return a_ * f_->derivative(alpha, x) + b_ * g_->derivative(alpha, x);
}

}  // namespace egv
