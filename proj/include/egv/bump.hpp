#pragma once

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "egv/params.hpp"

namespace egv {

// Minimal interface the norm and the almost-analytic extension need from a
// test function: pointwise values, arbitrary-order partial derivatives, and
// a support box.
class TestFunction {
 public:
  virtual ~TestFunction() = default;
  virtual int dim() const = 0;
  virtual int max_order() const = 0;
  virtual Box support_box() const = 0;
  virtual double eval(std::span<const double> x) const = 0;
  virtual double derivative(std::span<const int> alpha, std::span<const double> x) const = 0;
};

// Compactly supported cutoff. The radial 1D profile is
//
//   kappa(r) = S(r_support - r) / (S(r_support - r) + S(r - r_plateau)),
//   S(t) = exp(-1/t) for t > 0, else 0,
//
// identically 1 for r <= r_plateau and 0 for r >= r_support. On the ramp the
// profile equals 1/(1 + exp(w(r))) with w(r) = 1/(r_support - r) - 1/(r - r_plateau),
// which is the form used for analytic continuation.
//
// d = 2 uses a tensor product of 1D profiles (mixed partials factor). The
// per-axis support radius is r_support/sqrt(2) so the support box stays inside
// the euclidean ball B(center, r_support); the plateau box contains
// B(center, r_plateau). Requires r_support > sqrt(d) * r_plateau.
//
// Derivatives come from Cauchy-integral quadrature on a circle of radius half
// the distance to the nearest profile singularity (r_plateau or r_support on
// the real axis), trapezoidal rule with quad_nodes nodes. In the plateau and
// outside the support the function is locally constant and all derivatives
// are exactly 0.
class BumpFunction : public TestFunction {
 public:
  BumpFunction(std::vector<double> center, double r_plateau, double r_support,
               int max_order = 60, int quad_nodes = 256);

  // convenience 1D bump at the origin with the default radii (1, 2)
  static BumpFunction unit_1d() { return BumpFunction({0.0}, 1.0, 2.0); }

  int dim() const override { return static_cast<int>(center_.size()); }
  int max_order() const override { return max_order_; }
  Box support_box() const override;

  double r_plateau() const { return r_plateau_; }
  double r_support() const { return r_support_; }
  double axis_support() const { return axis_support_; }
  const std::vector<double>& center() const { return center_; }

  double eval(std::span<const double> x) const override;
  double derivative(std::span<const int> alpha, std::span<const double> x) const override;

  // order-n derivative of the 1D axis profile at offset u from the center
  double profile_derivative(int order, double u) const;
  double profile_eval(double u) const;

 private:
  std::vector<double> center_;
  double r_plateau_ = 1.0;
  double r_support_ = 2.0;
  double axis_support_ = 2.0;  // r_support / sqrt(d)
  int max_order_ = 60;
  int quad_nodes_ = 256;
};

// phi == c on a box (zero derivatives); handy norm fixture
class ConstantFunction : public TestFunction {
 public:
  ConstantFunction(double value, Box box) : value_(value), box_(box) {}
  int dim() const override { return box_.dim; }
  int max_order() const override { return 1 << 20; }
  Box support_box() const override { return box_; }
  double eval(std::span<const double>) const override { return value_; }
  double derivative(std::span<const int> alpha, std::span<const double>) const override {
    for (int a : alpha)
      if (a != 0) return 0.0;
    return value_;
  }

 private:
  double value_;
  Box box_;
};

// a*f + b*g with a shared support box; used by linearity tests and the CLI
class LinearCombination : public TestFunction {
 public:
  LinearCombination(double a, std::shared_ptr<const TestFunction> f, double b,
                    std::shared_ptr<const TestFunction> g);
  int dim() const override { return f_->dim(); }
  int max_order() const override;
  Box support_box() const override;
  double eval(std::span<const double> x) const override;
  double derivative(std::span<const int> alpha, std::span<const double> x) const override;

 private:
  double a_, b_;
  std::shared_ptr<const TestFunction> f_, g_;
};

}  // namespace egv
