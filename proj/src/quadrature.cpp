#include "egv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace egv {

namespace {

GaussLegendre compute_rule(int n) {
  GaussLegendre r;
  r.nodes.resize(static_cast<std::size_t>(n));
  r.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // P_n(x) and P_n'(x) by the three-term recurrence
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[static_cast<std::size_t>(i)] = -x;  // ascending order
    r.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  std::sort(r.nodes.begin(), r.nodes.end());
  // weights are symmetric; recompute pairing by symmetry of the sorted nodes
  for (int i = 0; i < n / 2; ++i)
    r.weights[static_cast<std::size_t>(n - 1 - i)] = r.weights[static_cast<std::size_t>(i)];
  return r;
}

}  // namespace

const GaussLegendre& GaussLegendre::order(int n) {
  if (n < 2) throw std::invalid_argument("GaussLegendre: order must be >= 2");
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

namespace {

std::complex<double> apply_rule(const Integrand& f, double a, double b,
                                const GaussLegendre& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

}  // namespace

PanelEstimate integrate_panel(const Integrand& f, double a, double b, int order) {
  const auto lo = apply_rule(f, a, b, GaussLegendre::order(order));
  const auto hi = apply_rule(f, a, b, GaussLegendre::order(2 * order));
  return {hi, std::abs(hi - lo)};
}

AdaptiveResult integrate_adaptive(const Integrand& f, double a, double b, double tol,
                                  int order, int max_depth,
                                  const std::vector<double>& breakpoints) {
  std::vector<double> edges{a, b};
  for (double x : breakpoints)
    if (x > a && x < b) edges.push_back(x);
  std::sort(edges.begin(), edges.end());

  struct Panel {
    double a, b;
    int depth;
  };
  std::vector<Panel> stack;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    stack.push_back({edges[i], edges[i + 1], 0});

  AdaptiveResult res;
  res.converged = true;
  const double total = b - a;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const auto est = integrate_panel(f, p.a, p.b, order);
    const double budget = tol * std::max(1e-4, (p.b - p.a) / total);
    if (est.error <= budget || p.depth >= max_depth) {
      res.value += est.value;
      res.error += est.error;
      ++res.panels;
      if (est.error > budget) res.converged = false;
    } else {
      const double mid = 0.5 * (p.a + p.b);
      stack.push_back({p.a, mid, p.depth + 1});
      stack.push_back({mid, p.b, p.depth + 1});
    }
  }
  return res;
}

}  // namespace egv
