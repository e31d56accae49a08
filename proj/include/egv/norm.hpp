#pragma once

#include <string>
#include <vector>

#include "egv/bump.hpp"
#include "egv/parallel.hpp"
#include "egv/params.hpp"

namespace egv {

// Extended Gevrey norm over a box K:
//
//   ||phi|| = sup_alpha sup_{x in K} |d^alpha phi(x)| / (h^(|alpha|^sigma) |alpha|^(tau |alpha|^sigma))
//
// with the |alpha| = 0 denominator equal to 1. The sup over x is the max over
// a uniform grid with grid_per_axis points per axis; the density is recorded
// in the report so runs are reproducible. Computed in the log domain (the
// denominators overflow doubles almost immediately).
struct NormReport {
  GevreyParams params;
  double value = 0.0;
  int alpha_max_used = 0;
  bool stabilized = false;
  std::vector<double> per_order_ratio;  // index = |alpha|
  int grid_per_axis = 0;
};

NormReport gevrey_norm(const TestFunction& phi, const Box& K, const GevreyParams& params,
                       int alpha_max, int grid_per_axis = 512,
                       ExecPolicy policy = ExecPolicy::Parallel);

std::string to_text(const NormReport& report);

// multi-indices of a given total order, ordered lexicographically; d <= 2
std::vector<std::array<int, 2>> multi_indices(int dim, int total_order);

}  // namespace egv
