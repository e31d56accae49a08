#pragma once

#include <string>
#include <vector>

#include "egv/pairing.hpp"
#include "egv/params.hpp"

namespace egv {

// Named tube-function fixtures for the CLI and tests:
//   const       F = 1
//   inv_z       F = 1/z
//   inv_z2      F = 1/z^2
//   exp_inv_z   F = exp(1/z)   (violates the growth hypothesis)
//   gauss_entire F = exp(-z^2) (entire and bounded on real strips)
//   rational    F = P(z)/Q(z)  with real coefficients, ascending order
TubeFunction make_tube_fixture(const std::string& name, const Box& U, double gamma,
                               int cone_sign, const std::vector<double>& p_coeffs = {},
                               const std::vector<double>& q_coeffs = {});

std::vector<std::string> tube_fixture_names();

}  // namespace egv
