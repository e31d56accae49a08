#include "egv/fixtures.hpp"

#include <cmath>
#include <complex>

namespace egv {

namespace {

using cplx = std::complex<double>;

cplx eval_poly(const std::vector<double>& coeffs, cplx z) {
  cplx acc(0.0, 0.0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

}  // namespace

TubeFunction make_tube_fixture(const std::string& name, const Box& U, double gamma,
                               int cone_sign, const std::vector<double>& p_coeffs,
                               const std::vector<double>& q_coeffs) {
  TubeFunction F;
  F.name = name;
  F.dim = 1;
  F.U = U;
  F.gamma = gamma;
  F.cone_sign = cone_sign;
  if (name == "const") {
    F.f1 = [](double, double) { return cplx(1.0, 0.0); };
  } else if (name == "inv_z") {
    F.f1 = [](double x, double y) { return 1.0 / cplx(x, y); };
    F.singular_x = {0.0};
  } else if (name == "inv_z2") {
    F.f1 = [](double x, double y) {
      const cplx z(x, y);
      return 1.0 / (z * z);
    };
    F.singular_x = {0.0};
  } else if (name == "exp_inv_z") {
    F.f1 = [](double x, double y) { return std::exp(1.0 / cplx(x, y)); };
    F.singular_x = {0.0};
  } else if (name == "gauss_entire") {
    F.f1 = [](double x, double y) {
      const cplx z(x, y);
      return std::exp(-z * z);
    };
  } else if (name == "rational") {
    if (p_coeffs.empty() || q_coeffs.empty())
      throw ParameterError("rational fixture needs numerator and denominator coefficients");
    F.f1 = [p_coeffs, q_coeffs](double x, double y) {
      const cplx z(x, y);
      return eval_poly(p_coeffs, z) / eval_poly(q_coeffs, z);
    };
    // real roots of Q guide the quadrature grading; probe on a coarse grid
    for (double x = U.lo[0]; x <= U.hi[0]; x += (U.hi[0] - U.lo[0]) / 256.0) {
      if (std::abs(eval_poly(q_coeffs, cplx(x, 0.0))) < 1e-6) F.singular_x.push_back(x);
    }
  } else {
    throw ParameterError("unknown tube fixture: " + name);
  }
  return F;
}

std::vector<std::string> tube_fixture_names() {
  return {"const", "inv_z", "inv_z2", "exp_inv_z", "gauss_entire", "rational"};
}

}  // namespace egv
