#include "egv/cones.hpp"

#include <cmath>

#include "egv/report.hpp"

namespace egv {

namespace {

double wrap_angle(double a) {
  while (a > M_PI) a -= 2.0 * M_PI;
  while (a < -M_PI) a += 2.0 * M_PI;
  return a;
}

constexpr double kAngleEps = 1e-12;

}  // namespace

void ConeSpec::validate() const {
  if (dim == 1) {
    if (sign != 1 && sign != -1) throw ParameterError("ConeSpec: d=1 sign must be +-1");
  } else if (dim == 2) {
    if (!(half_angle > 0.0 && half_angle < M_PI))
      throw ParameterError("ConeSpec: d=2 half_angle must be in (0, pi)");
  } else {
    throw ParameterError("ConeSpec: dim must be 1 or 2");
  }
}

DualCone dual_cone(const ConeSpec& cone) {
  cone.validate();
  DualCone d;
  d.dim = cone.dim;
  if (cone.dim == 1) {
    d.kind = DualCone::Kind::HalfLine;
    d.sign = cone.sign;
    return d;
  }
  d.center = wrap_angle(cone.center);
  if (cone.half_angle < M_PI / 2.0 - kAngleEps) {
    d.kind = DualCone::Kind::Sector;
    d.half_angle = M_PI / 2.0 - cone.half_angle;
  } else if (cone.half_angle <= M_PI / 2.0 + kAngleEps) {
    d.kind = DualCone::Kind::Ray;
  } else {
    // opening wider than a half-plane: convex hull is the plane, dual is {0}
    d.kind = DualCone::Kind::Origin;
  }
  return d;
}

DualCone dual_cone(const DualCone& cone) {
  DualCone d;
  d.dim = cone.dim;
  switch (cone.kind) {
    case DualCone::Kind::HalfLine:
      d.kind = DualCone::Kind::HalfLine;
      d.sign = cone.sign;
      break;
    case DualCone::Kind::Sector:
      d.center = cone.center;
      if (cone.half_angle < M_PI / 2.0 - kAngleEps) {
        d.kind = DualCone::Kind::Sector;
        d.half_angle = M_PI / 2.0 - cone.half_angle;
      } else if (cone.half_angle <= M_PI / 2.0 + kAngleEps) {
        d.kind = DualCone::Kind::Ray;
      } else {
        d.kind = DualCone::Kind::Origin;
      }
      break;
    case DualCone::Kind::Ray:
      d.kind = DualCone::Kind::Sector;
      d.center = cone.center;
      d.half_angle = M_PI / 2.0;
      break;
    case DualCone::Kind::Origin:
      d.kind = DualCone::Kind::Plane;
      break;
    case DualCone::Kind::Plane:
      d.kind = DualCone::Kind::Origin;
      break;
  }
  return d;
}

bool cone_contains(const ConeSpec& cone, std::span<const double> xi) {
  if (cone.dim == 1) return cone.sign * xi[0] > 0.0;
  const double r = std::hypot(xi[0], xi[1]);
  if (r == 0.0) return false;  // open cone excludes 0
  const double ang = std::atan2(xi[1], xi[0]);
  return std::abs(wrap_angle(ang - cone.center)) < cone.half_angle;
}

bool dual_contains(const DualCone& cone, std::span<const double> xi) {
  if (cone.dim == 1) {
    if (cone.kind == DualCone::Kind::Origin) return xi[0] == 0.0;
    return cone.sign * xi[0] >= 0.0;
  }
  const double r = std::hypot(xi[0], xi[1]);
  if (r == 0.0) return cone.kind != DualCone::Kind::Plane ? true : true;  // 0 in every closed cone
  const double ang = std::atan2(xi[1], xi[0]);
  switch (cone.kind) {
    case DualCone::Kind::Sector:
      return std::abs(wrap_angle(ang - cone.center)) <= cone.half_angle + kAngleEps;
    case DualCone::Kind::Ray:
      return std::abs(wrap_angle(ang - cone.center)) <= kAngleEps;
    case DualCone::Kind::Origin:
      return false;  // r > 0 here
    case DualCone::Kind::Plane:
      return true;
    case DualCone::Kind::HalfLine:
      break;
  }
  return false;
}

bool cone_subset_of_dual(const ConeSpec& cone, const DualCone& dual) {
  if (cone.dim != dual.dim) return false;
  if (cone.dim == 1) {
    if (dual.kind == DualCone::Kind::Origin) return false;
    return cone.sign == dual.sign;
  }
  switch (dual.kind) {
    case DualCone::Kind::Plane:
      return true;
    case DualCone::Kind::Origin:
    case DualCone::Kind::Ray:
      return false;  // an open sector never fits a ray or the origin
    case DualCone::Kind::Sector:
      return std::abs(wrap_angle(cone.center - dual.center)) + cone.half_angle <=
             dual.half_angle + kAngleEps;
    case DualCone::Kind::HalfLine:
      break;
  }
  return false;
}

std::string DualCone::describe() const {
  switch (kind) {
    case Kind::HalfLine:
      return std::string("halfline ") + (sign > 0 ? "{xi >= 0}" : "{xi <= 0}");
    case Kind::Sector:
      return "sector center=" + fmt_g(center) + " half_angle=" + fmt_g(half_angle);
    case Kind::Ray:
      return "ray angle=" + fmt_g(center);
    case Kind::Origin:
      return "origin";
    case Kind::Plane:
      return "plane";
  }
  return "";
}

}  // namespace egv
