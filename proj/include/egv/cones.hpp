#pragma once

#include <span>
#include <string>

#include "egv/params.hpp"

namespace egv {

// Open convex cone excluding 0. d=1: one of the two half-lines; d=2: angular
// sector (center angle, half-angle), convex iff half_angle <= pi/2.
struct ConeSpec {
  int dim = 1;
  int sign = +1;           // d = 1
  double center = 0.0;     // d = 2, radians
  double half_angle = 0.0; // d = 2, in (0, pi)

  void validate() const;
};

// Closed cone that may be degenerate; duals live here.
struct DualCone {
  enum class Kind { HalfLine, Sector, Ray, Origin, Plane };
  Kind kind = Kind::HalfLine;
  int dim = 1;
  int sign = +1;       // HalfLine
  double center = 0.0; // Sector / Ray
  double half_angle = 0.0;

  std::string describe() const;
};

// dual cone {xi : y . xi >= 0 for all y in the cone}, in closed form
DualCone dual_cone(const ConeSpec& cone);
DualCone dual_cone(const DualCone& cone);

bool cone_contains(const ConeSpec& cone, std::span<const double> xi);      // open
bool dual_contains(const DualCone& cone, std::span<const double> xi);     // closed

// does the open cone sit inside the closed one?
bool cone_subset_of_dual(const ConeSpec& cone, const DualCone& dual);

}  // namespace egv
