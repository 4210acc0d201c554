#ifndef SPACEFORM_REGULAR_HPP
#define SPACEFORM_REGULAR_HPP

// Regular n-gons inscribed in circles about the base point: closed forms for
// side, vertex angle, and area as functions of (n, r); inverse solvers from
// any one of side/angle/area; and the large-n circle limits.

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "spaceform/errors.hpp"
#include "spaceform/kappa.hpp"
#include "spaceform/polygon.hpp"
#include "spaceform/surface.hpp"

namespace spaceform {

// Largest n accepted by circle_limit (keeps CLI sweeps bounded; the limits
// converge at rate 1/n^2, so far smaller n already hits reporting precision).
inline constexpr int kCircleLimitMaxN = 1000000;

namespace detail {

inline void check_regular_inputs(Kappa k, int n, double r, const char* what) {
  if (n < 3) throw domain_error(std::string(what) + ": need n >= 3");
  if (!(r > 0.0)) throw domain_error(std::string(what) + ": radius must be positive");
  // On the sphere the circumradius may reach, but not pass, the equator.
  if (k.value() == 1 && !(r <= kPi / 2))
    throw domain_error(std::string(what) +
                       ": spherical circumradius must not exceed pi/2");
}

}  // namespace detail

// Side length of the regular n-gon inscribed at circumradius r.
inline double regular_side(Kappa k, int n, double r) {
  detail::check_regular_inputs(k, n, r, "regular_side");
  return 2.0 * as_kappa(k, s_kappa(k, r) * std::sin(kPi / n));
}

// Interior vertex angle of the regular n-gon.
inline double regular_angle(Kappa k, int n, double r) {
  detail::check_regular_inputs(k, n, r, "regular_angle");
  if (!k.curved()) return static_cast<double>(n - 2) * kPi / n;
  // theta = 2 arctan(cot(pi/n) / C(r)); atan2 keeps the equatorial case
  // C(r) = 0 (theta = pi) in range.
  return 2.0 * std::atan2(std::cos(kPi / n), c_kappa(k, r) * std::sin(kPi / n));
}

// Area of the regular n-gon: angle excess on the curved surfaces, the
// classical circumradius formula on the plane.
inline double regular_area(Kappa k, int n, double r) {
  detail::check_regular_inputs(k, n, r, "regular_area");
  if (!k.curved()) return 0.5 * n * r * r * std::sin(2.0 * kPi / n);
  const double theta = regular_angle(k, n, r);
  return static_cast<double>(k.value()) *
         (n * theta - static_cast<double>(n - 2) * kPi);
}

struct RegularNGon {
  Kappa kappa;
  int n;
  double r;      // circumradius about the base point
  double side;   // common side length
  double angle;  // common interior vertex angle
  double area;
  std::vector<SurfacePoint> vertices;  // positively oriented
};

// Constructs the regular n-gon with vertices equally spaced on the circle of
// radius r about the base point.
inline RegularNGon build_regular(Kappa k, int n, double r) {
  detail::check_regular_inputs(k, n, r, "build_regular");
  const Circle circle = make_circle(base_point(k), r);
  std::vector<SurfacePoint> vertices;
  vertices.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    vertices.push_back(point_on_circle(circle, 2.0 * kPi * j / n));
  return RegularNGon{k,
                     n,
                     r,
                     regular_side(k, n, r),
                     regular_angle(k, n, r),
                     regular_area(k, n, r),
                     std::move(vertices)};
}

// Circumradius from the side length (inverts the chord relation).
inline double radius_from_side(Kappa k, int n, double a) {
  if (n < 3) throw domain_error("radius_from_side: need n >= 3");
  if (!(a > 0.0))
    throw infeasible_error("radius_from_side: side must be positive");
  try {
    return as_kappa(k, s_kappa(k, a / 2) / std::sin(kPi / n));
  } catch (const domain_error&) {
    throw infeasible_error(
        "radius_from_side: no spherical n-gon has a side of length " +
        std::to_string(a) + " (needs a <= 2*pi/n)");
  }
}

// Circumradius from the interior vertex angle (curved surfaces only; on the
// plane the angle is (n-2)pi/n for every r and determines nothing).
inline double radius_from_angle(Kappa k, int n, double theta) {
  if (n < 3) throw domain_error("radius_from_angle: need n >= 3");
  if (!k.curved())
    throw usage_error(
        "radius_from_angle: flat regular n-gons share one angle for every "
        "radius; the angle does not determine r");
  if (!(theta > 0.0) || !(theta <= kPi))
    throw infeasible_error("radius_from_angle: angle must lie in (0, pi]");
  const double arg = 1.0 / (std::tan(kPi / n) * std::tan(theta / 2));
  try {
    return ac_kappa(k, arg);
  } catch (const domain_error&) {
    throw infeasible_error(
        "radius_from_angle: angle " + std::to_string(theta) +
        " is not attained by any regular " + std::to_string(n) +
        "-gon at this curvature");
  }
}

namespace detail {

// Feasible open area range (upper bound +infinity when unbounded).
inline double regular_area_sup(Kappa k, int n) {
  switch (k.value()) {
    case 1:
      return 2.0 * kPi;
    case -1:
      return static_cast<double>(n - 2) * kPi;
    default:
      return std::numeric_limits<double>::infinity();
  }
}

// Monotone bisection on the forward area map; used near range boundaries
// where the closed-form inversion loses precision.
inline double radius_from_area_bisect(Kappa k, int n, double target) {
  double lo = 0.0;
  double hi;
  if (k.value() == 1) {
    hi = kPi / 2;
  } else {
    hi = 1.0;
    while (regular_area(k, n, hi) < target) {
      hi *= 2.0;
      if (hi > 1e6)
        throw infeasible_error(
            "radius_from_area: area out of reach for this n and curvature");
    }
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (regular_area(k, n, mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// Circumradius from the area.  Feasible ranges: A > 0 always; A <= 2*pi on
// the sphere; A < (n-2)*pi on the hyperbolic plane.
inline double radius_from_area(Kappa k, int n, double A) {
  if (n < 3) throw domain_error("radius_from_area: need n >= 3");
  if (!(A > 0.0))
    throw infeasible_error("radius_from_area: area must be positive");
  if (!k.curved()) return std::sqrt(2.0 * A / (n * std::sin(2.0 * kPi / n)));
  const double sup = detail::regular_area_sup(k, n);
  if (k.value() == 1 && !(A <= sup))
    throw infeasible_error(
        "radius_from_area: spherical regular n-gon areas stay within (0, 2*pi]");
  if (k.value() == -1 && !(A < sup))
    throw infeasible_error(
        "radius_from_area: hyperbolic regular n-gon areas stay below (n-2)*pi");
  // The closed form runs through tan((2*pi - kappa*A)/(2n)); near the range
  // boundaries it turns ill-conditioned, so fall back to bisecting the
  // forward map there.
  constexpr double kBoundaryGuard = 1e-6;
  const bool near_boundary =
      A < kBoundaryGuard || (std::isfinite(sup) && sup - A < kBoundaryGuard);
  if (near_boundary) return detail::radius_from_area_bisect(k, n, A);
  const double arg =
      std::tan((2.0 * kPi - static_cast<double>(k.value()) * A) / (2.0 * n)) /
      std::tan(kPi / n);
  try {
    return ac_kappa(k, arg);
  } catch (const domain_error&) {
    throw infeasible_error(
        "radius_from_area: area not attained by any regular n-gon here");
  }
}

struct CircleLimitPoint {
  double radius;
  double perimeter;
};

// The inscribed regular n-gon of area A: its circumradius and perimeter.
// As n grows these descend to the optimal circle's radius and perimeter.
inline CircleLimitPoint circle_limit(Kappa k, double A, int n) {
  if (n > kCircleLimitMaxN)
    throw usage_error("circle_limit: n capped at 1000000");
  const double r = radius_from_area(k, n, A);
  return {r, n * regular_side(k, n, r)};
}

}  // namespace spaceform

#endif  // SPACEFORM_REGULAR_HPP
