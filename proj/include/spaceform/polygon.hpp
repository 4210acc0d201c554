#ifndef SPACEFORM_POLYGON_HPP
#define SPACEFORM_POLYGON_HPP

// Geodesic polygons: construction with validity checks, vertex angles with
// the reflex-aware orientation rule, perimeter, angle-sum/shoelace area,
// digons, open-arm chains, and the cyclic-polygon circumradius solver.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "spaceform/errors.hpp"
#include "spaceform/kappa.hpp"
#include "spaceform/surface.hpp"
#include "spaceform/vec3.hpp"

namespace spaceform {

struct GeodesicPolygon {
  Kappa kappa;
  // Cyclically ordered, positively oriented boundary vertices (size >= 3).
  std::vector<SurfacePoint> vertices;
};

namespace detail {

// Interior angle at `p` between the sides toward `prev` and `next`,
// in (0, 2*pi); reflex vertices of a positively oriented boundary land
// above pi.
inline double interior_angle(const SurfacePoint& p, const SurfacePoint& prev,
                             const SurfacePoint& next) {
  const Vec3 u_prev = segment_direction(p, prev).v;
  const Vec3 u_next = segment_direction(p, next).v;
  double angle = signed_tangent_angle(p, u_next, u_prev);
  if (angle <= 0.0) angle += 2.0 * kPi;
  return angle;
}

inline double raw_angle_sum(Kappa k, const std::vector<SurfacePoint>& v) {
  const std::size_t n = v.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    sum += interior_angle(v[i], v[(i + n - 1) % n], v[(i + 1) % n]);
  (void)k;
  return sum;
}

// Throws if any two non-adjacent closed-boundary segments meet.
inline void check_boundary_simple(Kappa k,
                                  const std::vector<SurfacePoint>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;  // shared vertex
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
        throw infeasible_error("polygon: boundary segments " +
                               std::to_string(i) + " and " +
                               std::to_string(j) + " intersect");
    }
  }
  (void)k;
}

}  // namespace detail

// Validates and normalizes a vertex list into a positively oriented simple
// geodesic polygon.  Spherical polygons must fit in an open hemisphere.
inline GeodesicPolygon make_polygon(Kappa k,
                                    std::vector<SurfacePoint> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw usage_error("polygon: need at least three vertices");
  for (const SurfacePoint& p : vertices) {
    if (p.kappa != k)
      throw usage_error("polygon: vertex curvature does not match");
    if (std::abs(membership_residual(p)) > kMembershipEps)
      throw domain_error("polygon: vertex is off the surface");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const SurfacePoint& p = vertices[i];
    const SurfacePoint& q = vertices[(i + 1) % n];
    // Rejects coincident and (kappa = 1) antipodal neighbours.
    try {
      segment_direction(p, q);
    } catch (const degenerate_error& e) {
      throw degenerate_error("polygon: vertices " + std::to_string(i) +
                             " and " + std::to_string((i + 1) % n) + ": " +
                             e.what());
    }
  }
  detail::check_boundary_simple(k, vertices);
  if (k.value() == 1 && !hemisphere_containing(vertices).has_value())
    throw infeasible_error(
        "polygon: spherical vertices do not fit in an open hemisphere");
  // Interior angles of a positively oriented boundary sum below n*pi (the
  // reversed boundary sums above), so the raw sum decides the orientation.
  if (detail::raw_angle_sum(k, vertices) > static_cast<double>(n) * kPi)
    std::reverse(vertices.begin(), vertices.end());
  if (!k.curved()) {
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const SurfacePoint& p = vertices[i];
      const SurfacePoint& q = vertices[(i + 1) % n];
      twice += p.x() * q.y() - q.x() * p.y();
    }
    if (!(std::abs(twice) > 0.0))
      throw degenerate_error("polygon: flat vertices are collinear");
  }
  return GeodesicPolygon{k, std::move(vertices)};
}

inline double perimeter(const GeodesicPolygon& p) {
  const std::size_t n = p.vertices.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    total += distance(p.vertices[i], p.vertices[(i + 1) % n]);
  return total;
}

// One interior angle per vertex, each in (0, 2*pi).
inline std::vector<double> vertex_angles(const GeodesicPolygon& p) {
  const std::size_t n = p.vertices.size();
  std::vector<double> angles(n);
  for (std::size_t i = 0; i < n; ++i)
    angles[i] = detail::interior_angle(p.vertices[i],
                                       p.vertices[(i + n - 1) % n],
                                       p.vertices[(i + 1) % n]);
  return angles;
}

// True iff every interior angle stays below pi - eps.
inline bool is_convex(const GeodesicPolygon& p, double eps = 0.0) {
  for (double angle : vertex_angles(p))
    if (!(angle < kPi - eps)) return false;
  return true;
}

// Area from the angle sum (curved surfaces, convex polygons) or the shoelace
// formula (flat).
inline double area(const GeodesicPolygon& p) {
  const std::size_t n = p.vertices.size();
  if (!p.kappa.curved()) {
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const SurfacePoint& a = p.vertices[i];
      const SurfacePoint& b = p.vertices[(i + 1) % n];
      twice += a.x() * b.y() - b.x() * a.y();
    }
    return std::abs(twice) / 2.0;
  }
  if (!is_convex(p))
    throw usage_error(
        "area: the angle-sum formula applies to convex polygons only; "
        "triangulate non-convex regions first");
  double sum = 0.0;
  for (double angle : vertex_angles(p)) sum += angle;
  return static_cast<double>(p.kappa.value()) *
         (sum - static_cast<double>(n - 2) * kPi);
}

// ---------------------------------------------------------------------------
// Digons (spherical two-gons).

struct Digon {
  SurfacePoint apex;
  double angle;  // in [0, pi]
};

inline Digon make_digon(const SurfacePoint& apex, double angle) {
  if (apex.kappa.value() != 1)
    throw usage_error("digon: defined on the sphere only");
  if (!(angle >= 0.0) || !(angle <= kPi))
    throw domain_error("digon: angle must lie in [0, pi]");
  return Digon{apex, angle};
}

inline double digon_area(const Digon& d) { return 2.0 * d.angle; }

// ---------------------------------------------------------------------------
// Open arm chains (Cauchy's arm lemma as a computation).

// Lays out the open chain with side lengths `sides` (n-1 of them) and
// interior angles `angles` (n-2 of them, at the interior vertices), starting
// at the base point along the first coordinate geodesic and turning left by
// pi - angle at each interior vertex.  Returns the n chain vertices.
inline std::vector<SurfacePoint> arm_chain_points(
    Kappa k, const std::vector<double>& sides,
    const std::vector<double>& angles) {
  if (sides.size() < 2)
    throw usage_error("arm chain: need at least two sides");
  if (angles.size() != sides.size() - 1)
    throw usage_error(
        "arm chain: need exactly one interior angle per interior vertex "
        "(one fewer than sides)");
  double total = 0.0;
  for (double a : sides) {
    if (!(a > 0.0)) throw domain_error("arm chain: sides must be positive");
    total += a;
  }
  if (k.value() == 1 && !(total < 2.0 * kPi))
    throw domain_error("arm chain: spherical side lengths must sum below 2*pi");
  for (double alpha : angles)
    if (!(alpha > 0.0) || !(alpha < kPi))
      throw domain_error("arm chain: interior angles must lie in (0, pi)");

  std::vector<SurfacePoint> pts;
  pts.reserve(sides.size() + 1);
  pts.push_back(base_point(k));
  Vec3 heading{1.0, 0.0, 0.0};
  pts.push_back(geodesic(pts.back(), heading, sides[0]));
  for (std::size_t i = 1; i < sides.size(); ++i) {
    const SurfacePoint& at = pts.back();
    const Vec3 back = segment_direction(at, pts[pts.size() - 2]).v;
    const Vec3 ahead = rotate_tangent(at, back, -angles[i - 1]);
    pts.push_back(geodesic(at, ahead, sides[i]));
  }

  // The lemma speaks about non-self-intersecting arms; reject the rest.
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = i + 2; j + 1 < m; ++j)
      if (segments_intersect(pts[i], pts[i + 1], pts[j], pts[j + 1]))
        throw infeasible_error("arm chain: the chain self-intersects");
  return pts;
}

// Length of the closing side d(P_1, P_n) of the chain above.
inline double arm_closing_length(Kappa k, const std::vector<double>& sides,
                                 const std::vector<double>& angles) {
  const std::vector<SurfacePoint> pts = arm_chain_points(k, sides, angles);
  return distance(pts.front(), pts.back());
}

// ---------------------------------------------------------------------------
// Cyclic chains: the circumradius of the inscribed-polygon configuration.

// Central half-angle sum of the chords `sides` on a circle of radius r.
namespace detail {
inline double cyclic_angle_sum(Kappa k, const std::vector<double>& sides,
                               double r) {
  double sum = 0.0;
  const double sr = s_kappa(k, r);
  for (double a : sides) {
    const double x = clamp_abs_one(s_kappa(k, a / 2) / sr, kDomainEps,
                                   "cyclic_chain_radius");
    sum += 2.0 * std::asin(x);
  }
  return sum;
}
}  // namespace detail

// Radius r of the circle on which the chain vertices lie so that the chords
// a_1..a_{n-1} together subtend a straight angle at the center, i.e. the
// closing side runs through the center:  sum_i 2 asin(S(a_i/2)/S(r)) = pi.
inline double cyclic_chain_radius(Kappa k, const std::vector<double>& sides) {
  if (sides.empty()) throw usage_error("cyclic chain: need at least one side");
  double longest = 0.0;
  double total = 0.0;
  for (double a : sides) {
    if (!(a > 0.0)) throw domain_error("cyclic chain: sides must be positive");
    longest = std::max(longest, a);
    total += a;
  }
  if (k.value() == 1 && !(total < kPi))
    throw domain_error("cyclic chain: spherical side lengths must sum below pi");
  if (sides.size() == 1) return longest / 2;  // single chord is a diameter

  // The sum is strictly decreasing in r.  It blows past pi as r approaches
  // the longest half-side, so a root exists iff the sum dips to pi before
  // the admissible radii run out.
  double lo = longest / 2;
  double hi;
  if (k.value() == 1) {
    hi = kPi / 2;
    const double at_hi = detail::cyclic_angle_sum(k, sides, hi);
    if (at_hi > kPi + 1e-12)
      throw infeasible_error(
          "cyclic chain: no circle of radius at most pi/2 closes the chain "
          "through its center");
    if (std::abs(at_hi - kPi) <= 1e-12) return hi;
  } else {
    hi = std::max(1.0, 2.0 * lo);
    while (detail::cyclic_angle_sum(k, sides, hi) > kPi) {
      hi *= 2.0;
      if (hi > 1e6)
        throw numeric_error("cyclic chain: radius search failed to bracket");
    }
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (detail::cyclic_angle_sum(k, sides, mid) > kPi)
      lo = mid;
    else
      hi = mid;
  }
  const double r = 0.5 * (lo + hi);
  if (std::abs(detail::cyclic_angle_sum(k, sides, r) - kPi) > 1e-12)
    throw numeric_error("cyclic chain: residual above tolerance");
  return r;
}

}  // namespace spaceform

#endif  // SPACEFORM_POLYGON_HPP
