#ifndef SPACEFORM_SURFACE_HPP
#define SPACEFORM_SURFACE_HPP

// Embedded models of the three constant-curvature surfaces and their metric
// primitives.  kappa = +1 is the unit sphere in E^3; kappa = -1 is the upper
// sheet x^2 + y^2 - z^2 = -1, z > 0, carrying the Lorentz form
// <a,b> = a1 b1 + a2 b2 - a3 b3; kappa = 0 is the plane embedded as the
// slice z = 1.  The common base point is (0, 0, 1) in every model.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spaceform/errors.hpp"
#include "spaceform/kappa.hpp"
#include "spaceform/vec3.hpp"

namespace spaceform {

// Membership and tangency slack for the embedded models.
inline constexpr double kMembershipEps = 1e-10;
// Pairwise-distance agreement required of a point correspondence.
inline constexpr double kCorrespondenceEps = 1e-8;
// Squared-norm threshold below which a direction counts as vanishing.
inline constexpr double kVanishingNorm2 = 1e-30;

// The model bilinear form: Lorentzian for kappa = -1, Euclidean otherwise.
inline double inner(Kappa k, const Vec3& a, const Vec3& b) {
  if (k.value() == -1) return a.x * b.x + a.y * b.y - a.z * b.z;
  return dot(a, b);
}

// A point of the surface in embedded coordinates.  Construct through
// make_surface_point / project_to_surface, which enforce membership; direct
// brace initialization skips validation and is reserved for code that has
// already established it.
struct SurfacePoint {
  Kappa kappa;
  Vec3 v;

  double x() const { return v.x; }
  double y() const { return v.y; }
  double z() const { return v.z; }
};

// Distance of the coordinate triple from the model surface:
// |x^2+y^2+z^2 - 1| on the sphere, |x^2+y^2-z^2 + 1| on the hyperboloid,
// |z - 1| on the plane slice.
inline double membership_residual(const SurfacePoint& p) {
  switch (p.kappa.value()) {
    case 1:
      return std::abs(norm2(p.v) - 1.0);
    case -1:
      return std::abs(inner(p.kappa, p.v, p.v) + 1.0);
    default:
      return std::abs(p.v.z - 1.0);
  }
}

// Radially renormalizes a coordinate triple onto the model surface.
inline SurfacePoint project_to_surface(Kappa k, const Vec3& v) {
  switch (k.value()) {
    case 1: {
      const double r = norm(v);
      if (!(r > 0.0) || !std::isfinite(r))
        throw degenerate_error("project_to_surface: vanishing vector");
      return {k, v / r};
    }
    case -1: {
      const double q = v.z * v.z - v.x * v.x - v.y * v.y;
      if (!(q > 0.0) || !(v.z > 0.0) || !std::isfinite(q))
        throw degenerate_error(
            "project_to_surface: vector misses the upper hyperboloid sheet");
      return {k, v / std::sqrt(q)};
    }
    default:
      return {k, {v.x, v.y, 1.0}};
  }
}

inline SurfacePoint make_surface_point(Kappa k, double x, double y, double z,
                                       double eps = kMembershipEps) {
  const SurfacePoint p{k, {x, y, z}};
  if (k.value() == -1 && !(z > 0.0))
    throw domain_error("make_surface_point: hyperboloid points require z > 0");
  if (membership_residual(p) > eps)
    throw domain_error("make_surface_point: coordinates are not on the model "
                       "surface (residual " +
                       std::to_string(membership_residual(p)) + ")");
  return p;
}

// The common base point (0, 0, 1).
inline SurfacePoint base_point(Kappa k) { return {k, {0.0, 0.0, 1.0}}; }

// Geodesic distance, d = AC_kappa(kappa * <p,q>_kappa), evaluated through
// the equivalent half-chord forms: <q-p, q-p>_kappa equals 4 S_kappa(d/2)^2
// on both curved models, so d = 2 asinh(|q-p|_L / 2) on the hyperboloid and
// d = 2 atan2(|q-p|, |q+p|) on the sphere.  Unlike the raw AC form these
// stay fully conditioned near coincident (and spherical antipodal) points.
inline double distance(const SurfacePoint& p, const SurfacePoint& q) {
  if (p.kappa != q.kappa)
    throw usage_error("distance: points live on different surfaces");
  const Kappa k = p.kappa;
  if (!k.curved()) return std::hypot(q.v.x - p.v.x, q.v.y - p.v.y);
  const Vec3 diff = q.v - p.v;
  if (k.value() == 1) return 2.0 * std::atan2(norm(diff), norm(q.v + p.v));
  const double chord2 = inner(k, diff, diff);  // = 2 (cosh d - 1) >= 0
  return 2.0 * std::asinh(0.5 * std::sqrt(std::max(chord2, 0.0)));
}

// A tangent vector attached to a base point.  <vec, base>_kappa = 0 for the
// curved models; the z component vanishes on the plane slice.
struct TangentVector {
  SurfacePoint base;
  Vec3 v;
};

// Removes the normal component of v at p (sets z = 0 on the plane).
inline Vec3 project_to_tangent(const SurfacePoint& p, const Vec3& v) {
  switch (p.kappa.value()) {
    case 0:
      return {v.x, v.y, 0.0};
    default:
      return v - static_cast<double>(p.kappa.value()) * inner(p.kappa, v, p.v) *
                     p.v;
  }
}

inline double tangency_residual(const SurfacePoint& p, const Vec3& v) {
  if (!p.kappa.curved()) return std::abs(v.z);
  return std::abs(inner(p.kappa, v, p.v));
}

inline TangentVector make_tangent(const SurfacePoint& base, const Vec3& v,
                                  double eps = kMembershipEps) {
  if (tangency_residual(base, v) > eps * std::max(1.0, norm(v)))
    throw domain_error("make_tangent: vector is not tangent at the base point");
  return {base, v};
}

// sqrt(<v,v>_kappa); positive for every nonzero tangent vector, including on
// the Lorentzian model (tangent vectors are spacelike there).
inline double tangent_norm(const SurfacePoint& p, const Vec3& v) {
  const double n2 = inner(p.kappa, v, v);
  return n2 > 0.0 ? std::sqrt(n2) : 0.0;
}

inline Vec3 normalize_tangent(const SurfacePoint& p, const Vec3& v) {
  const double n2 = inner(p.kappa, v, v);
  if (!(n2 > kVanishingNorm2))
    throw degenerate_error("normalize_tangent: vanishing tangent vector");
  return v / std::sqrt(n2);
}

// Unit-speed geodesic through p with initial direction v (not necessarily
// unit): C_kappa(t) p + S_kappa(t) v/|v| on the curved models, p + t v/|v|
// on the plane.  The result is renormalized onto the surface.
inline SurfacePoint geodesic(const SurfacePoint& p, const Vec3& v, double t) {
  const Kappa k = p.kappa;
  const Vec3 u = normalize_tangent(p, project_to_tangent(p, v));
  if (k.curved())
    return project_to_surface(k, c_kappa(k, t) * p.v + s_kappa(k, t) * u);
  return project_to_surface(k, p.v + t * u);
}

inline SurfacePoint geodesic(const TangentVector& v, double t) {
  return geodesic(v.base, v.v, t);
}

// Initial direction at x of the geodesic segment [x, y]:
// y - kappa <y,x>_kappa x on the curved models, y - x on the plane.
// Unnormalized; geodesic() normalizes internally, and
// geodesic(x, direction, distance(x, y)) lands on y.
inline TangentVector segment_direction(const SurfacePoint& x,
                                       const SurfacePoint& y) {
  if (x.kappa != y.kappa)
    throw usage_error("segment_direction: points live on different surfaces");
  const Kappa k = x.kappa;
  Vec3 v;
  if (k.curved())
    v = y.v - static_cast<double>(k.value()) * inner(k, y.v, x.v) * x.v;
  else
    v = {y.v.x - x.v.x, y.v.y - x.v.y, 0.0};
  if (!(inner(k, v, v) > kVanishingNorm2))
    throw degenerate_error(
        "segment_direction: coincident (or antipodal) endpoints leave no "
        "direction");
  return {x, v};
}

// ---------------------------------------------------------------------------
// Oriented tangent-plane calculus.

// Rotation of a tangent vector by +pi/2 in the oriented tangent plane at p.
// For a unit tangent the result is again a unit tangent, and
// det[u, rot90(u), p] > 0 in every model.
inline Vec3 tangent_rot90(const SurfacePoint& p, const Vec3& u) {
  switch (p.kappa.value()) {
    case 0:
      return {-u.y, u.x, 0.0};
    case 1:
      return cross(p.v, u);
    default: {
      const Vec3 w = cross(p.v, u);
      return {w.x, w.y, -w.z};
    }
  }
}

// Rotates the (not necessarily unit) tangent u by angle phi in the oriented
// tangent plane at p; returns a unit tangent.
inline Vec3 rotate_tangent(const SurfacePoint& p, const Vec3& u, double phi) {
  const Vec3 e1 = normalize_tangent(p, u);
  const Vec3 e2 = tangent_rot90(p, e1);
  return std::cos(phi) * e1 + std::sin(phi) * e2;
}

// Signed angle from u1 to u2 in the oriented tangent plane at p, in
// (-pi, pi].
inline double signed_tangent_angle(const SurfacePoint& p, const Vec3& u1,
                                   const Vec3& u2) {
  const Vec3 e1 = normalize_tangent(p, u1);
  const Vec3 e2 = normalize_tangent(p, u2);
  const double c = inner(p.kappa, e1, e2);
  const double s = inner(p.kappa, e2, tangent_rot90(p, e1));
  return std::atan2(s, c);
}

// Unsigned angle between tangents, in [0, pi].
inline double tangent_angle(const SurfacePoint& p, const Vec3& u1,
                            const Vec3& u2) {
  return std::abs(signed_tangent_angle(p, u1, u2));
}

// ---------------------------------------------------------------------------
// Lines (complete geodesics) and reflections.

// A line is encoded by a normal 3-vector.  Curved models: the plane
// {x : <x, n>_kappa = 0} through the origin with <n, n>_kappa = 1 (the
// normal is spacelike on the Lorentzian model).  Plane slice: the affine
// line n1 x + n2 y + n3 = 0 with (n1, n2) Euclidean-unit.
struct Line {
  Kappa kappa;
  Vec3 n;
};

// Signed incidence value of p against the line: <p, n>_kappa (curved) or
// n1 x + n2 y + n3 (flat).  Zero exactly on the line.
inline double line_eval(const Line& l, const SurfacePoint& p) {
  if (l.kappa != p.kappa)
    throw usage_error("line_eval: point and line live on different surfaces");
  if (l.kappa.curved()) return inner(l.kappa, p.v, l.n);
  return l.n.x * p.v.x + l.n.y * p.v.y + l.n.z;
}

inline Line line_from_normal(Kappa k, const Vec3& n) {
  if (k.curved()) {
    const double n2 = inner(k, n, n);
    if (!(n2 > kVanishingNorm2))
      throw degenerate_error(
          "line_from_normal: normal must have positive kappa-norm "
          "(spacelike on the hyperbolic model)");
    return {k, n / std::sqrt(n2)};
  }
  const double len = std::hypot(n.x, n.y);
  if (!(len * len > kVanishingNorm2))
    throw degenerate_error(
        "line_from_normal: flat-model normal needs a nonzero (n1, n2) part");
  return {k, n / len};
}

// The complete geodesic through two distinct points.
inline Line line_through(const SurfacePoint& p, const SurfacePoint& q) {
  if (p.kappa != q.kappa)
    throw usage_error("line_through: points live on different surfaces");
  const Kappa k = p.kappa;
  switch (k.value()) {
    case 1:
      return line_from_normal(k, cross(p.v, q.v));
    case -1: {
      const Vec3 w = cross(p.v, q.v);
      return line_from_normal(k, {w.x, w.y, -w.z});
    }
    default: {
      const double dx = q.v.x - p.v.x;
      const double dy = q.v.y - p.v.y;
      const double len = std::hypot(dx, dy);
      if (!(len * len > kVanishingNorm2))
        throw degenerate_error("line_through: coincident points");
      const double nx = -dy / len;
      const double ny = dx / len;
      return {k, {nx, ny, -(nx * p.v.x + ny * p.v.y)}};
    }
  }
}

// Geodesic midpoint of the segment pq.  The coordinate average lies on the
// central ray through the midpoint on every model (and its flat projection
// is the midpoint itself), so a radial renormalization suffices.  Spherical
// antipodal pairs have no unique midpoint and are rejected downstream by
// the vanishing average.
inline SurfacePoint midpoint(const SurfacePoint& p, const SurfacePoint& q) {
  if (p.kappa != q.kappa)
    throw usage_error("midpoint: points live on different surfaces");
  return project_to_surface(p.kappa, 0.5 * (p.v + q.v));
}

// The locus of points equidistant from p and q.  On the curved models the
// normal is q - p (already tangent at the midpoint, since both endpoints
// have the same kappa-norm); on the plane it is the classical midpoint
// normal form.
inline Line perpendicular_bisector(const SurfacePoint& p,
                                   const SurfacePoint& q) {
  if (p.kappa != q.kappa)
    throw usage_error(
        "perpendicular_bisector: points live on different surfaces");
  const Kappa k = p.kappa;
  if (k.curved()) return line_from_normal(k, q.v - p.v);
  const double dx = q.v.x - p.v.x;
  const double dy = q.v.y - p.v.y;
  const double len = std::hypot(dx, dy);
  if (!(len * len > kVanishingNorm2))
    throw degenerate_error("perpendicular_bisector: coincident points");
  const double nx = dx / len;
  const double ny = dy / len;
  const double mx = 0.5 * (p.v.x + q.v.x);
  const double my = 0.5 * (p.v.y + q.v.y);
  return {k, {nx, ny, -(nx * mx + ny * my)}};
}

// Reflection through a line: x - 2 <x, n>_kappa n on the curved models (a
// form-preserving involution fixing the line pointwise), the affine mirror
// image on the plane slice.
inline SurfacePoint reflect(const Line& l, const SurfacePoint& p) {
  if (l.kappa != p.kappa)
    throw usage_error("reflect: point and line live on different surfaces");
  const Kappa k = l.kappa;
  if (k.curved())
    return project_to_surface(k, p.v - 2.0 * inner(k, p.v, l.n) * l.n);
  const double t = l.n.x * p.v.x + l.n.y * p.v.y + l.n.z;
  return {k, {p.v.x - 2.0 * t * l.n.x, p.v.y - 2.0 * t * l.n.y, 1.0}};
}

// An isometry as an ordered composition of reflections (applied left to
// right).  The empty list is the identity.
struct Isometry {
  Kappa kappa;
  std::vector<Line> reflections;
};

inline SurfacePoint apply(const Isometry& iso, SurfacePoint p) {
  for (const Line& l : iso.reflections) p = reflect(l, p);
  return p;
}

// Builds an isometry mapping each A_i to B_i from k matched pairs, as a
// composition of at most k reflections: sweep the pairs in order and, when
// the current image of A_i misses B_i, reflect through the perpendicular
// bisector of (image, B_i).  Every previously matched B_j is equidistant
// from both (the pairwise distances agree), hence lies on that bisector and
// stays fixed.
inline Isometry isometry_from_correspondence(
    const std::vector<std::pair<SurfacePoint, SurfacePoint>>& pairs,
    double eps = kCorrespondenceEps) {
  if (pairs.empty())
    throw usage_error("isometry_from_correspondence: need at least one pair");
  const Kappa k = pairs.front().first.kappa;
  for (const auto& [a, b] : pairs)
    if (a.kappa != k || b.kappa != k)
      throw usage_error(
          "isometry_from_correspondence: mixed curvatures in the pair list");
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const double da = distance(pairs[i].first, pairs[j].first);
      const double db = distance(pairs[i].second, pairs[j].second);
      if (std::abs(da - db) > eps)
        throw infeasible_error(
            "isometry_from_correspondence: pairwise distances disagree (" +
            std::to_string(da) + " vs " + std::to_string(db) + ")");
    }

  // Each unmatched pair contributes one mirror.  Conditioning dictates how
  // that mirror is built.  With two well-separated matched targets the
  // mirror is forced -- it must fix both -- so the only freedom left is
  // whether to reflect at all, decided by comparing the two candidate
  // images (no near-zero threshold involved).  With one matched target and
  // a nearly closed gap, the raw bisector normal (image - target) loses
  // direction accuracy like eps / gap, so the mirror is rebuilt as the line
  // through the matched target and the pair's midpoint, both of which
  // provably lie on the bisector.  Otherwise the plain bisector is exact.
  constexpr double kAlreadyMatched = 1e-12;
  constexpr double kAnchorGap = 1e-3;
  // Separation that keeps line_through well-posed: distance on the
  // hyperbolic and flat models, arc distance folded at pi on the sphere
  // (nearly antipodal anchors span the line as badly as coincident ones).
  const auto line_span = [k](const SurfacePoint& x, const SurfacePoint& y) {
    const double d = distance(x, y);
    return k.value() == 1 ? std::min(d, kPi - d) : d;
  };
  Isometry iso{k, {}};
  std::vector<SurfacePoint> matched;
  for (const auto& [a, b] : pairs) {
    const SurfacePoint image = apply(iso, a);
    const double gap = distance(image, b);
    if (gap <= kAlreadyMatched) {
      matched.push_back(b);
      continue;
    }

    Line forced{k, {}};
    bool have_forced = false;
    if (matched.size() >= 2) {
      double best = 0.0;
      std::size_t bi = 0, bj = 1;
      for (std::size_t i = 0; i < matched.size(); ++i)
        for (std::size_t j = i + 1; j < matched.size(); ++j) {
          const double span = line_span(matched[i], matched[j]);
          if (span > best) {
            best = span;
            bi = i;
            bj = j;
          }
        }
      if (best > kAnchorGap) {
        forced = line_through(matched[bi], matched[bj]);
        have_forced = true;
      }
    }
    if (have_forced) {
      if (distance(reflect(forced, image), b) < gap)
        iso.reflections.push_back(forced);
      matched.push_back(b);
      continue;
    }

    Line mirror = perpendicular_bisector(image, b);
    if (gap < kAnchorGap && !matched.empty()) {
      const SurfacePoint mid = midpoint(image, b);
      const SurfacePoint* anchor = nullptr;
      double best = 0.0;
      for (const SurfacePoint& x : matched) {
        const double span = line_span(x, mid);
        if (span > best) {
          best = span;
          anchor = &x;
        }
      }
      if (anchor != nullptr && best > kAnchorGap)
        mirror = line_through(*anchor, mid);
    }
    iso.reflections.push_back(mirror);
    matched.push_back(b);
  }
  return iso;
}

// ---------------------------------------------------------------------------
// Circles.

struct Circle {
  SurfacePoint center;
  double radius;
};

namespace detail {
inline void check_circle_radius(Kappa k, double r) {
  if (!(r > 0.0)) throw domain_error("circle: radius must be positive");
  if (k.value() == 1 && !(r < kPi))
    throw domain_error("circle: spherical radius must be below pi");
}
}  // namespace detail

inline Circle make_circle(const SurfacePoint& center, double radius) {
  detail::check_circle_radius(center.kappa, radius);
  return {center, radius};
}

// Ball area 4 pi S_kappa(r/2)^2.
inline double circle_area(Kappa k, double r) {
  detail::check_circle_radius(k, r);
  const double s = s_kappa(k, r / 2);
  return 4.0 * kPi * s * s;
}

// Circumference 2 pi S_kappa(r).
inline double circle_perimeter(Kappa k, double r) {
  detail::check_circle_radius(k, r);
  return 2.0 * kPi * s_kappa(k, r);
}

inline double circle_area(const Circle& c) {
  return circle_area(c.center.kappa, c.radius);
}

inline double circle_perimeter(const Circle& c) {
  return circle_perimeter(c.center.kappa, c.radius);
}

// The point of the circle at polar angle theta (measured in the oriented
// tangent plane of the center, from its first basis direction).
inline SurfacePoint point_on_circle(const Circle& c, double theta) {
  const SurfacePoint& p = c.center;
  Vec3 e1;
  if (std::abs(p.v.x) < 0.9)
    e1 = project_to_tangent(p, {1.0, 0.0, 0.0});
  else
    e1 = project_to_tangent(p, {0.0, 1.0, 0.0});
  return geodesic(p, rotate_tangent(p, e1, theta), c.radius);
}

// ---------------------------------------------------------------------------
// Geodesic-segment intersection (used by the polygon simplicity check).

namespace detail {

// Whether x (a surface point assumed to lie on the complete geodesic of
// [p, q]) lies on the segment itself: x = lambda p + mu q with
// lambda, mu >= 0 in the embedding.
inline bool on_arc(const Vec3& x, const Vec3& p, const Vec3& q) {
  const double g11 = dot(p, p), g12 = dot(p, q), g22 = dot(q, q);
  const double det = g11 * g22 - g12 * g12;
  if (!(det > 1e-30)) return false;
  const double b1 = dot(x, p), b2 = dot(x, q);
  const double lambda = (b1 * g22 - b2 * g12) / det;
  const double mu = (g11 * b2 - g12 * b1) / det;
  constexpr double slack = -1e-9;
  return lambda >= slack && mu >= slack;
}

inline bool flat_segments_intersect(const Vec3& a0, const Vec3& a1,
                                    const Vec3& b0, const Vec3& b1) {
  auto orient = [](const Vec3& p, const Vec3& q, const Vec3& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  };
  auto on_box = [](const Vec3& p, const Vec3& q, const Vec3& r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
  };
  const double d1 = orient(b0, b1, a0);
  const double d2 = orient(b0, b1, a1);
  const double d3 = orient(a0, a1, b0);
  const double d4 = orient(a0, a1, b1);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_box(b0, b1, a0)) return true;
  if (d2 == 0 && on_box(b0, b1, a1)) return true;
  if (d3 == 0 && on_box(a0, a1, b0)) return true;
  if (d4 == 0 && on_box(a0, a1, b1)) return true;
  return false;
}

}  // namespace detail

// Whether the closed geodesic segments [a0, a1] and [b0, b1] share a point.
// Spherical segments are assumed minor (endpoints non-antipodal).
inline bool segments_intersect(const SurfacePoint& a0, const SurfacePoint& a1,
                               const SurfacePoint& b0,
                               const SurfacePoint& b1) {
  const Kappa k = a0.kappa;
  if (a1.kappa != k || b0.kappa != k || b1.kappa != k)
    throw usage_error("segments_intersect: mixed curvatures");
  if (!k.curved())
    return detail::flat_segments_intersect(a0.v, a1.v, b0.v, b1.v);

  // Each segment spans a plane through the origin; intersect the planes.
  const Vec3 n1 = cross(a0.v, a1.v);
  const Vec3 n2 = cross(b0.v, b1.v);
  const Vec3 d = cross(n1, n2);
  const double scale = norm(n1) * norm(n2);
  if (!(scale > kVanishingNorm2)) return false;  // degenerate segment
  if (norm(d) <= 1e-12 * scale) {
    // Coplanar geodesics: overlapping iff an endpoint of one arc lies on
    // the other.
    return detail::on_arc(b0.v, a0.v, a1.v) ||
           detail::on_arc(b1.v, a0.v, a1.v) ||
           detail::on_arc(a0.v, b0.v, b1.v) || detail::on_arc(a1.v, b0.v, b1.v);
  }
  if (k.value() == 1) {
    const Vec3 x = d / norm(d);
    if (detail::on_arc(x, a0.v, a1.v) && detail::on_arc(x, b0.v, b1.v))
      return true;
    const Vec3 y = -x;
    return detail::on_arc(y, a0.v, a1.v) && detail::on_arc(y, b0.v, b1.v);
  }
  // Hyperbolic: the plane intersection meets the surface only if d is
  // timelike; only the upper-sheet representative matters.
  const double q = d.z * d.z - d.x * d.x - d.y * d.y;
  if (!(q > 0.0)) return false;
  Vec3 x = d / std::sqrt(q);
  if (x.z < 0.0) x = -x;
  return detail::on_arc(x, a0.v, a1.v) && detail::on_arc(x, b0.v, b1.v);
}

// ---------------------------------------------------------------------------
// Open-hemisphere search (spherical model only).

// Searches for a unit vector n with <p_i, n> > 0 for every input point, i.e.
// an open hemisphere containing the whole set.  Candidates are normalized
// subset sums of the vertex set plus a global grid, refined by hill
// climbing; a returned witness is always verified against every point, so a
// positive answer is sound (the search is heuristically complete).
inline std::optional<Vec3> hemisphere_containing(
    const std::vector<SurfacePoint>& points) {
  if (points.empty())
    throw usage_error("hemisphere_containing: empty point set");
  for (const SurfacePoint& p : points)
    if (p.kappa != Kappa::spherical())
      throw usage_error("hemisphere_containing: defined on the sphere only");

  const std::size_t n = points.size();
  auto margin = [&points](const Vec3& dir) {
    double m = dot(points.front().v, dir);
    for (const SurfacePoint& p : points) m = std::min(m, dot(p.v, dir));
    return m;
  };

  Vec3 best{0.0, 0.0, 1.0};
  double best_margin = margin(best);
  auto consider = [&](Vec3 c) {
    const double len = norm(c);
    if (!(len > 1e-12)) return;
    c = c / len;
    const double m = margin(c);
    if (m > best_margin) {
      best_margin = m;
      best = c;
    }
  };

  Vec3 total{0, 0, 0};
  for (const SurfacePoint& p : points) total = total + p.v;
  consider(total);

  if (n <= 14) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Vec3 sum{0, 0, 0};
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sum = sum + points[i].v;
      consider(sum);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      consider(points[i].v);
      for (std::size_t j = i + 1; j < n && n <= 64; ++j) {
        consider(points[i].v + points[j].v);
        for (std::size_t l = j + 1; l < n; ++l)
          consider(points[i].v + points[j].v + points[l].v);
      }
    }
  }

  // Fibonacci-spiral grid.
  constexpr int kGrid = 2048;
  constexpr double kGolden = 2.39996322972865332;  // 2*pi*(1 - 1/phi)
  for (int j = 0; j < kGrid; ++j) {
    const double z = 1.0 - 2.0 * (j + 0.5) / kGrid;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = kGolden * j;
    consider({r * std::cos(phi), r * std::sin(phi), z});
  }

  // Hill-climb refinement with shrinking step.
  for (double step = 0.5; step > 1e-7;) {
    bool improved = false;
    Vec3 e1 = std::abs(best.x) < 0.9 ? cross(best, {1, 0, 0})
                                     : cross(best, {0, 1, 0});
    e1 = e1 / norm(e1);
    const Vec3 e2 = cross(best, e1);
    for (int dir = 0; dir < 8; ++dir) {
      const double t = 2.0 * kPi * dir / 8;
      const Vec3 cand =
          best + step * (std::cos(t) * e1 + std::sin(t) * e2);
      const double len = norm(cand);
      if (!(len > 1e-12)) continue;
      const Vec3 u = cand / len;
      const double m = margin(u);
      if (m > best_margin) {
        best_margin = m;
        best = u;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }

  if (best_margin > 0.0) return best;
  return std::nullopt;
}

}  // namespace spaceform

#endif  // SPACEFORM_SURFACE_HPP
