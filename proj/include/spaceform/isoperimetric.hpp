#ifndef SPACEFORM_ISOPERIMETRIC_HPP
#define SPACEFORM_ISOPERIMETRIC_HPP

// The isoperimetric engine: the optimal circle for a given area, the
// curvature-corrected deficit, the closed-form minimal polygon perimeter,
// a seeded local search that rediscovers the regular n-gon as the perimeter
// minimizer, and the multi-component reduction to a single circle.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "spaceform/errors.hpp"
#include "spaceform/kappa.hpp"
#include "spaceform/polygon.hpp"
#include "spaceform/regular.hpp"
#include "spaceform/rng.hpp"
#include "spaceform/surface.hpp"

namespace spaceform {

// Deficit may dip this far below zero before we call it a violation.
inline constexpr double kDeficitEps = 1e-9;

struct IsoperimetricReport {
  Kappa kappa;
  double area;
  double perimeter;
  double deficit;            // perimeter^2 - 4*pi*area + kappa*area^2
  double optimal_radius;     // radius of the circle enclosing `area`
  double optimal_perimeter;  // perimeter of that circle
};

// The curvature-corrected isoperimetric deficit of a (perimeter, area) pair;
// non-negative for simple closed curves, zero exactly for circles.
inline double deficit_value(Kappa k, double perimeter, double area) {
  return perimeter * perimeter - 4.0 * kPi * area +
         static_cast<double>(k.value()) * area * area;
}

// Radius of the geodesic circle of the given area.
inline double optimal_circle_radius(Kappa k, double A) {
  if (!(A > 0.0)) throw domain_error("optimal_circle: area must be positive");
  if (k.value() == 1 && !(A <= 2.0 * kPi))
    throw domain_error(
        "optimal_circle: spherical hemisphere area 2*pi bounds the feasible "
        "range");
  return as_kappa(k, std::sqrt(A * (4.0 * kPi - k.value() * A)) / (2.0 * kPi));
}

// Perimeter of the geodesic circle of the given area.
inline double optimal_circle_perimeter(Kappa k, double A) {
  if (!(A > 0.0)) throw domain_error("optimal_circle: area must be positive");
  if (k.value() == 1 && !(A <= 2.0 * kPi))
    throw domain_error(
        "optimal_circle: spherical hemisphere area 2*pi bounds the feasible "
        "range");
  return std::sqrt(A * (4.0 * kPi - k.value() * A));
}

// Report for the unique perimeter minimizer among all simple closed curves
// enclosing area A: the geodesic circle.  Its deficit vanishes identically.
inline IsoperimetricReport optimal_circle(Kappa k, double A) {
  const double r0 = optimal_circle_radius(k, A);
  const double L = optimal_circle_perimeter(k, A);
  return IsoperimetricReport{k, A, L, 0.0, r0, L};
}

// Report for a polygon: its own perimeter/area/deficit next to the optimal
// circle for the same area.
inline IsoperimetricReport polygon_report(const GeodesicPolygon& p) {
  const double A = area(p);
  const double ell = perimeter(p);
  return IsoperimetricReport{p.kappa,
                             A,
                             ell,
                             deficit_value(p.kappa, ell, A),
                             optimal_circle_radius(p.kappa, A),
                             optimal_circle_perimeter(p.kappa, A)};
}

// Minimal perimeter over all n-gons of area A: attained by the regular
// n-gon, so evaluate the closed forms.  Feasible areas: A > 0 (flat),
// A in (0, 2*pi) (sphere), A in (0, (n-2)*pi) (hyperbolic; areas within
// 1e-6 of the bound are rejected because the minimizing vertices recede
// to infinity there).
inline double polygon_min_perimeter(Kappa k, int n, double A) {
  if (n < 3) throw domain_error("polygon_min_perimeter: need n >= 3");
  if (!(A > 0.0))
    throw domain_error("polygon_min_perimeter: area must be positive");
  if (k.value() == 1 && !(A < 2.0 * kPi))
    throw domain_error(
        "polygon_min_perimeter: spherical polygon areas stay below 2*pi");
  if (k.value() == -1 && !(A < static_cast<double>(n - 2) * kPi - 1e-6))
    throw domain_error(
        "polygon_min_perimeter: hyperbolic n-gon areas must stay clear of "
        "(n-2)*pi");
  const double r = radius_from_area(k, n, A);
  return n * regular_side(k, n, r);
}

// ---------------------------------------------------------------------------
// Internal cycle helpers: fast paths over raw vertex lists that skip the
// full polygon validation (the search re-validates once at the end).

namespace detail {

inline double cycle_perimeter(const std::vector<SurfacePoint>& v) {
  const std::size_t n = v.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += distance(v[i], v[(i + 1) % n]);
  return total;
}

// True iff every interior angle of the positively oriented cycle lies in
// (0, pi), which for our short geodesic cycles also forces simplicity.
inline bool cycle_strictly_convex(const std::vector<SurfacePoint>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    double ang;
    try {
      ang = interior_angle(v[i], v[(i + n - 1) % n], v[(i + 1) % n]);
    } catch (const degenerate_error&) {
      return false;
    }
    if (!(ang > 0.0) || !(ang < kPi)) return false;
  }
  return true;
}

// Surface point in the direction of the vertex average — a cheap, isometry-
// equivariant center estimate for convex clusters.
inline SurfacePoint centroid_direction(Kappa k,
                                       const std::vector<SurfacePoint>& v) {
  Vec3 sum{0.0, 0.0, 0.0};
  for (const SurfacePoint& p : v) sum = sum + p.v;
  if (!k.curved()) sum = sum / static_cast<double>(v.size());
  return project_to_surface(k, sum);
}

// Radial decomposition of a vertex cycle about its centroid direction.  The
// unit ray directions and the signed central angles between consecutive rays
// are invariant under radial scaling, so the area of the scaled cycle is a
// cheap one-parameter function.
struct RadialFan {
  SurfacePoint center;
  std::vector<Vec3> dirs;    // unit tangent rays center -> vertex
  std::vector<double> dist;  // distances center -> vertex
  std::vector<double> psi;   // signed angle from ray i to ray i+1
};

inline RadialFan make_fan(Kappa k, const std::vector<SurfacePoint>& v) {
  RadialFan fan{centroid_direction(k, v), {}, {}, {}};
  const std::size_t n = v.size();
  fan.dirs.reserve(n);
  fan.dist.reserve(n);
  fan.psi.reserve(n);
  for (const SurfacePoint& p : v) {
    fan.dist.push_back(distance(fan.center, p));
    fan.dirs.push_back(
        normalize_tangent(fan.center, segment_direction(fan.center, p).v));
  }
  for (std::size_t i = 0; i < n; ++i)
    fan.psi.push_back(signed_tangent_angle(fan.center, fan.dirs[i],
                                           fan.dirs[(i + 1) % n]));
  return fan;
}

// Signed area of the geodesic triangle (center, leg d1 along one ray, leg d2
// along a second ray psi away).
inline double fan_triangle_area(Kappa k, double d1, double d2, double psi) {
  if (!(d1 > 0.0) || !(d2 > 0.0) || psi == 0.0) return 0.0;
  const double g = std::abs(psi);
  double a;
  if (!k.curved())
    a = 0.5 * d1 * d2 * std::sin(g);
  else
    a = 2.0 * std::atan2(std::sin(g),
                         ct_kappa(k, d1 / 2) * ct_kappa(k, d2 / 2) +
                             static_cast<double>(k.value()) * std::cos(g));
  return psi < 0.0 ? -a : a;
}

// Area of the cycle scaled radially by t about the fan center.
inline double fan_area_at(Kappa k, const RadialFan& fan, double t) {
  const std::size_t n = fan.dist.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    total += fan_triangle_area(k, t * fan.dist[i], t * fan.dist[(i + 1) % n],
                               fan.psi[i]);
  return total;
}

// Rescales the cycle about its centroid direction until its area hits A.
// Flat: areas scale with t^2, solved directly.  Curved: the area grows
// strictly with t, solved by bisection.
inline std::vector<SurfacePoint> rescale_to_area(
    Kappa k, const std::vector<SurfacePoint>& v, double A) {
  const RadialFan fan = make_fan(k, v);
  double far = 0.0;
  for (double d : fan.dist) far = std::max(far, d);
  if (!(far > 0.0))
    throw degenerate_error("rescale_to_area: cycle collapses to its center");

  double t;
  if (!k.curved()) {
    const double unit_area = fan_area_at(k, fan, 1.0);
    if (!(unit_area > 0.0))
      throw infeasible_error("rescale_to_area: cycle encloses no area");
    t = std::sqrt(A / unit_area);
  } else {
    // On the sphere, cap the stretch so every vertex stays inside the open
    // hemisphere about the center.
    double t_hi = k.value() == 1 ? (kPi / 2 - 0.02) / far : 2.0;
    while (fan_area_at(k, fan, t_hi) < A) {
      if (k.value() == 1 || t_hi * far > 64.0)
        throw infeasible_error(
            "rescale_to_area: target area out of reach for this shape");
      t_hi *= 2.0;
    }
    double t_lo = 0.0;
    for (int it = 0; it < 64; ++it) {
      const double mid = 0.5 * (t_lo + t_hi);
      if (fan_area_at(k, fan, mid) < A)
        t_lo = mid;
      else
        t_hi = mid;
    }
    t = 0.5 * (t_lo + t_hi);
  }

  std::vector<SurfacePoint> out;
  out.reserve(fan.dist.size());
  for (std::size_t i = 0; i < fan.dist.size(); ++i)
    out.push_back(geodesic(fan.center, fan.dirs[i], t * fan.dist[i]));
  return out;
}

// Two orthonormal tangent directions at p (deterministic choice).
inline void tangent_frame(const SurfacePoint& p, Vec3& u1, Vec3& u2) {
  Vec3 t1 = project_to_tangent(p, {1.0, 0.0, 0.0});
  if (inner(p.kappa, t1, t1) < 1e-6)
    t1 = project_to_tangent(p, {0.0, 1.0, 0.0});
  u1 = normalize_tangent(p, t1);
  u2 = tangent_rot90(p, u1);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Random convex polygons (shared by the verification suites and the search).

// A random convex n-gon of area A around the base point: n sorted central
// angles on a circle of random radius, radial perturbation up to 20%,
// convexity rejection, then rescaling to the exact target area.
inline GeodesicPolygon random_convex_polygon(Kappa k, int n, double A,
                                             Rng& rng) {
  if (n < 3) throw usage_error("random_convex_polygon: need n >= 3");
  for (int attempt = 0; attempt < 400; ++attempt) {
    const double base_r = k.value() == 1 ? rng.uniform(0.25, 1.1)
                                         : rng.uniform(0.4, 1.4);
    std::vector<double> phis(static_cast<std::size_t>(n));
    for (double& phi : phis) phi = rng.uniform(0.0, 2.0 * kPi);
    std::sort(phis.begin(), phis.end());
    bool spread = true;
    for (int i = 0; i < n; ++i) {
      const double gap =
          i + 1 < n ? phis[i + 1] - phis[i] : phis[0] + 2.0 * kPi - phis[n - 1];
      if (gap < 0.05) spread = false;
    }
    if (!spread) continue;

    std::vector<SurfacePoint> verts;
    verts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double rr = base_r * (1.0 + 0.2 * (2.0 * rng.uniform() - 1.0));
      const Vec3 ray{std::cos(phis[i]), std::sin(phis[i]), 0.0};
      verts.push_back(geodesic(base_point(k), ray, rr));
    }
    if (!detail::cycle_strictly_convex(verts)) continue;
    std::vector<SurfacePoint> scaled;
    try {
      scaled = detail::rescale_to_area(k, verts, A);
    } catch (const error&) {
      continue;
    }
    if (!detail::cycle_strictly_convex(scaled)) continue;
    if (k.value() == 1) {
      bool in_hemisphere = true;
      for (const SurfacePoint& p : scaled)
        if (!(p.z() > 0.0)) in_hemisphere = false;
      if (!in_hemisphere) continue;
    }
    // Shapes needing an extreme rescale can land far enough out that the
    // coordinate model loses membership precision; discard those too.
    try {
      GeodesicPolygon poly = make_polygon(k, std::move(scaled));
      if (!is_convex(poly)) continue;
      return poly;
    } catch (const error&) {
      continue;
    }
  }
  throw numeric_error(
      "random_convex_polygon: rejection sampling failed to produce a convex "
      "polygon of the requested area");
}

// ---------------------------------------------------------------------------
// Perimeter minimization at fixed area.

struct SearchOptions {
  double initial_step = 0.1;
  double min_step = 1e-6;    // step-halving floor
  double tol_step = 1e-12;   // a move must beat the perimeter by this much
  double tol_regularity = 1e-5;
  int max_iterations = 100000;  // accepted-move cap
};

struct MinimizerResult {
  GeodesicPolygon polygon;
  double perimeter;
  double target_area;
  int iterations;
  bool converged;
  // Max deviation of the vertex distances-to-center and of the vertex
  // angles from their respective means.
  double regularity_residual;
};

namespace detail {

inline double regularity_residual_of(Kappa k,
                                     const std::vector<SurfacePoint>& v) {
  const SurfacePoint center = centroid_direction(k, v);
  const std::size_t n = v.size();
  std::vector<double> dist(n), ang(n);
  double dist_mean = 0.0, ang_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dist[i] = distance(center, v[i]);
    ang[i] = interior_angle(v[i], v[(i + n - 1) % n], v[(i + 1) % n]);
    dist_mean += dist[i];
    ang_mean += ang[i];
  }
  dist_mean /= n;
  ang_mean /= n;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(dist[i] - dist_mean));
    worst = std::max(worst, std::abs(ang[i] - ang_mean));
  }
  return worst;
}

inline bool cycle_admissible(Kappa k, const std::vector<SurfacePoint>& v) {
  if (!cycle_strictly_convex(v)) return false;
  if (k.value() == 1)
    for (const SurfacePoint& p : v)
      if (!(p.z() > 0.0)) return false;
  return true;
}

}  // namespace detail

// Local search for the minimal-perimeter n-gon of area A: starting from a
// random convex n-gon, repeatedly move single vertices along tangent
// directions (step-halving pattern search), restoring the area constraint
// after every trial move by radial rescaling about the centroid direction.
// Accepts only perimeter-decreasing moves, so the perimeter trajectory is
// monotone; the same seed reproduces the identical trajectory.
inline MinimizerResult minimize_polygon(Kappa k, int n, double A,
                                        std::uint64_t seed,
                                        const SearchOptions& opts = {}) {
  // Validate the target range once, up front.
  (void)polygon_min_perimeter(k, n, A);
  Rng rng(seed);
  std::vector<SurfacePoint> current =
      random_convex_polygon(k, n, A, rng).vertices;
  double current_perimeter = detail::cycle_perimeter(current);

  int accepted = 0;
  bool cap_hit = false;
  double step = opts.initial_step;
  while (step >= opts.min_step && !cap_hit) {
    bool any_accept = false;
    for (std::size_t i = 0; i < current.size() && !cap_hit; ++i) {
      Vec3 u1, u2;
      detail::tangent_frame(current[i], u1, u2);
      const Vec3 dirs[4] = {u1, -u1, u2, -u2};
      for (const Vec3& dir : dirs) {
        std::vector<SurfacePoint> trial = current;
        trial[i] = geodesic(trial[i], dir, step);
        std::vector<SurfacePoint> rescaled;
        try {
          rescaled = detail::rescale_to_area(k, trial, A);
        } catch (const error&) {
          continue;
        }
        if (!detail::cycle_admissible(k, rescaled)) continue;
        const double p = detail::cycle_perimeter(rescaled);
        if (p < current_perimeter - opts.tol_step) {
          current = std::move(rescaled);
          current_perimeter = p;
          any_accept = true;
          if (++accepted >= opts.max_iterations) {
            cap_hit = true;
            break;
          }
        }
      }
    }
    if (!any_accept) step /= 2.0;
  }

  const double residual = detail::regularity_residual_of(k, current);
  GeodesicPolygon poly = make_polygon(k, std::move(current));
  return MinimizerResult{std::move(poly),
                         current_perimeter,
                         A,
                         accepted,
                         !cap_hit && residual <= opts.tol_regularity,
                         residual};
}

// Convenience: best of `restarts` seeded runs (seeds seed0, seed0+1, ...).
inline MinimizerResult minimize_polygon_best(Kappa k, int n, double A,
                                             std::uint64_t seed0, int restarts,
                                             const SearchOptions& opts = {}) {
  if (restarts < 1)
    throw usage_error("minimize_polygon_best: need at least one restart");
  MinimizerResult best = minimize_polygon(k, n, A, seed0, opts);
  for (int s = 1; s < restarts; ++s) {
    MinimizerResult cand = minimize_polygon(k, n, A, seed0 + s, opts);
    if (cand.perimeter < best.perimeter) best = std::move(cand);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Multi-component reduction.

struct MultiComponentOptimum {
  double single_radius;        // radius of one circle enclosing the total area
  double separate_perimeter;   // sum of per-component optimal circles
  double merged_perimeter;     // one circle for the whole area (never larger)
};

inline MultiComponentOptimum multi_component_optimum(
    Kappa k, const std::vector<double>& areas) {
  if (areas.empty())
    throw usage_error("multi_component_optimum: need at least one area");
  double total = 0.0;
  double separate = 0.0;
  for (double A : areas) {
    if (!(A > 0.0))
      throw domain_error("multi_component_optimum: areas must be positive");
    total += A;
    separate += optimal_circle_perimeter(k, A);
  }
  if (k.value() == 1 && !(total <= 2.0 * kPi))
    throw domain_error(
        "multi_component_optimum: total spherical area must stay within "
        "2*pi");
  const double r0 = optimal_circle_radius(k, total);
  return MultiComponentOptimum{r0, separate, optimal_circle_perimeter(k, total)};
}

}  // namespace spaceform

#endif  // SPACEFORM_ISOPERIMETRIC_HPP
