#ifndef SPACEFORM_SAMPLING_HPP
#define SPACEFORM_SAMPLING_HPP

// Deterministic random generators for the verification suites: valid
// triangles, convex open chains, inscribed spherical polygons, lines, points,
// and isometries.  Everything draws through Rng, so identical seeds replay
// identical objects.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "spaceform/errors.hpp"
#include "spaceform/kappa.hpp"
#include "spaceform/polygon.hpp"
#include "spaceform/rng.hpp"
#include "spaceform/surface.hpp"
#include "spaceform/triangle.hpp"
#include "spaceform/vec3.hpp"

namespace spaceform {

// A random point at distance < 1.2 from the base point.
inline SurfacePoint random_point(Kappa k, Rng& rng) {
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const double r = rng.uniform(0.05, 1.2);
  return geodesic(base_point(k), Vec3{std::cos(phi), std::sin(phi), 0.0}, r);
}

// A random line (complete geodesic) passing near the base point.
inline Line random_line(Kappa k, Rng& rng) {
  switch (k.value()) {
    case 1: {
      const double z = rng.uniform(-1.0, 1.0);
      const double phi = rng.uniform(0.0, 2.0 * kPi);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      return line_from_normal(k, {r * std::cos(phi), r * std::sin(phi), z});
    }
    case -1: {
      // Unit spacelike normal of a line at signed distance d from the base
      // point: (cosh d cos t, cosh d sin t, sinh d).  Bounding |d| keeps
      // compositions of these reflections in the numerically comfortable
      // part of the hyperboloid (coordinates grow like cosh of the offset).
      const double t = rng.uniform(0.0, 2.0 * kPi);
      const double d = rng.uniform(-0.6, 0.6);
      return line_from_normal(
          k, {std::cosh(d) * std::cos(t), std::cosh(d) * std::sin(t),
              std::sinh(d)});
    }
    default: {
      const double t = rng.uniform(0.0, 2.0 * kPi);
      const double off = rng.uniform(-1.0, 1.0);
      return line_from_normal(k, {std::cos(t), std::sin(t), off});
    }
  }
}

// A random isometry: a composition of `reflections` random reflections.
inline Isometry random_isometry(Kappa k, int reflections, Rng& rng) {
  Isometry iso{k, {}};
  for (int i = 0; i < reflections; ++i)
    iso.reflections.push_back(random_line(k, rng));
  return iso;
}

// A random valid triangle with sides of order one, built from two sides and
// the included angle (always satisfiable), then canonically placed.
inline Triangle random_triangle(Kappa k, Rng& rng) {
  for (;;) {
    const double hi = k.value() == 1 ? 1.4 : 2.0;
    const double a = rng.uniform(0.1, hi);
    const double b = rng.uniform(0.1, hi);
    const double gamma = rng.uniform(0.15, kPi - 0.15);
    try {
      return triangle_from_sas(k, a, b, gamma);
    } catch (const error&) {
      continue;  // near-degenerate draw; resample
    }
  }
}

struct ChainData {
  std::vector<double> sides;
  std::vector<double> angles;
};

// A random open chain whose closure (chain plus closing side) is a convex
// polygon — the hypothesis of the arm-opening monotonicity statement.
// Keeps `margin` of room below pi in every interior angle so the angles can
// still be opened.
inline ChainData random_convex_chain(Kappa k, Rng& rng, double margin = 0.05) {
  for (;;) {
    const int n_sides = rng.uniform_int(3, 6);
    ChainData chain;
    chain.sides.reserve(n_sides);
    for (int i = 0; i < n_sides; ++i)
      chain.sides.push_back(rng.uniform(0.3, 0.9));
    // Interior angles of a nearly regular closed (n_sides+1)-gon, jittered:
    // such chains close convexly with high probability.
    const int n_vertices = n_sides + 1;
    const double flat_angle = kPi * (n_vertices - 2) / n_vertices;
    for (int i = 0; i + 1 < n_sides; ++i) {
      const double jitter = rng.uniform(-0.35, 0.35);
      chain.angles.push_back(flat_angle + jitter);
    }
    bool angles_ok = true;
    for (double a : chain.angles)
      if (!(a > 0.2) || !(a < kPi - margin)) angles_ok = false;
    if (!angles_ok) continue;
    try {
      const std::vector<SurfacePoint> pts =
          arm_chain_points(k, chain.sides, chain.angles);
      const GeodesicPolygon closed = make_polygon(k, pts);
      if (!is_convex(closed, 1e-6)) continue;
    } catch (const error&) {
      continue;
    }
    return chain;
  }
}

// A random convex spherical polygon inscribed in a circle of radius below
// pi/2 about the base point.
inline GeodesicPolygon random_inscribed_spherical_polygon(Rng& rng) {
  const Kappa k = Kappa::spherical();
  for (;;) {
    const int n = rng.uniform_int(3, 10);
    const double rho = rng.uniform(0.05, kPi / 2 - 0.01);
    std::vector<double> phis(static_cast<std::size_t>(n));
    for (double& phi : phis) phi = rng.uniform(0.0, 2.0 * kPi);
    std::sort(phis.begin(), phis.end());
    bool spread = true;
    for (int i = 0; i < n; ++i) {
      const double gap =
          i + 1 < n ? phis[i + 1] - phis[i] : phis[0] + 2.0 * kPi - phis[n - 1];
      if (gap < 0.05 || gap > kPi - 0.05) spread = false;
    }
    if (!spread) continue;
    std::vector<SurfacePoint> verts;
    verts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      verts.push_back(geodesic(base_point(k),
                               Vec3{std::cos(phis[i]), std::sin(phis[i]), 0.0},
                               rho));
    GeodesicPolygon poly = make_polygon(k, std::move(verts));
    if (!is_convex(poly)) continue;
    return poly;
  }
}

}  // namespace spaceform

#endif  // SPACEFORM_SAMPLING_HPP
