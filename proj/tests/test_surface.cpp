// Model surfaces: membership, distance, geodesics, tangent calculus,
// reflections/isometries, circles, arc intersection, hemisphere witnesses.

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "spaceform/rng.hpp"
#include "spaceform/sampling.hpp"
#include "spaceform/surface.hpp"

using namespace spaceform;

namespace {

const Kappa kAll[] = {Kappa::hyperbolic(), Kappa::flat(), Kappa::spherical()};

double coord_gap(const SurfacePoint& p, const SurfacePoint& q) {
  return std::max({std::abs(p.x() - q.x()), std::abs(p.y() - q.y()),
                   std::abs(p.z() - q.z())});
}

}  // namespace

TEST_CASE("points are validated against the defining quadric") {
  REQUIRE_NOTHROW(make_surface_point(Kappa::spherical(), 1.0, 0.0, 0.0));
  REQUIRE_NOTHROW(make_surface_point(Kappa::flat(), 3.0, -2.0, 1.0));
  REQUIRE_NOTHROW(make_surface_point(Kappa::hyperbolic(), std::sinh(1.0), 0.0,
                                     std::cosh(1.0)));
  REQUIRE_THROWS_AS(make_surface_point(Kappa::spherical(), 1.0, 1.0, 0.0),
                    domain_error);
  REQUIRE_THROWS_AS(make_surface_point(Kappa::flat(), 0.0, 0.0, 2.0),
                    domain_error);
  // The lower hyperboloid sheet is not part of the model.
  REQUIRE_THROWS_AS(make_surface_point(Kappa::hyperbolic(), std::sinh(1.0),
                                       0.0, -std::cosh(1.0)),
                    domain_error);

  for (const Kappa k : kAll) {
    REQUIRE(membership_residual(base_point(k)) == 0.0);
    const SurfacePoint p = project_to_surface(k, {0.4, -0.2, 1.3});
    REQUIRE(membership_residual(p) <= 1e-14);
    // Projection is idempotent.
    REQUIRE(coord_gap(project_to_surface(k, p.v), p) <= 1e-15);
  }
}

TEST_CASE("distance matches closed-form oracles") {
  const Kappa s = Kappa::spherical();
  REQUIRE(std::abs(distance(base_point(s),
                            make_surface_point(s, 1.0, 0.0, 0.0)) -
                   kPi / 2) < 1e-15);
  REQUIRE(std::abs(distance(base_point(s),
                            make_surface_point(s, 0.0, 0.0, -1.0)) -
                   kPi) < 1e-15);

  const Kappa h = Kappa::hyperbolic();
  const SurfacePoint a =
      make_surface_point(h, std::sinh(1.0), 0.0, std::cosh(1.0));
  const SurfacePoint b =
      make_surface_point(h, 0.0, std::sinh(1.0), std::cosh(1.0));
  REQUIRE(std::abs(distance(base_point(h), a) - 1.0) < 1e-14);
  // <a,b> = -cosh^2(1), so d = arccosh(cosh^2 1).
  const double expected = std::acosh(std::cosh(1.0) * std::cosh(1.0));
  REQUIRE(std::abs(distance(a, b) - expected) < 1e-13);

  const Kappa f = Kappa::flat();
  REQUIRE(std::abs(distance(make_surface_point(f, 1.0, 2.0, 1.0),
                            make_surface_point(f, 4.0, 6.0, 1.0)) -
                   5.0) < 1e-15);

  REQUIRE_THROWS_AS(distance(base_point(f), base_point(s)), usage_error);
}

TEST_CASE("geodesics have unit speed and land where directed") {
  for (const Kappa k : kAll) {
    Rng rng(11 + k.value());
    for (int i = 0; i < 50; ++i) {
      const SurfacePoint p = random_point(k, rng);
      const Vec3 raw{rng.uniform(-1, 1), rng.uniform(-1, 1),
                     rng.uniform(-1, 1)};
      const Vec3 u = normalize_tangent(p, project_to_tangent(p, raw));
      const double t = rng.uniform(0.05, k.value() == 1 ? 3.0 : 2.5);
      const SurfacePoint q = geodesic(p, u, t);
      REQUIRE(membership_residual(q) <= 1e-12);
      const double want = (k.value() == 1 && t > kPi) ? 2 * kPi - t : t;
      REQUIRE(std::abs(distance(p, q) - want) <= 1e-10);

      // segment_direction retraces the segment.
      if (distance(p, q) > 1e-6 && want == t) {
        const TangentVector dir = segment_direction(p, q);
        const Vec3 unit = normalize_tangent(p, dir.v);
        REQUIRE(coord_gap(geodesic(p, unit, t), q) <= 1e-10);
      }
    }
    const SurfacePoint p = random_point(k, rng);
    const Vec3 u = normalize_tangent(p, project_to_tangent(p, {0.3, 0.7, 0.1}));
    REQUIRE(coord_gap(geodesic(p, u, 0.0), p) <= 1e-15);
  }
}

TEST_CASE("segment_direction rejects coincident and antipodal endpoints") {
  const Kappa s = Kappa::spherical();
  const SurfacePoint n = base_point(s);
  const SurfacePoint south = make_surface_point(s, 0.0, 0.0, -1.0);
  REQUIRE_THROWS_AS(segment_direction(n, n), degenerate_error);
  REQUIRE_THROWS_AS(segment_direction(n, south), degenerate_error);
  auto p = base_point(Kappa::flat());
  REQUIRE_THROWS_AS(segment_direction(p, p), degenerate_error);
}

TEST_CASE("tangent projection and rotation are consistent") {
  for (const Kappa k : kAll) {
    Rng rng(29 + k.value());
    for (int i = 0; i < 40; ++i) {
      const SurfacePoint p = random_point(k, rng);
      const Vec3 raw{rng.uniform(-2, 2), rng.uniform(-2, 2),
                     rng.uniform(-2, 2)};
      const Vec3 u = project_to_tangent(p, raw);
      REQUIRE(std::abs(tangency_residual(p, u)) <= 1e-12);

      const Vec3 e = normalize_tangent(p, u);
      REQUIRE(std::abs(tangent_norm(p, e) - 1.0) <= 1e-12);

      // rot90 is a quarter turn: orthogonal, same norm, signed angle +pi/2.
      const Vec3 r = tangent_rot90(p, e);
      REQUIRE(std::abs(inner(k, e, r)) <= 1e-12);
      REQUIRE(std::abs(tangent_norm(p, r) - 1.0) <= 1e-12);
      REQUIRE(std::abs(signed_tangent_angle(p, e, r) - kPi / 2) <= 1e-12);

      const double phi = rng.uniform(-3.0, 3.0);
      const Vec3 w = rotate_tangent(p, e, phi);
      const Vec3 back = rotate_tangent(p, w, -phi);
      REQUIRE(std::abs(tangent_angle(p, e, w) -
                       std::min(std::abs(phi), 2 * kPi - std::abs(phi))) <=
              1e-9);
      REQUIRE(std::max({std::abs(back.x - e.x), std::abs(back.y - e.y),
                        std::abs(back.z - e.z)}) <= 1e-12);
    }
    const SurfacePoint p = base_point(k);
    REQUIRE_THROWS_AS(normalize_tangent(p, {0, 0, 0}), degenerate_error);
  }
}

TEST_CASE("rotating by the signed angle aligns directions") {
  for (const Kappa k : kAll) {
    Rng rng(47 + k.value());
    for (int i = 0; i < 40; ++i) {
      const SurfacePoint p = random_point(k, rng);
      const Vec3 raw1{rng.uniform(-1, 1), rng.uniform(-1, 1),
                      rng.uniform(-1, 1)};
      const Vec3 raw2{rng.uniform(-1, 1), rng.uniform(-1, 1),
                      rng.uniform(-1, 1)};
      const Vec3 u1 = normalize_tangent(p, project_to_tangent(p, raw1));
      const Vec3 u2 = normalize_tangent(p, project_to_tangent(p, raw2));
      const double phi = signed_tangent_angle(p, u1, u2);
      REQUIRE(phi > -kPi);
      REQUIRE(phi <= kPi);
      const Vec3 v = rotate_tangent(p, u1, phi);
      REQUIRE(std::max({std::abs(v.x - u2.x), std::abs(v.y - u2.y),
                        std::abs(v.z - u2.z)}) <= 1e-10);
    }
  }
}

TEST_CASE("lines evaluate to zero on their points and reflect isometrically") {
  for (const Kappa k : kAll) {
    Rng rng(73 + k.value());
    for (int i = 0; i < 40; ++i) {
      const SurfacePoint p = random_point(k, rng);
      const SurfacePoint q = random_point(k, rng);
      if (distance(p, q) < 1e-3) continue;

      const Line l = line_through(p, q);
      REQUIRE(std::abs(line_eval(l, p)) <= 1e-12);
      REQUIRE(std::abs(line_eval(l, q)) <= 1e-12);

      // Reflection through the perpendicular bisector swaps the endpoints.
      const Line bis = perpendicular_bisector(p, q);
      REQUIRE(coord_gap(reflect(bis, p), q) <= 1e-11);
      REQUIRE(coord_gap(reflect(bis, q), p) <= 1e-11);

      // Reflections are involutive isometries that flip the line's sign.
      const SurfacePoint x = random_point(k, rng);
      const SurfacePoint y = random_point(k, rng);
      const Line mirror = random_line(k, rng);
      REQUIRE(coord_gap(reflect(mirror, reflect(mirror, x)), x) <= 1e-11);
      REQUIRE(std::abs(distance(reflect(mirror, x), reflect(mirror, y)) -
                       distance(x, y)) <= 1e-10);
      REQUIRE(std::abs(line_eval(mirror, reflect(mirror, x)) +
                       line_eval(mirror, x)) <= 1e-10);
    }
  }
}

TEST_CASE("isometries are recovered from matched point pairs") {
  for (const Kappa k : kAll) {
    Rng rng(101 + k.value());
    for (int trial = 0; trial < 50; ++trial) {
      const int m = 1 + static_cast<int>(rng.uniform_int(0, 2));
      const Isometry truth = random_isometry(k, m, rng);

      std::vector<std::pair<SurfacePoint, SurfacePoint>> pairs;
      for (int i = 0; i < 3; ++i) {
        const SurfacePoint a = random_point(k, rng);
        pairs.emplace_back(a, apply(truth, a));
      }
      const Isometry rec = isometry_from_correspondence(pairs);
      REQUIRE(rec.reflections.size() <= pairs.size());
      for (const auto& [a, b] : pairs)
        REQUIRE(distance(apply(rec, a), b) <= 1e-10);
    }

    // Incompatible pairwise distances are refused.
    const SurfacePoint p0 = base_point(k);
    const Vec3 e1 = normalize_tangent(p0, {1, 0, 0});
    std::vector<std::pair<SurfacePoint, SurfacePoint>> bad = {
        {p0, p0},
        {geodesic(p0, e1, 0.5), geodesic(p0, e1, 0.9)},
    };
    REQUIRE_THROWS_AS(isometry_from_correspondence(bad), infeasible_error);
  }
  REQUIRE_THROWS_AS(isometry_from_correspondence({}), usage_error);
}

TEST_CASE("circle area and perimeter follow the closed forms") {
  const Kappa f = Kappa::flat();
  REQUIRE(std::abs(circle_area(f, 1.0) - kPi) < 1e-15);
  REQUIRE(std::abs(circle_perimeter(f, 2.0) - 4 * kPi) < 1e-14);

  // A hyperbolic disk of radius 2*arcsinh(1/2) has area exactly pi.
  const Kappa h = Kappa::hyperbolic();
  const double r = 2.0 * std::asinh(0.5);
  REQUIRE(std::abs(circle_area(h, r) - kPi) < 1e-14);

  // A spherical cap of radius pi/2 is a hemisphere.
  const Kappa s = Kappa::spherical();
  REQUIRE(std::abs(circle_area(s, kPi / 2) - 2 * kPi) < 1e-14);
  REQUIRE(std::abs(circle_perimeter(s, kPi / 2) - 2 * kPi) < 1e-14);

  for (const Kappa k : kAll) {
    Rng rng(131 + k.value());
    const SurfacePoint c = random_point(k, rng);
    const Circle circle = make_circle(c, 0.8);
    for (double theta : {0.0, 1.0, 2.5, 5.0}) {
      const SurfacePoint p = point_on_circle(circle, theta);
      REQUIRE(membership_residual(p) <= 1e-12);
      REQUIRE(std::abs(distance(c, p) - 0.8) <= 1e-12);
    }
    REQUIRE_THROWS_AS(make_circle(c, 0.0), domain_error);
    REQUIRE_THROWS_AS(make_circle(c, -1.0), domain_error);
  }
  REQUIRE_THROWS_AS(make_circle(base_point(s), kPi), domain_error);
}

TEST_CASE("segment intersection detects crossings on every surface") {
  const Kappa f = Kappa::flat();
  auto fp = [&](double x, double y) { return make_surface_point(f, x, y, 1); };
  REQUIRE(segments_intersect(fp(0, 0), fp(1, 1), fp(0, 1), fp(1, 0)));
  REQUIRE_FALSE(segments_intersect(fp(0, 0), fp(1, 0), fp(0, 1), fp(1, 1)));
  // Touching at a shared endpoint counts as intersecting.
  REQUIRE(segments_intersect(fp(0, 0), fp(1, 0), fp(1, 0), fp(1, 1)));
  // Collinear overlap.
  REQUIRE(segments_intersect(fp(0, 0), fp(2, 0), fp(1, 0), fp(3, 0)));
  REQUIRE_FALSE(segments_intersect(fp(0, 0), fp(1, 0), fp(2, 0), fp(3, 0)));

  for (const Kappa k : {Kappa::hyperbolic(), Kappa::spherical()}) {
    const SurfacePoint p = base_point(k);
    const Vec3 e1 = normalize_tangent(p, {1, 0, 0});
    const Vec3 e2 = normalize_tangent(p, {0, 1, 0});
    // Two short geodesic crosses through the base point.
    REQUIRE(segments_intersect(geodesic(p, e1, -0.5), geodesic(p, e1, 0.5),
                               geodesic(p, e2, -0.5), geodesic(p, e2, 0.5)));
    // Parallel-ish disjoint arcs.
    const SurfacePoint a0 = geodesic(geodesic(p, e2, 0.3), e1, -0.4);
    const SurfacePoint a1 = geodesic(geodesic(p, e2, 0.3), e1, 0.4);
    const SurfacePoint b0 = geodesic(geodesic(p, e2, -0.3), e1, -0.4);
    const SurfacePoint b1 = geodesic(geodesic(p, e2, -0.3), e1, 0.4);
    REQUIRE_FALSE(segments_intersect(a0, a1, b0, b1));
  }

  // On the sphere, arcs that only meet on the far side must not report a hit.
  const Kappa s = Kappa::spherical();
  const SurfacePoint n = base_point(s);
  const Vec3 e1 = normalize_tangent(n, {1, 0, 0});
  const Vec3 e2 = normalize_tangent(n, {0, 1, 0});
  REQUIRE_FALSE(segments_intersect(geodesic(n, e1, 0.1), geodesic(n, e1, 0.6),
                                   geodesic(n, e2, 0.1), geodesic(n, e2, 0.6)));
}

TEST_CASE("hemisphere witnesses exist exactly for hemispherical clusters") {
  const Kappa s = Kappa::spherical();
  Rng rng(999);

  std::vector<SurfacePoint> cluster;
  for (int i = 0; i < 12; ++i) cluster.push_back(random_point(s, rng));
  const auto witness = hemisphere_containing(cluster);
  REQUIRE(witness.has_value());
  for (const SurfacePoint& p : cluster) REQUIRE(dot(*witness, p.v) > 0.0);

  // The regular tetrahedron's vertices sum to zero: no open hemisphere.
  const double q = 1.0 / std::sqrt(3.0);
  std::vector<SurfacePoint> tetra = {
      make_surface_point(s, q, q, q), make_surface_point(s, q, -q, -q),
      make_surface_point(s, -q, q, -q), make_surface_point(s, -q, -q, q)};
  REQUIRE_FALSE(hemisphere_containing(tetra).has_value());

  std::vector<SurfacePoint> axes = {
      make_surface_point(s, 1, 0, 0),  make_surface_point(s, -1, 0, 0),
      make_surface_point(s, 0, 1, 0),  make_surface_point(s, 0, -1, 0),
      make_surface_point(s, 0, 0, 1)};
  REQUIRE_FALSE(hemisphere_containing(axes).has_value());

  REQUIRE_THROWS_AS(hemisphere_containing({base_point(Kappa::flat())}),
                    usage_error);
}
