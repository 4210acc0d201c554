#ifndef SPACEFORM_TRIANGLE_HPP
#define SPACEFORM_TRIANGLE_HPP

// Triangle solvers on the constant-curvature surfaces: the metric laws,
// three independent area routes (half-argument product, two-sides-and-angle,
// angle excess), congruence decision, isosceles constructions, and the
// two-fixed-sides area maximizer.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "spaceform/errors.hpp"
#include "spaceform/kappa.hpp"
#include "spaceform/surface.hpp"
#include "spaceform/vec3.hpp"

namespace spaceform {

// Absolute tolerance on lengths/angles for congruence decisions.
inline constexpr double kCongruenceEps = 1e-9;

struct Triangle {
  Kappa kappa;
  std::array<SurfacePoint, 3> vertices;  // P, Q, R
  double a, b, c;  // side lengths: a = d(Q,R), b = d(R,P), c = d(P,Q)
  double alpha, beta, gamma;  // interior angles at P, Q, R
  double area;
};

namespace detail {

inline void check_triangle_sides(Kappa k, double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
    throw infeasible_error("triangle: all sides must be positive");
  if (!(a < b + c) || !(b < a + c) || !(c < a + b))
    throw infeasible_error("triangle: strict triangle inequality violated");
  if (k.value() == 1 && !(a + b + c < 2.0 * kPi))
    throw infeasible_error(
        "triangle: spherical perimeter must stay below 2*pi");
}

inline void check_open_angle(double x, const char* what) {
  if (!(x > 0.0) || !(x < kPi))
    throw domain_error(std::string(what) + ": angle must lie in (0, pi)");
}

// Interior angle opposite side `opp`, between the adjacent sides.
inline double angle_opposite(Kappa k, double opp, double adj1, double adj2) {
  double x;
  if (!k.curved())
    x = (adj1 * adj1 + adj2 * adj2 - opp * opp) / (2.0 * adj1 * adj2);
  else
    x = (c_kappa(k, opp) - c_kappa(k, adj1) * c_kappa(k, adj2)) /
        (static_cast<double>(k.value()) * s_kappa(k, adj1) * s_kappa(k, adj2));
  return std::acos(clamp_abs_one(x, kDomainEps, "angles_from_sss"));
}

}  // namespace detail

// Third side from two sides and the included angle (the cosine law).
inline double side_from_sas(Kappa k, double a, double b, double gamma) {
  if (!(a > 0.0) || !(b > 0.0))
    throw domain_error("side_from_sas: sides must be positive");
  if (k.value() == 1 && !(a + b < kPi))
    throw domain_error("side_from_sas: spherical inputs require a + b < pi");
  detail::check_open_angle(gamma, "side_from_sas");
  if (!k.curved()) {
    // (a-b)^2 + 4ab sin^2(g/2) is the cancellation-free planar form.
    const double d = a - b;
    const double sh = std::sin(gamma / 2);
    return std::sqrt(d * d + 4.0 * a * b * sh * sh);
  }
  const double arg =
      c_kappa(k, a) * c_kappa(k, b) +
      static_cast<double>(k.value()) * s_kappa(k, a) * s_kappa(k, b) *
          std::cos(gamma);
  try {
    return ac_kappa(k, arg);
  } catch (const domain_error& e) {
    throw numeric_error(std::string("side_from_sas: ") + e.what());
  }
}

struct TriangleAngles {
  double alpha;
  double beta;
  double gamma;
};

// All three interior angles from the three sides.
inline TriangleAngles angles_from_sss(Kappa k, double a, double b, double c) {
  detail::check_triangle_sides(k, a, b, c);
  return {detail::angle_opposite(k, a, b, c),
          detail::angle_opposite(k, b, a, c),
          detail::angle_opposite(k, c, a, b)};
}

// Area from the three sides via the half-argument tangent product; reduces
// to the classical Heron formula on the plane.
inline double area_heron(Kappa k, double a, double b, double c) {
  detail::check_triangle_sides(k, a, b, c);
  const double s = (a + b + c) / 2;
  const double prod = t_kappa(k, s / 2) * t_kappa(k, (s - a) / 2) *
                      t_kappa(k, (s - b) / 2) * t_kappa(k, (s - c) / 2);
  const double root = std::sqrt(std::max(0.0, prod));
  if (!k.curved()) return 4.0 * root;
  return 4.0 * std::atan(root);
}

// Area from two sides and the included angle.
inline double area_sas(Kappa k, double a, double b, double gamma) {
  if (!(a > 0.0) || !(b > 0.0))
    throw domain_error("area_sas: sides must be positive");
  if (k.value() == 1 && (!(a < kPi) || !(b < kPi)))
    throw domain_error("area_sas: spherical sides must stay below pi");
  detail::check_open_angle(gamma, "area_sas");
  if (!k.curved()) return a * b * std::sin(gamma) / 2;
  // cot(A/2) = (CT(a/2) CT(b/2) + kappa cos(gamma)) / sin(gamma); the
  // circular cotangent inverse applies on both curved surfaces.
  const double x = ct_kappa(k, a / 2) * ct_kappa(k, b / 2) +
                   static_cast<double>(k.value()) * std::cos(gamma);
  return 2.0 * std::atan2(std::sin(gamma), x);
}

// Area from the angle excess/defect (curved surfaces only).
inline double area_from_angles(Kappa k, double alpha, double beta,
                               double gamma) {
  if (!k.curved())
    throw usage_error(
        "area_from_angles: flat triangles all have angle sum pi; area is not "
        "determined by the angles");
  detail::check_open_angle(alpha, "area_from_angles");
  detail::check_open_angle(beta, "area_from_angles");
  detail::check_open_angle(gamma, "area_from_angles");
  const double excess =
      static_cast<double>(k.value()) * (alpha + beta + gamma - kPi);
  if (!(excess > 0.0))
    throw infeasible_error(
        "area_from_angles: angle sum lies on the wrong side of pi for this "
        "curvature");
  return excess;
}

namespace detail {

// Canonical placement: P at the base point, Q on the first coordinate
// geodesic at distance c, R at angle alpha from that direction at distance b.
inline Triangle place_triangle(Kappa k, double a, double b, double c,
                               const TriangleAngles& ang) {
  const SurfacePoint P = base_point(k);
  const Vec3 e1{1.0, 0.0, 0.0};
  const SurfacePoint Q = geodesic(P, e1, c);
  const SurfacePoint R = geodesic(P, rotate_tangent(P, e1, ang.alpha), b);
  return Triangle{k,         {P, Q, R},  a,        b,
                  c,         ang.alpha,  ang.beta, ang.gamma,
                  area_heron(k, a, b, c)};
}

}  // namespace detail

inline Triangle triangle_from_sss(Kappa k, double a, double b, double c) {
  const TriangleAngles ang = angles_from_sss(k, a, b, c);
  return detail::place_triangle(k, a, b, c, ang);
}

inline Triangle triangle_from_sas(Kappa k, double a, double b, double gamma) {
  return triangle_from_sss(k, a, b, side_from_sas(k, a, b, gamma));
}

// Triangle from two angles and the included side c = [P,Q] (angle alpha at
// P, beta at Q).  The flat case closes with the sine law; the curved cases
// bisect on the apex-ray parameter, using that the angle at Q grows strictly
// as the apex recedes along the ray from P.
inline Triangle triangle_from_asa(Kappa k, double alpha, double c,
                                  double beta) {
  detail::check_open_angle(alpha, "triangle_from_asa");
  detail::check_open_angle(beta, "triangle_from_asa");
  if (!(c > 0.0)) throw domain_error("triangle_from_asa: side must be positive");
  if (k.value() == 1 && !(c < kPi))
    throw domain_error("triangle_from_asa: spherical side must stay below pi");
  if (k.value() <= 0 && !(alpha + beta < kPi))
    throw infeasible_error(
        "triangle_from_asa: angle sum must stay below pi when kappa <= 0");

  if (!k.curved()) {
    const double gamma = kPi - alpha - beta;
    const double a = c * std::sin(alpha) / std::sin(gamma);
    const double b = c * std::sin(beta) / std::sin(gamma);
    return triangle_from_sss(k, a, b, c);
  }

  const SurfacePoint P = base_point(k);
  const Vec3 e1{1.0, 0.0, 0.0};
  const SurfacePoint Q = geodesic(P, e1, c);
  const Vec3 ray = rotate_tangent(P, e1, alpha);
  const Vec3 back = segment_direction(Q, P).v;
  auto beta_at = [&](double t) {
    const SurfacePoint R = geodesic(P, ray, t);
    return tangent_angle(Q, back, segment_direction(Q, R).v);
  };

  double hi = k.value() == 1 ? kPi - 1e-9 : 1.0;
  if (k.value() == -1) {
    while (beta_at(hi) < beta) {
      hi *= 2.0;
      if (hi > 64.0)
        throw infeasible_error(
            "triangle_from_asa: the hyperbolic rays diverge before reaching "
            "the requested angle");
    }
  } else if (beta_at(hi) < beta) {
    throw infeasible_error(
        "triangle_from_asa: requested angle is not attained on the sphere");
  }
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (beta_at(mid) < beta)
      lo = mid;
    else
      hi = mid;
  }
  const double b = 0.5 * (lo + hi);
  const SurfacePoint R = geodesic(P, ray, b);
  return triangle_from_sss(k, distance(Q, R), b, c);
}

// ---------------------------------------------------------------------------
// Half-angle relations of a triangle (residual diagnostics).

enum class TriangleIdentity {
  HalfAngleSine,          // sin(g/2) = sqrt(S(s-a)S(s-b) / (S(a)S(b)))
  HalfAngleCosine,        // cos(g/2) = sqrt(S(s)S(s-c) / (S(a)S(b)))
  SineRule,               // sin(angle)/S(side) shared; closed form in s
  AngleSumSine,           // sin((A+B)/2) = cos(g/2) C((a-b)/2) / C(c/2)
  AngleDifferenceSine,    // sin((A-B)/2) = cos(g/2) S((a-b)/2) / S(c/2)
  AngleSumCosine,         // cos((A+B)/2) = sin(g/2) C((a+b)/2) / C(c/2)
  AngleDifferenceCosine,  // cos((A-B)/2) = sin(g/2) S((a+b)/2) / S(c/2)
};

inline constexpr std::array<TriangleIdentity, 7> kAllTriangleIdentities = {
    TriangleIdentity::HalfAngleSine,
    TriangleIdentity::HalfAngleCosine,
    TriangleIdentity::SineRule,
    TriangleIdentity::AngleSumSine,
    TriangleIdentity::AngleDifferenceSine,
    TriangleIdentity::AngleSumCosine,
    TriangleIdentity::AngleDifferenceCosine,
};

inline const char* to_string(TriangleIdentity id) {
  switch (id) {
    case TriangleIdentity::HalfAngleSine:
      return "half-angle-sine";
    case TriangleIdentity::HalfAngleCosine:
      return "half-angle-cosine";
    case TriangleIdentity::SineRule:
      return "sine-rule";
    case TriangleIdentity::AngleSumSine:
      return "angle-sum-sine";
    case TriangleIdentity::AngleDifferenceSine:
      return "angle-difference-sine";
    case TriangleIdentity::AngleSumCosine:
      return "angle-sum-cosine";
    case TriangleIdentity::AngleDifferenceCosine:
      return "angle-difference-cosine";
  }
  throw usage_error("unknown triangle identity tag");
}

inline IdentitySides half_angle_sides(TriangleIdentity id, const Triangle& t) {
  const Kappa k = t.kappa;
  const double s = (t.a + t.b + t.c) / 2;
  const bool needs_curved = id == TriangleIdentity::AngleSumSine ||
                            id == TriangleIdentity::AngleDifferenceSine ||
                            id == TriangleIdentity::AngleSumCosine ||
                            id == TriangleIdentity::AngleDifferenceCosine;
  if (needs_curved && !k.curved())
    throw usage_error(
        "half_angle_sides: the angle-sum relations are stated for curved "
        "surfaces only");
  switch (id) {
    case TriangleIdentity::HalfAngleSine:
      return {std::sin(t.gamma / 2),
              std::sqrt(std::max(0.0, s_kappa(k, s - t.a) *
                                          s_kappa(k, s - t.b) /
                                          (s_kappa(k, t.a) * s_kappa(k, t.b))))};
    case TriangleIdentity::HalfAngleCosine:
      return {std::cos(t.gamma / 2),
              std::sqrt(std::max(0.0, s_kappa(k, s) * s_kappa(k, s - t.c) /
                                          (s_kappa(k, t.a) * s_kappa(k, t.b))))};
    case TriangleIdentity::SineRule: {
      const double rhs =
          2.0 *
          std::sqrt(std::max(0.0, s_kappa(k, s) * s_kappa(k, s - t.a) *
                                      s_kappa(k, s - t.b) *
                                      s_kappa(k, s - t.c))) /
          (s_kappa(k, t.a) * s_kappa(k, t.b) * s_kappa(k, t.c));
      // Report the worst of the three shared ratios against the closed form.
      const double ratios[3] = {std::sin(t.alpha) / s_kappa(k, t.a),
                                std::sin(t.beta) / s_kappa(k, t.b),
                                std::sin(t.gamma) / s_kappa(k, t.c)};
      double worst = ratios[0];
      for (double r : ratios)
        if (std::abs(r - rhs) > std::abs(worst - rhs)) worst = r;
      return {worst, rhs};
    }
    case TriangleIdentity::AngleSumSine:
      return {std::sin((t.alpha + t.beta) / 2),
              std::cos(t.gamma / 2) * c_kappa(k, (t.a - t.b) / 2) /
                  c_kappa(k, t.c / 2)};
    case TriangleIdentity::AngleDifferenceSine:
      return {std::sin((t.alpha - t.beta) / 2),
              std::cos(t.gamma / 2) * s_kappa(k, (t.a - t.b) / 2) /
                  s_kappa(k, t.c / 2)};
    case TriangleIdentity::AngleSumCosine:
      return {std::cos((t.alpha + t.beta) / 2),
              std::sin(t.gamma / 2) * c_kappa(k, (t.a + t.b) / 2) /
                  c_kappa(k, t.c / 2)};
    case TriangleIdentity::AngleDifferenceCosine:
      return {std::cos((t.alpha - t.beta) / 2),
              std::sin(t.gamma / 2) * s_kappa(k, (t.a + t.b) / 2) /
                  s_kappa(k, t.c / 2)};
  }
  throw usage_error("unknown triangle identity tag");
}

inline double half_angle_residual(TriangleIdentity id, const Triangle& t) {
  const IdentitySides sides = half_angle_sides(id, t);
  return sides.lhs - sides.rhs;
}

// ---------------------------------------------------------------------------
// Congruence.

enum class CongruenceCriterion { SSS, SAS, ASA, AAA };

// True iff the named data of the two triangles agree, within eps, under some
// of the six vertex correspondences.
inline bool congruence_decide(const Triangle& t1, const Triangle& t2,
                              CongruenceCriterion criterion,
                              double eps = kCongruenceEps) {
  if (t1.kappa != t2.kappa)
    throw usage_error("congruence_decide: triangles live on different surfaces");
  if (criterion == CongruenceCriterion::AAA && !t1.kappa.curved())
    throw usage_error(
        "congruence_decide: AAA distinguishes only similarity on the plane");
  const double s1[3] = {t1.a, t1.b, t1.c};
  const double g1[3] = {t1.alpha, t1.beta, t1.gamma};
  const double s2[3] = {t2.a, t2.b, t2.c};
  const double g2[3] = {t2.alpha, t2.beta, t2.gamma};
  static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                      {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  auto close = [eps](double u, double v) { return std::abs(u - v) <= eps; };
  for (const auto& p : perms) {
    bool side_ok[3], angle_ok[3];
    for (int i = 0; i < 3; ++i) {
      side_ok[i] = close(s1[i], s2[p[i]]);
      angle_ok[i] = close(g1[i], g2[p[i]]);
    }
    switch (criterion) {
      case CongruenceCriterion::SSS:
        if (side_ok[0] && side_ok[1] && side_ok[2]) return true;
        break;
      case CongruenceCriterion::SAS:
        // An angle plus its two adjacent sides (the sides not opposite it).
        for (int i = 0; i < 3; ++i)
          if (angle_ok[i] && side_ok[(i + 1) % 3] && side_ok[(i + 2) % 3])
            return true;
        break;
      case CongruenceCriterion::ASA:
        // Two angles plus the side joining their vertices (opposite the
        // third angle).
        for (int i = 0; i < 3; ++i)
          if (side_ok[i] && angle_ok[(i + 1) % 3] && angle_ok[(i + 2) % 3])
            return true;
        break;
      case CongruenceCriterion::AAA:
        if (angle_ok[0] && angle_ok[1] && angle_ok[2]) return true;
        break;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Extremal isosceles results.

// Supremum of admissible base angles for an isosceles triangle on base a:
// pi/2 (flat), pi (sphere), arccos(tanh(a/2)) (hyperbolic).
inline double isosceles_max_base_angle(Kappa k, double a) {
  if (!(a > 0.0))
    throw domain_error("isosceles_max_base_angle: base must be positive");
  if (k.value() == 1 && !(a < kPi))
    throw domain_error("isosceles_max_base_angle: spherical base must stay "
                       "below pi");
  switch (k.value()) {
    case 0:
      return kPi / 2;
    case 1:
      return kPi;
    default:
      return std::acos(std::tanh(a / 2));
  }
}

// The isosceles triangle with base a and semiperimeter s: equal slant sides
// s - a/2 and base angles arccos(T(a/2) / T(s - a/2)).
inline Triangle isosceles_from_base_and_slant(Kappa k, double a, double s) {
  if (!(a > 0.0))
    throw infeasible_error("isosceles_from_base_and_slant: base must be positive");
  if (!(a < s))
    throw infeasible_error(
        "isosceles_from_base_and_slant: the slant sides must exceed half the "
        "base (a < s)");
  if (k.value() == 1 && !(s < kPi))
    throw infeasible_error(
        "isosceles_from_base_and_slant: spherical perimeter 2s must stay "
        "below 2*pi");
  const double slant = s - a / 2;
  return triangle_from_sss(k, a, slant, slant);
}

struct MaxAreaTriangle {
  double gamma;
  double area;
};

// Maximizes the area over the included angle for two fixed sides, by
// golden-section search over (0, pi).
inline MaxAreaTriangle max_area_triangle_two_sides(Kappa k, double a,
                                                   double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw domain_error("max_area_triangle_two_sides: sides must be positive");
  if (k.value() == 1 && !(a + b < kPi))
    throw domain_error(
        "max_area_triangle_two_sides: spherical inputs require a + b < pi");
  constexpr double kDelta = 1e-6;
  constexpr double kGammaTol = 1e-10;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = kDelta, hi = kPi - kDelta;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = area_sas(k, a, b, x1);
  double f2 = area_sas(k, a, b, x2);
  while (hi - lo > kGammaTol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = area_sas(k, a, b, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = area_sas(k, a, b, x1);
    }
  }
  const double gamma = 0.5 * (lo + hi);
  return {gamma, area_sas(k, a, b, gamma)};
}

// Checked comparison: among triangles with base a and perimeter 2*s0, the
// isosceles one has maximal area.
inline bool isosceles_dominates_area(Kappa k, double a, double s0, double b,
                                     double c) {
  if (std::abs((b + c) - (2.0 * s0 - a)) > 1e-9)
    throw infeasible_error(
        "isosceles_dominates_area: competitor must share the perimeter "
        "(b + c = 2*s0 - a)");
  const double slant = s0 - a / 2;
  const double iso_area = area_heron(k, a, slant, slant);
  const double other_area = area_heron(k, a, b, c);
  return other_area <= iso_area + 1e-12;
}

}  // namespace spaceform

#endif  // SPACEFORM_TRIANGLE_HPP
