#ifndef SPACEFORM_KAPPA_HPP
#define SPACEFORM_KAPPA_HPP

// Curvature-parameterized trigonometry shared by the three simply connected
// surfaces of constant curvature kappa in {-1, 0, +1}: the hyperbolic plane,
// the Euclidean plane, and the unit sphere.  The generalized sine/cosine pair
// selects the circular branch for kappa = +1 and the hyperbolic branch for
// kappa = -1; the flat branch is the limit every downstream formula consumes.

#include <array>
#include <cmath>
#include <string>

#include "spaceform/errors.hpp"

namespace spaceform {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Default slack for inverse-trig domain clamping: arguments within this
// distance outside the closed domain are clamped to the boundary; farther
// out they raise domain_error.
inline constexpr double kDomainEps = 1e-9;

// Curvature tag.  Only the three model values are representable.
class Kappa {
 public:
  constexpr explicit Kappa(int value) : value_(validate(value)) {}

  static constexpr Kappa hyperbolic() { return Kappa(-1); }
  static constexpr Kappa flat() { return Kappa(0); }
  static constexpr Kappa spherical() { return Kappa(1); }

  constexpr int value() const { return value_; }
  constexpr bool curved() const { return value_ != 0; }

  friend constexpr bool operator==(Kappa a, Kappa b) {
    return a.value_ == b.value_;
  }
  friend constexpr bool operator!=(Kappa a, Kappa b) { return !(a == b); }

 private:
  static constexpr int validate(int v) {
    return (v == -1 || v == 0 || v == 1)
               ? v
               : throw usage_error("curvature must be -1, 0 or +1");
  }

  int value_;
};

// Generalized sine: sinh t | t | sin t.
inline double s_kappa(Kappa k, double t) {
  switch (k.value()) {
    case -1:
      return std::sinh(t);
    case 0:
      return t;
    default:
      return std::sin(t);
  }
}

// Generalized cosine: cosh t | 1 | cos t.  The flat branch returns the
// constant limit 1, which is the value consumed by every formula that blends
// the two curved branches (cosine law, geodesic evaluation, vertex angles).
inline double c_kappa(Kappa k, double t) {
  switch (k.value()) {
    case -1:
      return std::cosh(t);
    case 0:
      return 1.0;
    default:
      return std::cos(t);
  }
}

// Generalized tangent S/C: tanh t | t | tan t.
inline double t_kappa(Kappa k, double t) {
  switch (k.value()) {
    case -1:
      return std::tanh(t);
    case 0:
      return t;
    default:
      return std::tan(t);
  }
}

// Generalized cotangent C/S: coth t | t | cot t.  Poles of the curved
// branches (S = 0) raise domain_error.
inline double ct_kappa(Kappa k, double t) {
  switch (k.value()) {
    case -1: {
      const double s = std::sinh(t);
      if (s == 0.0) throw domain_error("ct_kappa: pole at t = 0");
      return std::cosh(t) / s;
    }
    case 0:
      return t;
    default: {
      const double s = std::sin(t);
      if (s == 0.0) throw domain_error("ct_kappa: pole of the cotangent");
      return std::cos(t) / s;
    }
  }
}

namespace detail {

inline double clamp_abs_one(double t, double eps, const char* fn) {
  if (t > 1.0) {
    if (t > 1.0 + eps)
      throw domain_error(std::string(fn) + ": argument " + std::to_string(t) +
                         " above +1 by more than the domain slack");
    return 1.0;
  }
  if (t < -1.0) {
    if (t < -1.0 - eps)
      throw domain_error(std::string(fn) + ": argument " + std::to_string(t) +
                         " below -1 by more than the domain slack");
    return -1.0;
  }
  return t;
}

inline double clamp_at_least_one(double t, double eps, const char* fn) {
  if (t < 1.0) {
    if (t < 1.0 - eps)
      throw domain_error(std::string(fn) + ": argument " + std::to_string(t) +
                         " below +1 by more than the domain slack");
    return 1.0;
  }
  return t;
}

}  // namespace detail

// Inverse of s_kappa: asinh | identity | asin (with clamping of arguments
// within eps outside [-1, 1]).
inline double as_kappa(Kappa k, double t, double eps = kDomainEps) {
  switch (k.value()) {
    case -1:
      return std::asinh(t);
    case 0:
      return t;
    default:
      return std::asin(detail::clamp_abs_one(t, eps, "as_kappa"));
  }
}

// Inverse of c_kappa: acosh on [1, inf) | identity | acos on [-1, 1],
// with clamping of arguments within eps outside the closed domain.
inline double ac_kappa(Kappa k, double t, double eps = kDomainEps) {
  switch (k.value()) {
    case -1:
      return std::acosh(detail::clamp_at_least_one(t, eps, "ac_kappa"));
    case 0:
      return t;
    default:
      return std::acos(detail::clamp_abs_one(t, eps, "ac_kappa"));
  }
}

// The sixteen addition / half-argument relations satisfied by the
// generalized sine/cosine pair on the curved surfaces (kappa != 0).
enum class TrigIdentity {
  Parity,                     // C(-a) = C(a) and S(-a) = -S(a), folded
  SineSum,                    // S(a+b) = S(a)C(b) + C(a)S(b)
  SineDifference,             // S(a-b) = S(a)C(b) - C(a)S(b)
  SineDouble,                 // S(2a)  = 2 S(a) C(a)
  Pythagorean,                // C(a)^2 = 1 - k S(a)^2
  CosineSum,                  // C(a+b) = C(a)C(b) - k S(a)S(b)
  CosineDifference,           // C(a-b) = C(a)C(b) + k S(a)S(b)
  CosineDouble,               // C(2a)  = C(a)^2 - k S(a)^2
  OneMinusCosine,             // 1 - C(a) = 2 k S(a/2)^2
  OnePlusCosine,              // 1 + C(a) = 2 C(a/2)^2
  CosinePairSum,              // C(a+b) + C(a-b) = 2 C(a)C(b)
  CosinePairDifference,       // C(a+b) - C(a-b) = -2 k S(a)S(b)
  SineSumToProduct,           // 2 S((a+b)/2) C((a-b)/2) = S(a) + S(b)
  SineDifferenceToProduct,    // 2 C((a+b)/2) S((a-b)/2) = S(a) - S(b)
  CosineSumToProduct,         // 2 C((a+b)/2) C((a-b)/2) = C(a) + C(b)
  CosineDifferenceToProduct,  // -2 k S((a+b)/2) S((a-b)/2) = C(a) - C(b)
};

inline constexpr std::array<TrigIdentity, 16> kAllTrigIdentities = {
    TrigIdentity::Parity,
    TrigIdentity::SineSum,
    TrigIdentity::SineDifference,
    TrigIdentity::SineDouble,
    TrigIdentity::Pythagorean,
    TrigIdentity::CosineSum,
    TrigIdentity::CosineDifference,
    TrigIdentity::CosineDouble,
    TrigIdentity::OneMinusCosine,
    TrigIdentity::OnePlusCosine,
    TrigIdentity::CosinePairSum,
    TrigIdentity::CosinePairDifference,
    TrigIdentity::SineSumToProduct,
    TrigIdentity::SineDifferenceToProduct,
    TrigIdentity::CosineSumToProduct,
    TrigIdentity::CosineDifferenceToProduct,
};

inline const char* to_string(TrigIdentity id) {
  switch (id) {
    case TrigIdentity::Parity:
      return "parity";
    case TrigIdentity::SineSum:
      return "sine-sum";
    case TrigIdentity::SineDifference:
      return "sine-difference";
    case TrigIdentity::SineDouble:
      return "sine-double";
    case TrigIdentity::Pythagorean:
      return "pythagorean";
    case TrigIdentity::CosineSum:
      return "cosine-sum";
    case TrigIdentity::CosineDifference:
      return "cosine-difference";
    case TrigIdentity::CosineDouble:
      return "cosine-double";
    case TrigIdentity::OneMinusCosine:
      return "one-minus-cosine";
    case TrigIdentity::OnePlusCosine:
      return "one-plus-cosine";
    case TrigIdentity::CosinePairSum:
      return "cosine-pair-sum";
    case TrigIdentity::CosinePairDifference:
      return "cosine-pair-difference";
    case TrigIdentity::SineSumToProduct:
      return "sine-sum-to-product";
    case TrigIdentity::SineDifferenceToProduct:
      return "sine-difference-to-product";
    case TrigIdentity::CosineSumToProduct:
      return "cosine-sum-to-product";
    case TrigIdentity::CosineDifferenceToProduct:
      return "cosine-difference-to-product";
  }
  throw usage_error("unknown trig identity tag");
}

// Left- and right-hand side of one named identity, evaluated at (a, b).
// Single-argument identities ignore b.
struct IdentitySides {
  double lhs;
  double rhs;
};

inline IdentitySides identity_sides(TrigIdentity id, Kappa k, double a,
                                    double b) {
  if (!k.curved())
    throw usage_error(
        "identity_sides: the addition relations are stated for curved "
        "surfaces only (kappa != 0)");
  const double kv = static_cast<double>(k.value());
  switch (id) {
    case TrigIdentity::Parity:
      // Evenness of C and oddness of S combined into one equation; each
      // defect contributes independently to the residual.
      return {c_kappa(k, -a) + s_kappa(k, -a), c_kappa(k, a) - s_kappa(k, a)};
    case TrigIdentity::SineSum:
      return {s_kappa(k, a + b),
              s_kappa(k, a) * c_kappa(k, b) + c_kappa(k, a) * s_kappa(k, b)};
    case TrigIdentity::SineDifference:
      return {s_kappa(k, a - b),
              s_kappa(k, a) * c_kappa(k, b) - c_kappa(k, a) * s_kappa(k, b)};
    case TrigIdentity::SineDouble:
      return {s_kappa(k, 2 * a), 2 * s_kappa(k, a) * c_kappa(k, a)};
    case TrigIdentity::Pythagorean: {
      const double s = s_kappa(k, a);
      const double c = c_kappa(k, a);
      return {c * c, 1.0 - kv * s * s};
    }
    case TrigIdentity::CosineSum:
      return {c_kappa(k, a + b), c_kappa(k, a) * c_kappa(k, b) -
                                     kv * s_kappa(k, a) * s_kappa(k, b)};
    case TrigIdentity::CosineDifference:
      return {c_kappa(k, a - b), c_kappa(k, a) * c_kappa(k, b) +
                                     kv * s_kappa(k, a) * s_kappa(k, b)};
    case TrigIdentity::CosineDouble: {
      const double s = s_kappa(k, a);
      const double c = c_kappa(k, a);
      return {c_kappa(k, 2 * a), c * c - kv * s * s};
    }
    case TrigIdentity::OneMinusCosine: {
      const double sh = s_kappa(k, a / 2);
      return {1.0 - c_kappa(k, a), 2.0 * kv * sh * sh};
    }
    case TrigIdentity::OnePlusCosine: {
      const double ch = c_kappa(k, a / 2);
      return {1.0 + c_kappa(k, a), 2.0 * ch * ch};
    }
    case TrigIdentity::CosinePairSum:
      return {c_kappa(k, a + b) + c_kappa(k, a - b),
              2.0 * c_kappa(k, a) * c_kappa(k, b)};
    case TrigIdentity::CosinePairDifference:
      return {c_kappa(k, a + b) - c_kappa(k, a - b),
              -2.0 * kv * s_kappa(k, a) * s_kappa(k, b)};
    case TrigIdentity::SineSumToProduct:
      return {2.0 * s_kappa(k, (a + b) / 2) * c_kappa(k, (a - b) / 2),
              s_kappa(k, a) + s_kappa(k, b)};
    case TrigIdentity::SineDifferenceToProduct:
      return {2.0 * c_kappa(k, (a + b) / 2) * s_kappa(k, (a - b) / 2),
              s_kappa(k, a) - s_kappa(k, b)};
    case TrigIdentity::CosineSumToProduct:
      return {2.0 * c_kappa(k, (a + b) / 2) * c_kappa(k, (a - b) / 2),
              c_kappa(k, a) + c_kappa(k, b)};
    case TrigIdentity::CosineDifferenceToProduct:
      return {-2.0 * kv * s_kappa(k, (a + b) / 2) * s_kappa(k, (a - b) / 2),
              c_kappa(k, a) - c_kappa(k, b)};
  }
  throw usage_error("unknown trig identity tag");
}

// LHS - RHS of the named identity at (a, b).
inline double identity_residual(TrigIdentity id, Kappa k, double a, double b) {
  const IdentitySides sides = identity_sides(id, k, a, b);
  return sides.lhs - sides.rhs;
}

}  // namespace spaceform

#endif  // SPACEFORM_KAPPA_HPP
