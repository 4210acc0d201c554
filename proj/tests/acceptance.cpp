// Acceptance gate: twelve end-to-end checks over the whole library, each
// printing exactly one pass/fail line with its measured margin and runtime.
// Run with no arguments for the full gate, or with a single number 1..12.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "spaceform/spaceform.hpp"

using namespace spaceform;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

const Kappa kAll[] = {Kappa::hyperbolic(), Kappa::flat(), Kappa::spherical()};
const Kappa kCurved[] = {Kappa::hyperbolic(), Kappa::spherical()};

double rel_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

// --- 1: the sixteen kernel identities at kappa = -1 and +1 ------------------

Outcome criterion_1() {
  double worst = 0.0;
  for (const Kappa k : kCurved) {
    for (TrigIdentity id : kAllTrigIdentities) {
      Rng rng(100 + k.value());
      for (int i = 0; i < 1000; ++i) {
        const double a = rng.uniform(-5.0, 5.0);
        const double b = rng.uniform(-5.0, 5.0);
        const IdentitySides s = identity_sides(id, k, a, b);
        worst = std::max(worst, rel_residual(s.lhs, s.rhs));
      }
    }
  }
  return {worst <= 1e-12,
          fmt("max relative identity residual %.3g vs 1e-12", worst)};
}

// --- 2: the seven triangle relations over random valid triangles ------------

Outcome criterion_2() {
  double worst = 0.0;
  for (const Kappa k : kAll) {
    Rng rng(200 + k.value());
    for (int i = 0; i < 1000; ++i) {
      const Triangle t = random_triangle(k, rng);
      for (TriangleIdentity id : kAllTriangleIdentities) {
        const bool curved_only = id != TriangleIdentity::HalfAngleSine &&
                                 id != TriangleIdentity::HalfAngleCosine &&
                                 id != TriangleIdentity::SineRule;
        if (curved_only && !k.curved()) continue;
        const IdentitySides s = half_angle_sides(id, t);
        worst = std::max(worst, rel_residual(s.lhs, s.rhs));
      }
    }
  }
  return {worst <= 1e-10,
          fmt("max relative triangle-relation residual %.3g vs 1e-10", worst)};
}

// --- 3: the three area routes agree; the octant lands on pi/2 ---------------

Outcome criterion_3() {
  double worst_pair = 0.0;
  double worst_excess = 0.0;
  for (const Kappa k : kAll) {
    Rng rng(300 + k.value());
    for (int i = 0; i < 1000; ++i) {
      const Triangle t = random_triangle(k, rng);
      const double heron = area_heron(k, t.a, t.b, t.c);
      const double sas = area_sas(k, t.a, t.b, t.gamma);
      worst_pair = std::max(worst_pair, std::abs(heron - sas));
      if (k.curved()) {
        const double excess = area_from_angles(k, t.alpha, t.beta, t.gamma);
        worst_excess = std::max(worst_excess, std::abs(heron - excess));
      }
    }
  }
  const double octant =
      area_heron(Kappa::spherical(), kPi / 2, kPi / 2, kPi / 2);
  const double octant_err = std::abs(octant - kPi / 2);
  const bool pass =
      worst_pair <= 1e-10 && worst_excess <= 1e-9 && octant_err <= 1e-12;
  return {pass, fmt("area route gaps %.3g (pairwise vs 1e-10), %.3g "
                    "(vs angle excess, 1e-9); octant exact",
                    worst_pair, worst_excess)};
}

// --- 4: regular n-gon data all invert back to the circumradius --------------

Outcome criterion_4() {
  double worst = 0.0;
  for (const Kappa k : kAll) {
    Rng rng(400 + k.value());
    for (int i = 0; i < 200; ++i) {
      const int n = 3 + static_cast<int>(rng.uniform_int(0, 9));
      const double r =
          k.value() == 1 ? rng.uniform(0.05, kPi / 2 - 0.01) : rng.uniform(0.05, 2.0);
      worst = std::max(
          worst, std::abs(radius_from_side(k, n, regular_side(k, n, r)) - r));
      worst = std::max(
          worst, std::abs(radius_from_area(k, n, regular_area(k, n, r)) - r));
      if (k.curved())
        worst = std::max(worst, std::abs(radius_from_angle(
                                    k, n, regular_angle(k, n, r)) -
                                r));
    }
  }
  const Kappa f = Kappa::flat();
  const double pinned = std::max(
      {std::abs(regular_side(f, 4, 1.0) - std::sqrt(2.0)),
       std::abs(regular_angle(f, 4, 1.0) - kPi / 2),
       std::abs(regular_area(f, 4, 1.0) - 2.0)});
  const bool pass = worst <= 1e-10 && pinned <= 1e-14;
  return {pass, fmt("max inversion error %.3g vs 1e-10; flat square pinned "
                    "within %.3g vs 1e-14",
                    worst, pinned)};
}

// --- 5: the circle limit descends monotonically to the optimal circle -------

Outcome criterion_5() {
  double worst_r = 0.0;
  double worst_l = 0.0;
  for (const Kappa k : kAll) {
    // Areas must stay attainable for every n >= 3: below (n-2)*pi = pi on
    // the hyperbolic side, below 2*pi on the sphere, unbounded on the plane.
    const double grid[3] = {0.5, k.value() == 0 ? kPi : 1.5,
                            k.value() == 0 ? 8.0 : (k.value() == 1 ? 5.0 : 2.8)};
    for (double A : grid) {
      double prev_r = std::numeric_limits<double>::infinity();
      double prev_l = std::numeric_limits<double>::infinity();
      for (int n = 3; n <= 2048; ++n) {
        const CircleLimitPoint pt = circle_limit(k, A, n);
        if (!(pt.radius < prev_r) || !(pt.perimeter < prev_l))
          return {false,
                  fmt("monotone descent broken at kappa=%g, n=%g", k.value(), n)};
        prev_r = pt.radius;
        prev_l = pt.perimeter;
      }
      const CircleLimitPoint fine = circle_limit(k, A, 10000);
      worst_r = std::max(worst_r,
                         std::abs(fine.radius - optimal_circle_radius(k, A)));
      worst_l = std::max(
          worst_l, std::abs(fine.perimeter - optimal_circle_perimeter(k, A)));
    }
  }
  const bool pass = worst_r <= 1e-4 && worst_l <= 1e-4;
  return {pass, fmt("limit gaps at n=10000: radius %.3g, perimeter %.3g "
                    "(both vs 1e-4); descent monotone to n=2048",
                    worst_r, worst_l)};
}

// --- 6 and 8 share one corpus of random convex polygons ---------------------

std::vector<GeodesicPolygon> dominance_corpus(Kappa k, int n) {
  Rng rng(6000 + 10 * (k.value() + 1) + n);
  std::vector<GeodesicPolygon> out;
  out.reserve(200);
  for (int i = 0; i < 200; ++i)
    out.push_back(random_convex_polygon(k, n, 1.0, rng));
  return out;
}

Outcome criterion_6() {
  double worst_shortfall = 0.0;  // how far below the floor anything dips
  for (const Kappa k : kAll) {
    for (int n = 3; n <= 8; ++n) {
      const double floor = polygon_min_perimeter(k, n, 1.0);
      for (const GeodesicPolygon& p : dominance_corpus(k, n)) {
        worst_shortfall =
            std::max(worst_shortfall, floor - perimeter(p));
      }
    }
  }
  return {worst_shortfall <= 1e-9,
          fmt("3600 random convex polygons; worst perimeter shortfall below "
              "the regular floor %.3g vs 1e-9",
              worst_shortfall)};
}

// --- 7: the seeded minimizer recovers the regular polygon -------------------

Outcome criterion_7() {
  double worst_rel = 0.0;
  double worst_reg = 0.0;
  for (const Kappa k : kAll) {
    for (int n = 3; n <= 6; ++n) {
      const double A = 1.0;
      const MinimizerResult res =
          minimize_polygon_best(k, n, A, 1000 * (k.value() + 2) + n, 8);
      const double floor = polygon_min_perimeter(k, n, A);
      worst_rel = std::max(worst_rel,
                           std::abs(res.perimeter - floor) / floor);
      worst_reg = std::max(worst_reg, res.regularity_residual);
    }
  }
  const bool pass = worst_rel <= 1e-6 && worst_reg <= 1e-5;
  return {pass, fmt("12 minimizations (8 restarts each): worst relative "
                    "perimeter error %.3g vs 1e-6, worst regularity residual "
                    "%.3g vs 1e-5",
                    worst_rel, worst_reg)};
}

Outcome criterion_8() {
  double most_negative = 0.0;
  for (const Kappa k : kAll)
    for (int n = 3; n <= 8; ++n)
      for (const GeodesicPolygon& p : dominance_corpus(k, n))
        most_negative = std::min(most_negative, polygon_report(p).deficit);

  // Regular n-gon deficits at fixed area descend monotonically toward zero.
  double worst_tail = 0.0;
  for (const Kappa k : kAll) {
    const double A = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    std::vector<int> grid;
    for (int n = 3; n <= 100; ++n) grid.push_back(n);
    for (int n = 128; n <= 8192; n *= 2) grid.push_back(n);
    grid.push_back(10000);
    double deficit = 0.0, length = 0.0;
    for (int n : grid) {
      const CircleLimitPoint pt = circle_limit(k, A, n);
      deficit = deficit_value(k, pt.perimeter, A);
      length = pt.perimeter;
      if (!(deficit < prev))
        return {false, fmt("regular deficit not decreasing at kappa=%g n=%g",
                           k.value(), n)};
      prev = deficit;
    }
    worst_tail = std::max(worst_tail, deficit / (length * length));
  }
  const bool pass = most_negative >= -1e-9 && worst_tail < 1e-5;
  return {pass, fmt("corpus deficit floor %.3g vs -1e-9; scaled regular "
                    "deficit at n=10000 %.3g vs 1e-5",
                    most_negative, worst_tail)};
}

// --- 9: isometries are reconstructed from three matched points --------------

Outcome criterion_9() {
  double worst = 0.0;
  std::size_t max_reflections = 0;
  for (const Kappa k : kAll) {
    Rng rng(900 + k.value());
    for (int i = 0; i < 100; ++i) {
      const int m = 1 + static_cast<int>(rng.uniform_int(0, 2));
      const Isometry truth = random_isometry(k, m, rng);
      std::vector<std::pair<SurfacePoint, SurfacePoint>> pairs;
      for (int j = 0; j < 3; ++j) {
        const SurfacePoint a = random_point(k, rng);
        pairs.emplace_back(a, apply(truth, a));
      }
      const Isometry rec = isometry_from_correspondence(pairs);
      max_reflections = std::max(max_reflections, rec.reflections.size());
      for (const auto& [a, b] : pairs)
        worst = std::max(worst, distance(apply(rec, a), b));
    }
  }
  const bool pass = worst <= 1e-10 && max_reflections <= 3;
  return {pass, fmt("300 reconstructions: max image error %.3g vs 1e-10, "
                    "max reflections used %.0f vs 3",
                    worst, static_cast<double>(max_reflections))};
}

// --- 10: opening one angle of a convex arm never shortens the closure -------

Outcome criterion_10() {
  double min_gain = std::numeric_limits<double>::infinity();
  for (const Kappa k : kAll) {
    Rng rng(1000 + k.value());
    for (int i = 0; i < 500; ++i) {
      const ChainData chain = random_convex_chain(k, rng);
      const double before = arm_closing_length(k, chain.sides, chain.angles);
      std::vector<double> opened = chain.angles;
      const std::size_t at = rng.uniform_int(0, opened.size() - 1);
      const double room = kPi - 0.02 - opened[at];
      const double delta = rng.uniform(1e-3, std::min(0.05, room));
      opened[at] += delta;
      const double after = arm_closing_length(k, chain.sides, opened);
      min_gain = std::min(min_gain, after - before);
    }
  }
  return {min_gain >= 1e-12,
          fmt("1500 openings by at least 1e-3: minimum closing-length gain "
              "%.3g vs 1e-12",
              min_gain)};
}

// --- 11: convex spherical polygons in a hemisphere stay short ---------------

Outcome criterion_11() {
  double longest = 0.0;
  Rng rng(1100);
  for (int i = 0; i < 1000; ++i) {
    const GeodesicPolygon p = random_inscribed_spherical_polygon(rng);
    longest = std::max(longest, perimeter(p));
  }
  return {longest < 2 * kPi - 1e-12,
          fmt("1000 inscribed convex spherical polygons: longest perimeter "
              "%.15g vs 2*pi - 1e-12",
              longest)};
}

// --- 12: pinned point values ------------------------------------------------

Outcome criterion_12() {
  const double disk = std::abs(
      circle_area(Kappa::hyperbolic(), 2.0 * std::asinh(0.5)) - kPi);
  const double digon = std::abs(
      digon_area(make_digon(base_point(Kappa::spherical()), kPi)) - 2 * kPi);
  const IsoperimetricReport hemi = optimal_circle(Kappa::spherical(), 2 * kPi);
  const double r_err = std::abs(hemi.optimal_radius - kPi / 2);
  const double l_err = std::abs(hemi.optimal_perimeter - 2 * kPi);
  const double worst = std::max({disk, digon, r_err, l_err});
  return {worst <= 1e-12,
          fmt("hyperbolic unit-area disk, straight digon, hemisphere circle: "
              "max error %.3g vs 1e-12",
              worst)};
}

struct Criterion {
  int number;
  double budget_seconds;  // 0 = untimed
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, 1.0, criterion_1},  {2, 2.0, criterion_2},  {3, 2.0, criterion_3},
    {4, 1.0, criterion_4},  {5, 5.0, criterion_5},  {6, 30.0, criterion_6},
    {7, 60.0, criterion_7}, {8, 10.0, criterion_8}, {9, 1.0, criterion_9},
    {10, 5.0, criterion_10}, {11, 2.0, criterion_11}, {12, 0.0, criterion_12},
};

bool run_one(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = c.run();
  } catch (const std::exception& e) {
    out = {false, std::string("threw: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool in_budget = c.budget_seconds <= 0.0 || secs < c.budget_seconds;
  const bool pass = out.pass && in_budget;
  if (c.budget_seconds > 0.0)
    std::printf("criterion %d: %s — %s (%.2f s of %.0f s)\n", c.number,
                pass ? "pass" : "FAIL", out.detail.c_str(), secs,
                c.budget_seconds);
  else
    std::printf("criterion %d: %s — %s (%.2f s)\n", c.number,
                pass ? "pass" : "FAIL", out.detail.c_str(), secs);
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1..12]\n", argv[0]);
    return 2;
  }
  int only = 0;
  if (argc == 2) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 12) {
      std::fprintf(stderr, "usage: %s [criterion 1..12]\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    all_pass = run_one(c) && all_pass;
  }
  return all_pass ? 0 : 1;
}
