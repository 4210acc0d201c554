// Command-line front end: triangle/regular-polygon solvers, isoperimetric
// reports, convergence tables, polygon utilities, and randomized
// verification suites.  Every run is a pure function of argv plus the seed
// (flag --seed, else env SPACEFORM_SEED, else a fixed constant), and numbers
// are printed with 17 significant digits, so identical invocations produce
// byte-identical output.
//
// Exit codes: 0 success / all checks passed; 1 a verification suite failed;
// 2 usage error; 3 domain/infeasible/degenerate input.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spaceform/spaceform.hpp"

namespace {

using namespace spaceform;

constexpr std::uint64_t kDefaultSeed = 20210714;

std::uint64_t base_seed() {
  if (const char* env = std::getenv("SPACEFORM_SEED"))
    return std::strtoull(env, nullptr, 10);
  return kDefaultSeed;
}

// --- JSON emission (hand-rolled: fixed 17-significant-digit round-trip
// formatting, stable key order) --------------------------------------------

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_point(const SurfacePoint& p) {
  return "[" + num(p.x()) + ", " + num(p.y()) + ", " + num(p.z()) + "]";
}

std::string json_points(const std::vector<SurfacePoint>& pts) {
  std::string out = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    out += json_point(pts[i]);
  }
  return out + "]";
}

void emit_triangle(const Triangle& t) {
  std::printf(
      "{\"kappa\": %d, \"a\": %s, \"b\": %s, \"c\": %s, \"alpha\": %s, "
      "\"beta\": %s, \"gamma\": %s, \"area\": %s, \"vertices\": %s}\n",
      t.kappa.value(), num(t.a).c_str(), num(t.b).c_str(), num(t.c).c_str(),
      num(t.alpha).c_str(), num(t.beta).c_str(), num(t.gamma).c_str(),
      num(t.area).c_str(),
      json_points({t.vertices[0], t.vertices[1], t.vertices[2]}).c_str());
}

void emit_regular(const RegularNGon& g) {
  std::printf(
      "{\"kappa\": %d, \"n\": %d, \"r\": %s, \"side\": %s, \"angle\": %s, "
      "\"area\": %s, \"vertices\": %s}\n",
      g.kappa.value(), g.n, num(g.r).c_str(), num(g.side).c_str(),
      num(g.angle).c_str(), num(g.area).c_str(),
      json_points(g.vertices).c_str());
}

void emit_report(const IsoperimetricReport& r) {
  std::printf(
      "{\"kappa\": %d, \"area\": %s, \"perimeter\": %s, \"deficit\": %s, "
      "\"optimal_radius\": %s, \"optimal_perimeter\": %s}\n",
      r.kappa.value(), num(r.area).c_str(), num(r.perimeter).c_str(),
      num(r.deficit).c_str(), num(r.optimal_radius).c_str(),
      num(r.optimal_perimeter).c_str());
}

void emit_minimizer(const MinimizerResult& m) {
  std::printf(
      "{\"polygon\": {\"kappa\": %d, \"vertices\": %s}, \"perimeter\": %s, "
      "\"target_area\": %s, \"iterations\": %d, \"converged\": %s, "
      "\"regularity_residual\": %s}\n",
      m.polygon.kappa.value(), json_points(m.polygon.vertices).c_str(),
      num(m.perimeter).c_str(), num(m.target_area).c_str(), m.iterations,
      m.converged ? "true" : "false", num(m.regularity_residual).c_str());
}

// --- JSON input -------------------------------------------------------------

std::vector<SurfacePoint> parse_vertices(Kappa k, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("--vertices: invalid JSON: ") + e.what());
  }
  if (!j.is_array())
    throw usage_error("--vertices: expected a JSON array of [x, y, z] triples");
  std::vector<SurfacePoint> pts;
  pts.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number() ||
        !item[1].is_number() || !item[2].is_number())
      throw usage_error("--vertices: each vertex must be a numeric [x, y, z]");
    pts.push_back(make_surface_point(k, item[0].get<double>(),
                                     item[1].get<double>(),
                                     item[2].get<double>()));
  }
  return pts;
}

std::vector<double> parse_reals(const char* flag, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string(flag) + ": invalid JSON: " + e.what());
  }
  if (!j.is_array())
    throw usage_error(std::string(flag) + ": expected a JSON array of numbers");
  std::vector<double> values;
  values.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_number())
      throw usage_error(std::string(flag) + ": expected numbers only");
    values.push_back(item.get<double>());
  }
  return values;
}

// --- verification suites ----------------------------------------------------

struct SuiteOutcome {
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

double rel_residual(double lhs, double rhs) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) / scale;
}

SuiteOutcome run_identities(int samples, std::uint64_t seed) {
  SuiteOutcome out;
  out.tolerance = 1e-12;
  for (const Kappa k : {Kappa::hyperbolic(), Kappa::spherical()}) {
    Rng rng(seed + static_cast<std::uint64_t>(k.value() + 1));
    for (TrigIdentity id : kAllTrigIdentities) {
      for (int i = 0; i < samples; ++i) {
        const double a = rng.uniform(-5.0, 5.0);
        const double b = rng.uniform(-5.0, 5.0);
        const IdentitySides sides = identity_sides(id, k, a, b);
        out.max_residual =
            std::max(out.max_residual, rel_residual(sides.lhs, sides.rhs));
      }
    }
  }
  out.pass = out.max_residual <= out.tolerance;
  return out;
}

SuiteOutcome run_halfangle(int samples, std::uint64_t seed) {
  SuiteOutcome out;
  out.tolerance = 1e-10;
  for (const Kappa k :
       {Kappa::hyperbolic(), Kappa::flat(), Kappa::spherical()}) {
    Rng rng(seed + static_cast<std::uint64_t>(k.value() + 1));
    for (int i = 0; i < samples; ++i) {
      const Triangle t = random_triangle(k, rng);
      for (TriangleIdentity id : kAllTriangleIdentities) {
        const bool curved_only = id == TriangleIdentity::AngleSumSine ||
                                 id == TriangleIdentity::AngleDifferenceSine ||
                                 id == TriangleIdentity::AngleSumCosine ||
                                 id == TriangleIdentity::AngleDifferenceCosine;
        if (curved_only && !k.curved()) continue;
        const IdentitySides sides = half_angle_sides(id, t);
        out.max_residual =
            std::max(out.max_residual, rel_residual(sides.lhs, sides.rhs));
      }
    }
  }
  out.pass = out.max_residual <= out.tolerance;
  return out;
}

SuiteOutcome run_armlemma(int samples, std::uint64_t seed) {
  SuiteOutcome out;
  out.tolerance = 1e-12;  // closing length may shrink at most this much
  double worst_decrease = 0.0;
  for (const Kappa k :
       {Kappa::hyperbolic(), Kappa::flat(), Kappa::spherical()}) {
    Rng rng(seed + static_cast<std::uint64_t>(k.value() + 1));
    int done = 0;
    while (done < samples) {
      const ChainData chain = random_convex_chain(k, rng);
      const std::size_t which =
          static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(chain.angles.size()) - 1));
      const double delta = rng.uniform(1e-3, 0.04);
      ChainData opened = chain;
      opened.angles[which] += delta;
      if (!(opened.angles[which] < kPi - 1e-3)) continue;
      double before, after;
      try {
        before = arm_closing_length(k, chain.sides, chain.angles);
        after = arm_closing_length(k, opened.sides, opened.angles);
        const std::vector<SurfacePoint> pts =
            arm_chain_points(k, opened.sides, opened.angles);
        if (!is_convex(make_polygon(k, pts), 1e-9)) continue;
      } catch (const error&) {
        continue;
      }
      worst_decrease = std::max(worst_decrease, before - after);
      ++done;
    }
  }
  out.max_residual = worst_decrease;
  out.pass = worst_decrease <= out.tolerance;
  return out;
}

SuiteOutcome run_dominance(int samples, std::uint64_t seed) {
  SuiteOutcome out;
  out.tolerance = 1e-9;  // allowed shortfall against the closed form
  double worst_shortfall = 0.0;
  for (const Kappa k :
       {Kappa::hyperbolic(), Kappa::flat(), Kappa::spherical()}) {
    Rng rng(seed + static_cast<std::uint64_t>(k.value() + 1));
    const double A = 1.0;
    for (int i = 0; i < samples; ++i) {
      const int n = rng.uniform_int(3, 8);
      const GeodesicPolygon poly = random_convex_polygon(k, n, A, rng);
      const double bound = polygon_min_perimeter(k, n, A);
      worst_shortfall = std::max(worst_shortfall, bound - perimeter(poly));
    }
  }
  out.max_residual = worst_shortfall;
  out.pass = worst_shortfall <= out.tolerance;
  return out;
}

int emit_suite(const char* name, int samples, std::uint64_t seed,
               const SuiteOutcome& out) {
  std::printf(
      "{\"suite\": \"%s\", \"samples\": %d, \"seed\": %" PRIu64
      ", \"max_residual\": %s, \"tolerance\": %s, \"pass\": %s}\n",
      name, samples, seed, num(out.max_residual).c_str(),
      num(out.tolerance).c_str(), out.pass ? "true" : "false");
  return out.pass ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Geometry of the three constant-curvature surfaces: triangle and "
      "regular-polygon solvers, isoperimetric reports, and verification "
      "suites."};
  app.require_subcommand(1);

  int kappa_val = 0;
  std::uint64_t seed = base_seed();

  // triangle solve
  auto* triangle_cmd = app.add_subcommand("triangle", "Triangle solvers");
  triangle_cmd->require_subcommand(1);
  auto* solve = triangle_cmd->add_subcommand(
      "solve", "Solve a triangle from SSS, SAS, or ASA data");
  std::vector<double> sss, sas, asa;
  solve->add_option("--kappa", kappa_val, "curvature (-1, 0, or 1)")
      ->required();
  auto* sss_opt =
      solve->add_option("--sss", sss, "three side lengths a b c")
          ->expected(3);
  auto* sas_opt =
      solve
          ->add_option("--sas", sas,
                       "sides a b and included angle gamma (opposite c)")
          ->expected(3);
  auto* asa_opt =
      solve
          ->add_option("--asa", asa,
                       "angle alpha, included side c, angle beta")
          ->expected(3);
  sss_opt->excludes(sas_opt)->excludes(asa_opt);
  sas_opt->excludes(asa_opt);

  // regular
  auto* regular_cmd = app.add_subcommand(
      "regular", "Regular n-gon from radius, side, angle, or area");
  int reg_n = 0;
  double reg_r = 0, reg_side = 0, reg_angle = 0, reg_area = 0;
  regular_cmd->add_option("--kappa", kappa_val, "curvature (-1, 0, or 1)")
      ->required();
  regular_cmd->add_option("--n", reg_n, "number of sides (>= 3)")->required();
  auto* r_opt = regular_cmd->add_option("--r", reg_r, "circumradius");
  auto* side_opt = regular_cmd->add_option("--side", reg_side, "side length");
  auto* angle_opt =
      regular_cmd->add_option("--angle", reg_angle, "interior vertex angle");
  auto* area_opt = regular_cmd->add_option("--area", reg_area, "area");
  r_opt->excludes(side_opt)->excludes(angle_opt)->excludes(area_opt);
  side_opt->excludes(angle_opt)->excludes(area_opt);
  angle_opt->excludes(area_opt);

  // iso circle | minimize | limit
  auto* iso_cmd = app.add_subcommand("iso", "Isoperimetric reports");
  iso_cmd->require_subcommand(1);
  double iso_area = 0;
  auto* circle = iso_cmd->add_subcommand(
      "circle", "Optimal circle enclosing a given area");
  circle->add_option("--kappa", kappa_val, "curvature (-1, 0, or 1)")
      ->required();
  circle->add_option("--area", iso_area, "enclosed area")->required();

  auto* minimize = iso_cmd->add_subcommand(
      "minimize", "Search for the minimal-perimeter n-gon of a given area");
  int min_n = 0, min_seeds = 1;
  minimize->add_option("--kappa", kappa_val, "curvature (-1, 0, or 1)")
      ->required();
  minimize->add_option("--n", min_n, "number of sides (>= 3)")->required();
  minimize->add_option("--area", iso_area, "target area")->required();
  minimize->add_option("--seeds", min_seeds, "number of seeded restarts")
      ->default_val(1);
  minimize->add_option("--seed", seed, "base seed (overrides SPACEFORM_SEED)");

  auto* limit = iso_cmd->add_subcommand(
      "limit", "CSV table of inscribed regular n-gons approaching the circle");
  int limit_nmax = 0;
  limit->add_option("--kappa", kappa_val, "curvature (-1, 0, or 1)")
      ->required();
  limit->add_option("--area", iso_area, "target area")->required();
  limit->add_option("--n-max", limit_nmax, "largest n (<= 1000000)")
      ->required();

  // polygon utilities
  auto* polygon_cmd =
      app.add_subcommand("polygon", "Geodesic polygon utilities");
  polygon_cmd->require_subcommand(1);
  std::string vertices_text, sides_text, angles_text;
  auto add_polygon_sub = [&](const char* name, const char* help) {
    auto* sub = polygon_cmd->add_subcommand(name, help);
    sub->add_option("--kappa", kappa_val, "curvature (-1, 0, or 1)")
        ->required();
    sub->add_option("--vertices", vertices_text,
                    "JSON array of [x, y, z] vertices")
        ->required();
    return sub;
  };
  auto* poly_area = add_polygon_sub("area", "Area of a geodesic polygon");
  auto* poly_perimeter =
      add_polygon_sub("perimeter", "Perimeter of a geodesic polygon");
  auto* poly_convex =
      add_polygon_sub("convex", "Convexity test for a geodesic polygon");
  auto* poly_arm = polygon_cmd->add_subcommand(
      "arm", "Closing length of an open chain of sides and interior angles");
  poly_arm->add_option("--kappa", kappa_val, "curvature (-1, 0, or 1)")
      ->required();
  poly_arm->add_option("--sides", sides_text, "JSON array of side lengths")
      ->required();
  poly_arm
      ->add_option("--angles", angles_text,
                   "JSON array of interior angles (one fewer than sides)")
      ->required();

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Randomized verification suites");
  verify_cmd->require_subcommand(1);
  int samples = 1000;
  auto add_verify_sub = [&](const char* name, const char* help) {
    auto* sub = verify_cmd->add_subcommand(name, help);
    sub->add_option("--samples", samples, "samples per curvature")
        ->default_val(1000);
    sub->add_option("--seed", seed, "seed (overrides SPACEFORM_SEED)");
    return sub;
  };
  auto* v_identities = add_verify_sub(
      "identities", "Curvature-trigonometry identity residuals");
  auto* v_halfangle =
      add_verify_sub("halfangle", "Triangle half-angle relation residuals");
  auto* v_armlemma =
      add_verify_sub("armlemma", "Arm-opening monotonicity of the closing side");
  auto* v_dominance = add_verify_sub(
      "dominance", "Random convex polygons vs the regular minimum perimeter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Prints help text for --help (exit 0) or the parse diagnostic.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Kappa k(kappa_val);

  if (*solve) {
    if (!*sss_opt && !*sas_opt && !*asa_opt)
      throw usage_error("triangle solve: need one of --sss, --sas, --asa");
    Triangle t = *sss_opt ? triangle_from_sss(k, sss[0], sss[1], sss[2])
                 : *sas_opt ? triangle_from_sas(k, sas[0], sas[1], sas[2])
                            : triangle_from_asa(k, asa[0], asa[1], asa[2]);
    emit_triangle(t);
    return 0;
  }
  if (*regular_cmd) {
    double r;
    if (*r_opt)
      r = reg_r;
    else if (*side_opt)
      r = radius_from_side(k, reg_n, reg_side);
    else if (*angle_opt)
      r = radius_from_angle(k, reg_n, reg_angle);
    else if (*area_opt)
      r = radius_from_area(k, reg_n, reg_area);
    else
      throw usage_error("regular: need one of --r, --side, --angle, --area");
    emit_regular(build_regular(k, reg_n, r));
    return 0;
  }
  if (*circle) {
    emit_report(optimal_circle(k, iso_area));
    return 0;
  }
  if (*minimize) {
    emit_minimizer(minimize_polygon_best(k, min_n, iso_area, seed, min_seeds));
    return 0;
  }
  if (*limit) {
    if (limit_nmax < 3) throw usage_error("iso limit: --n-max must be >= 3");
    std::printf("n,r_n,perimeter_n,deficit_n\n");
    for (int n = 3; n <= limit_nmax; ++n) {
      const CircleLimitPoint pt = circle_limit(k, iso_area, n);
      std::printf("%d,%s,%s,%s\n", n, num(pt.radius).c_str(),
                  num(pt.perimeter).c_str(),
                  num(deficit_value(k, pt.perimeter, iso_area)).c_str());
    }
    return 0;
  }
  if (*poly_area || *poly_perimeter || *poly_convex) {
    const GeodesicPolygon poly =
        make_polygon(k, parse_vertices(k, vertices_text));
    if (*poly_area)
      std::printf("{\"kappa\": %d, \"area\": %s}\n", k.value(),
                  num(area(poly)).c_str());
    else if (*poly_perimeter)
      std::printf("{\"kappa\": %d, \"perimeter\": %s}\n", k.value(),
                  num(perimeter(poly)).c_str());
    else
      std::printf("{\"kappa\": %d, \"convex\": %s}\n", k.value(),
                  is_convex(poly) ? "true" : "false");
    return 0;
  }
  if (*poly_arm) {
    const std::vector<double> sides = parse_reals("--sides", sides_text);
    const std::vector<double> angles = parse_reals("--angles", angles_text);
    std::printf("{\"kappa\": %d, \"closing_length\": %s}\n", k.value(),
                num(arm_closing_length(k, sides, angles)).c_str());
    return 0;
  }
  if (*v_identities)
    return emit_suite("identities", samples, seed,
                      run_identities(samples, seed));
  if (*v_halfangle)
    return emit_suite("halfangle", samples, seed,
                      run_halfangle(samples, seed));
  if (*v_armlemma)
    return emit_suite("armlemma", samples, seed, run_armlemma(samples, seed));
  if (*v_dominance)
    return emit_suite("dominance", samples, seed,
                      run_dominance(samples, seed));

  throw usage_error("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const spaceform::usage_error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const spaceform::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
}
