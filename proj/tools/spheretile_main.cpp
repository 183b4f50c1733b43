// Command-line front end: solve family geometry, generate/verify/render
// tilings, enumerate vertex types, classify moduli parameters.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spheretile/spheretile.hpp"

namespace st = spheretile;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw st::error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& data) {
  if (out_path.empty() || out_path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw st::error("cannot open output file: " + out_path);
  out << data;
}

// A point arrives either as a 3-vector x,y,z (normalized internally) or as
// spherical coordinates lat,lon in radians.
st::SpherePoint parse_point(const std::string& csv) {
  double x, y, z;
  if (std::sscanf(csv.c_str(), "%lf,%lf,%lf", &x, &y, &z) == 3)
    return st::SpherePoint(x, y, z);
  double lat, lon;
  if (std::sscanf(csv.c_str(), "%lf,%lf", &lat, &lon) == 2)
    return st::SpherePoint(std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon),
                           std::sin(lat));
  throw st::invalid_parameter_error("expected a point as x,y,z or lat,lon: " + csv);
}

// Angles arrive as plain radians or, with --units pi, as decimal or p/q
// multiples of pi.
struct AngleArg {
  double radians = 0.0;
  std::optional<st::Rational> rational;
};

AngleArg parse_angle(const std::string& s, const std::string& units) {
  AngleArg a;
  long long p = 0, q = 0;
  if (std::sscanf(s.c_str(), "%lld/%lld", &p, &q) == 2) {
    if (units != "pi")
      throw st::invalid_parameter_error("fractional angles require --units pi");
    a.rational = st::Rational::make(p, q);
    a.radians = a.rational->value() * st::kPi;
    return a;
  }
  const double v = std::stod(s);
  a.radians = units == "pi" ? v * st::kPi : v;
  return a;
}

const char* reduction_name(const st::QuadGeometry& g) {
  return st::to_string(st::detect_reduction(g.edges, 1e-9));
}

void print_geometry(const st::QuadGeometry& g) {
  std::printf("alpha/pi=%.4f beta/pi=%.4f gamma/pi=%.4f delta/pi=%.4f\n",
              g.angles.alpha / st::kPi, g.angles.beta / st::kPi, g.angles.gamma / st::kPi,
              g.angles.delta / st::kPi);
  std::printf("a/pi=%.4f b/pi=%.4f c/pi=%.4f\n", g.edges.a / st::kPi, g.edges.b / st::kPi,
              g.edges.c / st::kPi);
  std::printf("a=%.12f b=%.12f c=%.12f\n", g.edges.a, g.edges.b, g.edges.c);
  std::printf("closure_residual=%.3e reduction=%s\n", st::closure_residual(g),
              reduction_name(g));
  if (g.angles.alpha < st::kPi && g.angles.beta < st::kPi && g.angles.gamma < st::kPi &&
      g.angles.delta < st::kPi)
    std::printf("convexity_diagnostic=%s\n",
                st::convexity_inequalities_hold(g.angles) ? "ok" : "violated");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical a^2bc quadrilateral tilings: solvers, generators, verification"};
  app.require_subcommand(1);

  std::string units = "rad";
  std::string out_path;
  double tol = 1e-9;

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "solve family geometry");
  solve->require_subcommand(1);
  long long solve_n = 2;
  std::string solve_b = "0.2", solve_d = "0,-0.3,-0.95";
  auto* solve_three = solve->add_subcommand("three-layer", "3-layer earth map quadrilateral");
  solve_three->add_option("--n", solve_n, "number of time zones (>=2)");
  auto* solve_sub = solve->add_subcommand("subdivision", "octahedron subdivision quadrilateral");
  solve_sub->add_option("--b", solve_b, "edge parameter in (0, pi/4]");
  solve_sub->add_option("--units", units, "rad or pi");
  auto* solve_two = solve->add_subcommand("two-layer", "2-layer earth map quadrilateral");
  int solve_two_n = 3;
  solve_two->add_option("--n", solve_two_n, "half the number of tiles (>=3)");
  solve_two->add_option("--d", solve_d, "position of D as x,y,z");

  // ---- generate ----
  auto* gen = app.add_subcommand("generate", "generate a tiling document");
  std::string gen_family;
  gen->add_option("family", gen_family,
                  "two-layer|three-layer|three-layer-flip1|three-layer-flip2|subdivision|"
                  "subdivision-flip")
      ->required();
  int gen_n = 3, gen_m = 1;
  std::string gen_b = "0.2", gen_d = "0,-0.3,-0.95";
  gen->add_option("--n", gen_n, "family size parameter");
  gen->add_option("--m", gen_m, "flip parameter (n = 2m+1)");
  gen->add_option("--b", gen_b, "subdivision parameter");
  gen->add_option("--d", gen_d, "two-layer D as x,y,z");
  gen->add_option("--units", units, "rad or pi (for --b)");
  gen->add_option("--out", out_path, "output path (default stdout)");

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "re-check a tiling document");
  std::string ver_input;
  ver->add_option("input", ver_input, "document path or -")->required();

  // ---- census ----
  auto* cen = app.add_subcommand("census", "print the census of a document");
  std::string cen_input;
  cen->add_option("input", cen_input, "document path or -")->required();

  // ---- avc ----
  auto* avc = app.add_subcommand("avc", "enumerate admissible vertex types");
  std::string s_alpha = "0", s_beta = "0", s_gamma = "0", s_delta = "0";
  int max_degree = 60;
  avc->add_option("--alpha", s_alpha)->required();
  avc->add_option("--beta", s_beta)->required();
  avc->add_option("--gamma", s_gamma)->required();
  avc->add_option("--delta", s_delta)->required();
  avc->add_option("--units", units, "rad or pi");
  avc->add_option("--tol", tol, "angle-sum tolerance in radians");
  avc->add_option("--max-degree", max_degree, "total degree bound");

  // ---- moduli ----
  auto* mod = app.add_subcommand("moduli", "classify a moduli parameter point");
  mod->require_subcommand(1);
  auto* mod_two = mod->add_subcommand("two-layer", "classify D for the 2-layer family");
  int mod_n = 3;
  std::string mod_d = "0,-0.3,-0.95";
  mod_two->add_option("--n", mod_n);
  mod_two->add_option("--d", mod_d, "D as x,y,z")->required();
  auto* mod_sub = mod->add_subcommand("subdivision", "classify the subdivision parameter b");
  std::string mod_b = "0.2";
  mod_sub->add_option("--b", mod_b)->required();
  mod_sub->add_option("--units", units, "rad or pi");
  mod_sub->add_option("--tol", tol, "reduction tolerance");

  // ---- render ----
  auto* ren = app.add_subcommand("render", "render a document as stereographic SVG");
  std::string ren_input, ren_pole = "0,0,1";
  bool ren_split = false;
  ren->add_option("input", ren_input, "document path or -")->required();
  ren->add_option("--pole", ren_pole, "projection pole as x,y,z");
  ren->add_flag("--split-infinite", ren_split,
                "draw edges through the projection center as rays instead of failing");
  ren->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_three->parsed()) {
      print_geometry(st::solve_three_layer(solve_n));
      return kExitOk;
    }
    if (solve_sub->parsed()) {
      print_geometry(st::solve_subdivision(parse_angle(solve_b, units).radians));
      return kExitOk;
    }
    if (solve_two->parsed()) {
      const auto c = st::TwoLayerConstruction::make(solve_two_n, parse_point(solve_d));
      const auto q = st::solve_two_layer(c);
      print_geometry(q.geometry);
      std::printf("stratum=%s reflex_beta=%d reflex_gamma=%d reflex_delta=%d\n",
                  st::to_string(st::classify_two_layer(solve_two_n, c.D)), q.reflex_beta,
                  q.reflex_gamma, q.reflex_delta);
      return kExitOk;
    }

    if (gen->parsed()) {
      st::FamilyId id;
      if (gen_family == "two-layer") {
        id.tag = st::FamilyId::Tag::TwoLayer;
        id.n = gen_n;
        id.D = parse_point(gen_d);
      } else if (gen_family == "three-layer") {
        id.tag = st::FamilyId::Tag::ThreeLayer;
        id.n = gen_n;
      } else if (gen_family == "three-layer-flip1") {
        id.tag = st::FamilyId::Tag::ThreeLayerFlip1;
        id.m = gen_m;
      } else if (gen_family == "three-layer-flip2") {
        id.tag = st::FamilyId::Tag::ThreeLayerFlip2;
        id.m = gen_m;
      } else if (gen_family == "subdivision") {
        id.tag = st::FamilyId::Tag::Subdivision;
        id.b = parse_angle(gen_b, units).radians;
      } else if (gen_family == "subdivision-flip") {
        id.tag = st::FamilyId::Tag::SubdivisionFlip;
      } else {
        std::cerr << "unknown family: " << gen_family << "\n";
        return kExitUsage;
      }
      st::FamilyDescriptor fam{id.name(), {}};
      switch (id.tag) {
        case st::FamilyId::Tag::TwoLayer:
          fam.params = {{"n", double(id.n)}, {"dx", id.D.x()}, {"dy", id.D.y()},
                        {"dz", id.D.z()}};
          break;
        case st::FamilyId::Tag::ThreeLayer: fam.params = {{"n", double(id.n)}}; break;
        case st::FamilyId::Tag::ThreeLayerFlip1:
        case st::FamilyId::Tag::ThreeLayerFlip2: fam.params = {{"m", double(id.m)}}; break;
        case st::FamilyId::Tag::Subdivision: fam.params = {{"b", id.b}}; break;
        case st::FamilyId::Tag::SubdivisionFlip: break;
      }
      const st::Tiling t = st::generate(id);
      const st::QuadGeometry g = st::family_geometry(id);
      write_output(out_path, st::to_json(t, fam, &g));
      return kExitOk;
    }

    if (ver->parsed()) {
      const auto doc = st::parse_tiling(read_input(ver_input));
      const auto report = st::verify(doc.tiling);
      for (const auto& c : report.checks)
        std::printf("%-24s %s%s%s\n", c.name.c_str(), c.pass ? "pass" : "FAIL",
                    c.detail.empty() ? "" : "  ", c.detail.c_str());
      std::printf("v=%d e=%d f=%d census=%s\n", report.v, report.e, report.f,
                  st::census(doc.tiling).to_string().c_str());
      if (!report.passed()) {
        for (const auto& c : report.checks)
          if (!c.pass) {
            std::printf("verification failed: %s\n", c.name.c_str());
            break;
          }
        return kExitVerifyFail;
      }
      std::printf("verification passed\n");
      return kExitOk;
    }

    if (cen->parsed()) {
      const auto doc = st::parse_tiling(read_input(cen_input));
      std::cout << st::census(doc.tiling).to_string() << "\n";
      return kExitOk;
    }

    if (avc->parsed()) {
      st::AvcConstraints c;
      const AngleArg a = parse_angle(s_alpha, units), b = parse_angle(s_beta, units),
                     gm = parse_angle(s_gamma, units), d = parse_angle(s_delta, units);
      c.angles = {a.radians, b.radians, gm.radians, d.radians};
      c.tol = tol;
      c.max_total_degree = max_degree;
      if (a.rational && b.rational && gm.rational && d.rational)
        c.exact = std::array<st::Rational, 4>{*a.rational, *b.rational, *gm.rational, *d.rational};
      for (const auto& vt : st::enumerate_types(c)) std::cout << vt.to_string() << "\n";
      return kExitOk;
    }

    if (mod_two->parsed()) {
      std::cout << st::to_string(st::classify_two_layer(mod_n, parse_point(mod_d))) << "\n";
      return kExitOk;
    }
    if (mod_sub->parsed()) {
      const auto r = st::subdivision_moduli(parse_angle(mod_b, units).radians, tol);
      switch (r.kind) {
        case st::SubdivisionModuli::Kind::Valid_a2bc: std::cout << "Valid_a2bc\n"; break;
        case st::SubdivisionModuli::Kind::Reduction:
          std::cout << "Reduction(" << st::to_string(r.tag) << ")\n";
          break;
        case st::SubdivisionModuli::Kind::Invalid: std::cout << "Invalid\n"; break;
      }
      return kExitOk;
    }

    if (ren->parsed()) {
      const auto doc = st::parse_tiling(read_input(ren_input));
      st::RenderOptions opts;
      opts.split_infinite = ren_split;
      write_output(out_path, st::render_svg(doc.tiling, parse_point(ren_pole), opts));
      return kExitOk;
    }
  } catch (const st::malformed_tiling_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const st::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
