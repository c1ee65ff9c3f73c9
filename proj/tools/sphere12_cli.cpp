// Command-line front end: Tammes solves, criticality certificates,
// deformation paths, and SVG rendering.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict,
// 2 usage error or infeasible request.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "sphere12/json_io.hpp"
#include "sphere12/moves.hpp"
#include "sphere12/named.hpp"
#include "sphere12/permgroup.hpp"
#include "sphere12/render.hpp"
#include "sphere12/tammes.hpp"

namespace {

using namespace sphere12;

int cmd_tammes(int n, int restarts, std::uint64_t seed, const std::string& out) {
  if (n < 3) {
    std::cerr << "tammes: N must be at least 3\n";
    return 2;
  }
  const TammesResult r = solve(n, restarts, seed);
  std::printf("N=%d theta=%.6f deg  r=%.6f\n", n, r.theta * 180.0 / kPi, r.radius);
  if (!out.empty())
    write_text_file(out, tammes_result_to_json(r).dump(2) + "\n");
  else
    std::cout << tammes_result_to_json(r).dump(2) << "\n";
  return 0;
}

int cmd_check_critical(const std::string& file, double theta, double tol) {
  const Configuration c = load_config(file);
  const BalanceCertificate cert = is_balanced(c, theta, tol);
  std::cout << certificate_to_json(cert).dump(2) << "\n";
  return cert.balanced ? 0 : 1;
}

int cmd_deform(const std::string& move, const std::string& variant, int pole,
               int direction, double r, double eps, int samples,
               const std::string& out_dir, int frames) {
  std::optional<DeformationPath> path;
  if (move == "m6") {
    const M6Variant v = variant == "hcp" ? M6Variant::HCP : M6Variant::FCC;
    path = m6_path(v, r, eps);
  } else if (move == "m5") {
    path = m5_path(pole, direction, r);
  } else if (move == "m5mod") {
    path = modified_m5_path(pole, direction, r);
  } else {
    std::cerr << "deform: unknown move '" << move << "'\n";
    return 2;
  }

  const PathReport rep = verify_path(*path, samples);
  std::printf("segments=%d samples=%ld min_separation=%.6f violations=%zu\n",
              path->segments(), rep.samples, rep.min_separation,
              rep.violation_times.size());
  std::printf("endpoint_match_rms=%.6e\n", rep.endpoint_match_rms);
  if (move == "m5" || move == "m5mod") {
    const Permutation p = induced_permutation(*path, named_dod());
    std::cout << "induced_permutation=[";
    for (int i = 0; i < p.n(); ++i) std::cout << (i ? "," : "") << p(i);
    std::cout << "] parity="
              << (parity(p) == Parity::Even ? "even" : "odd") << "\n";
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_text_file(out_dir + "/report.json",
                    path_report_to_json(rep).dump(2) + "\n");
    write_text_file(out_dir + "/path.json",
                    path_to_json(*path, frames).dump(2) + "\n");
  }
  return rep.violation_times.empty() ? 0 : 1;
}

int cmd_render(const std::string& file, const std::string& projection,
               const std::string& axis, double pole_colat, double pole_lon,
               int size, bool labels, bool weights, std::optional<double> theta,
               const std::string& out) {
  const Configuration c = load_config(file);
  RenderSpec spec;
  if (projection == "stereo") {
    spec.projection = RenderSpec::Projection::Stereographic;
    spec.pole = UnitVector::from_spherical(pole_colat, pole_lon);
  } else {
    spec.projection = RenderSpec::Projection::Orthographic;
    if (axis == "x") spec.axis = Vec3(1, 0, 0);
    else if (axis == "y") spec.axis = Vec3(0, 1, 0);
    else spec.axis = Vec3(0, 0, 1);
  }
  spec.size = size;
  spec.show_labels = labels;
  spec.show_weights = weights;
  spec.contact_theta = theta;

  std::optional<StressGraph> stress;
  if (weights && theta) {
    const BalanceCertificate cert = is_balanced(c, *theta);
    if (cert.balanced) stress = cert.weights;
  }
  const std::string svg = render_svg(c, spec, stress);
  if (out.empty()) std::cout << svg;
  else write_text_file(out, svg);
  return 0;
}

int cmd_named(const std::string& name, const std::string& out) {
  const Configuration c = named(name);
  if (out.empty()) std::cout << config_to_json(c).dump(2) << "\n";
  else write_text_file(out, config_to_json(c).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Configuration-space toolkit for spheres touching a central sphere"};
  app.require_subcommand(1);

  // tammes
  int n = 12, restarts = 200;
  std::uint64_t seed = 1;
  std::string out;
  auto* tam = app.add_subcommand("tammes", "Maximin solver for N touching spheres");
  tam->add_option("N", n, "number of spheres")->required();
  tam->add_option("--restarts", restarts, "multi-start budget");
  tam->add_option("--seed", seed, "RNG seed");
  tam->add_option("--out", out, "write TammesResult JSON here");

  // check-critical
  std::string config_file;
  double theta = kPi / 3, tol = kContactTol;
  auto* chk =
      app.add_subcommand("check-critical", "Balance certificate for a configuration");
  chk->add_option("config", config_file, "configuration JSON file")->required();
  chk->add_option("--theta", theta, "contact angle (radians)");
  chk->add_option("--tol", tol, "contact identification tolerance");

  // deform
  std::string move, variant = "fcc", out_dir;
  int pole = 0, direction = 1, samples = 10000, frames = 0;
  double r = 1.0, eps = 0.0;
  auto* def = app.add_subcommand("deform", "Build and verify a deformation path");
  def->add_option("move", move, "m6 | m5 | m5mod")->required();
  def->add_option("--variant", variant, "m6 target: fcc | hcp");
  def->add_option("--pole", pole, "m5 pole ball index (0..11)");
  def->add_option("--direction", direction, "m5 rotation direction (+1 | -1)");
  def->add_option("--r", r, "touching-sphere radius");
  def->add_option("--eps", eps, "m6 interior clearance");
  def->add_option("--samples", samples, "verification samples per segment");
  def->add_option("--out-dir", out_dir, "write report.json and path.json here");
  def->add_option("--frames", frames, "keyframes per segment in path.json");

  // render
  std::string projection = "ortho", axis = "z", out_svg;
  double pole_colat = 0, pole_lon = 0;
  int size = 600;
  bool labels = false, weights = false;
  std::optional<double> render_theta;
  auto* ren = app.add_subcommand("render", "Render a configuration to SVG");
  ren->add_option("config", config_file, "configuration JSON file")->required();
  ren->add_option("--projection", projection, "ortho | stereo");
  ren->add_option("--axis", axis, "orthographic view axis: x | y | z");
  ren->add_option("--pole-colat", pole_colat, "stereographic pole colatitude");
  ren->add_option("--pole-lon", pole_lon, "stereographic pole longitude");
  ren->add_option("--size", size, "canvas size in pixels");
  ren->add_flag("--labels", labels, "draw point labels");
  ren->add_flag("--weights", weights, "stroke edges by balance weights");
  double theta_opt = -1;
  ren->add_option("--theta", theta_opt, "contact angle for edges (radians)");
  ren->add_option("--out", out_svg, "output SVG file");

  // named
  std::string name;
  auto* nam = app.add_subcommand("named", "Emit a named reference configuration");
  nam->add_option("name", name, "DOD|FCC|HCP|TET|OCT|RING(n)|THETA5(a,b,c)|M5_HALFWAY")
      ->required();
  nam->add_option("--out", out, "output JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (tam->parsed()) return cmd_tammes(n, restarts, seed, out);
    if (chk->parsed()) return cmd_check_critical(config_file, theta, tol);
    if (def->parsed())
      return cmd_deform(move, variant, pole, direction, r, eps, samples, out_dir,
                        frames);
    if (ren->parsed()) {
      if (theta_opt > 0) render_theta = theta_opt;
      return cmd_render(config_file, projection, axis, pole_colat, pole_lon, size,
                        labels, weights, render_theta, out_svg);
    }
    if (nam->parsed()) return cmd_named(name, out);
  } catch (const infeasible_move_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const degenerate_error& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
