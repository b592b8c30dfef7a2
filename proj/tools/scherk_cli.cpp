#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "scherk/mesh.hpp"
#include "scherk/report.hpp"
#include "scherk/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct CommonFlags {
  std::string input_path;
  std::string params;
  std::string out;
  double tol_pitot = scherk::kDefaultTolPitot;
  std::string profile = "default";
  std::uint64_t seed = 20240601;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("input", f.input_path, "JSON input file ('-' for stdin)");
  cmd->add_option("--params", f.params, "Parameter triple m,s,t");
  cmd->add_option("--out", f.out, "Output file");
  cmd->add_option("--tol-pitot", f.tol_pitot, "Relative Pitot tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--tol-profile", f.profile, "strict or default")->check(CLI::IsMember({"strict", "default"}));
  cmd->add_option("--seed", f.seed, "Seed for random sample points and sweeps");
}

std::optional<scherk::Input> read_input(const CommonFlags& f, bool required) {
  if (!f.params.empty() && !f.input_path.empty())
    throw scherk::Error(scherk::ErrorCode::InvalidInput, "give either an input file or --params, not both");
  if (!f.params.empty()) return scherk::parse_params_flag(f.params);
  if (f.input_path == "-" || (f.input_path.empty() && required)) {
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return scherk::parse_input_json(text);
  }
  if (!f.input_path.empty()) return scherk::read_input_file(f.input_path);
  return std::nullopt;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f || !(f << text)) throw scherk::Error(scherk::ErrorCode::IoError, "cannot write " + out);
}

scherk::VerifyOptions verify_options(const CommonFlags& f) {
  scherk::VerifyOptions opt;
  opt.profile = scherk::parse_tol_profile(f.profile);
  opt.seed = f.seed;
  return opt;
}

int cmd_analyze(const CommonFlags& f) {
  const auto input = *read_input(f, true);
  const auto surface = scherk::build_surface(input, f.tol_pitot);
  const auto checks = scherk::verify_surface(surface, verify_options(f));
  emit(scherk::dump_deterministic(scherk::analysis_report(surface, input, checks)), f.out);
  return kExitOk;
}

int cmd_verify(const CommonFlags& f, int cases) {
  const auto input = read_input(f, false);
  const auto opt = verify_options(f);
  const auto checks = input ? scherk::verify_surface(scherk::build_surface(*input, f.tol_pitot), opt)
                            : scherk::verify_sweep(cases, opt);
  emit(scherk::format_checks(checks), f.out);
  if (scherk::all_passed(checks)) return kExitOk;
  std::cerr << "failing checks:";
  for (const auto& c : checks)
    if (!c.passed) std::cerr << ' ' << c.name;
  std::cerr << '\n';
  return kExitVerifyFailed;
}

int cmd_mesh(const CommonFlags& f, const scherk::MeshOptions& mo) {
  const auto input = *read_input(f, true);
  const auto surface = scherk::build_surface(input, f.tol_pitot);
  if (f.out.empty()) throw scherk::Error(scherk::ErrorCode::InvalidInput, "mesh needs --out file.obj");
  const auto mesh = scherk::sample_disk(surface, mo);
  scherk::export_obj(mesh, f.out);
  std::size_t clamped = 0;
  for (int c : mesh.metadata.clamp) clamped += c != 0;
  std::printf("vertices %zu faces %zu clamped %zu\n", mesh.vertices.size(), mesh.faces.size(), clamped);
  return kExitOk;
}

int cmd_asymptotics(const CommonFlags& f, int pole) {
  const auto input = *read_input(f, true);
  const auto surface = scherk::build_surface(input, f.tol_pitot);
  const auto trace = scherk::radial_trace(surface, pole, scherk::default_trace_radii());
  const double slope = scherk::fit_log_slope(trace);
  const double expect = 2.0 * scherk::kLogLawSigns[pole - 1] * surface.kernel.log_constants[pole - 1];
  const double rel = std::abs(slope - expect) / std::abs(expect);
  if (f.out.empty()) {
    std::printf("r,T\n");
    for (const auto& [r, T] : trace) std::printf("%.17g,%.17g\n", r, T);
  } else {
    scherk::export_csv(trace, f.out);
  }
  std::fprintf(stderr, "pole %d slope %.17g expected %.17g relative_error %.3e\n", pole, slope, expect, rel);
  return rel <= 1e-2 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scherk-type minimal graphs over Pitot quadrilaterals"};
  app.require_subcommand(1);

  CommonFlags analyze_f, verify_f, mesh_f, asym_f;
  auto* analyze = app.add_subcommand("analyze", "Full JSON report for one quadrilateral");
  add_common(analyze, analyze_f);

  auto* verify = app.add_subcommand("verify", "Invariant checks on one input, or a random sweep");
  add_common(verify, verify_f);
  int cases = 20;
  verify->add_option("--cases", cases, "Sweep size when no input is given")->check(CLI::PositiveNumber);

  auto* mesh = app.add_subcommand("mesh", "Sample the surface and write a Wavefront OBJ");
  add_common(mesh, mesh_f);
  scherk::MeshOptions mo;
  mesh->add_option("--nr", mo.n_r, "Number of rings")->check(CLI::Range(2, 100000));
  mesh->add_option("--ntheta", mo.n_theta, "Points per ring")->check(CLI::Range(8, 1000000));
  mesh->add_option("--rmax", mo.r_max, "Outer disk radius")->check(CLI::Range(1e-12, 1.0 - 1e-6));
  mesh->add_option("--hmax", mo.h_max, "Height clamp, normalized units")->check(CLI::PositiveNumber);

  auto* asym = app.add_subcommand("asymptotics", "Radial height trace toward a pole, as CSV");
  add_common(asym, asym_f);
  int pole = 1;
  asym->add_option("--pole", pole, "Pole index 1..4")->check(CLI::Range(1, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_f);
    if (*verify) return cmd_verify(verify_f, cases);
    if (*mesh) return cmd_mesh(mesh_f, mo);
    if (*asym) return cmd_asymptotics(asym_f, pole);
  } catch (const scherk::Error& e) {
    std::cerr << "error [" << scherk::to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
