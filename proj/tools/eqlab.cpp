#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqlab/cli.hpp"

namespace {

using eqlab::cli::CommandOptions;

template <std::size_t N>
void copy_args(const std::vector<std::string>& in, std::optional<std::array<std::string, N>>& out) {
  if (in.empty()) return;
  std::array<std::string, N> a;
  for (std::size_t i = 0; i < N; ++i) a[i] = in[i];
  out = a;
}

void add_source(CLI::App* cmd, std::string& config, std::vector<std::string>& ring,
                std::vector<std::string>& lagrange, std::string& triangle) {
  cmd->add_option("--config", config, "JSON configuration file");
  cmd->add_option("--ring", ring, "ring of N-1 masses M around a central mass C")->expected(3);
  cmd->add_option("--lagrange", lagrange, "two masses M1 M2 at equilateral separation")->expected(2);
  cmd->add_option("--triangle", triangle, "three equal masses M");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria of a quadratic central potential with point masses"};
  app.require_subcommand(1);

  CommandOptions opts;
  std::string config;
  std::string triangle;
  std::vector<std::string> ring;
  std::vector<std::string> lagrange;
  std::vector<std::string> sweep;
  std::vector<double> contour;
  std::string out;
  double spacing = 0.0;
  double tol = 0.0;

  const auto common = [&](CLI::App* cmd) {
    add_source(cmd, config, ring, lagrange, triangle);
    cmd->add_option("--out", out, "write output to this file");
    cmd->add_option("--spacing", spacing, "seed grid spacing")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", tol, "Newton step tolerance")->check(CLI::PositiveNumber);
  };

  auto* solve = app.add_subcommand("solve", "find and classify all equilibria");
  common(solve);
  auto* ring_cmd = app.add_subcommand("ring", "count equilibria of a ring configuration by ray");
  common(ring_cmd);
  auto* sweep_cmd = app.add_subcommand("sweep", "count ring equilibria over a range of mass ratios");
  sweep_cmd->add_option("--sweep", sweep, "MIN MAX STEPS (log-spaced)")->expected(3)->required();
  sweep_cmd->add_option("--n", opts.sweep_n, "total number of masses")->required();
  sweep_cmd->add_option("--out", out, "write CSV to this file");
  sweep_cmd->add_option("--spacing", spacing, "seed grid spacing")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--tol", tol, "Newton step tolerance")->check(CLI::PositiveNumber);
  auto* contour_cmd = app.add_subcommand("contour", "sample the potential on a grid");
  add_source(contour_cmd, config, ring, lagrange, triangle);
  contour_cmd->add_option("--out", out, "write CSV to this file");
  contour_cmd->add_option("--contour", contour, "XMIN XMAX YMIN YMAX RES")->expected(5)->required();
  contour_cmd->add_option("--cap", opts.contour_cap, "clamp value for the potential");
  auto* polysys = app.add_subcommand("polysys", "print the polynomial system");
  add_source(polysys, config, ring, lagrange, triangle);
  polysys->add_option("--out", out, "write output to this file");
  polysys->add_option("--variant", opts.variant, "w or ab")->check(CLI::IsMember({"w", "ab"}));
  polysys->add_option("--format", opts.format, "pretty or supports")
      ->check(CLI::IsMember({"pretty", "supports"}));
  auto* verify = app.add_subcommand("verify", "check counts against the known bounds");
  common(verify);

  CLI11_PARSE(app, argc, argv);

  if (!config.empty()) opts.source.config_path = config;
  if (!triangle.empty()) opts.source.triangle = triangle;
  copy_args(ring, opts.source.ring);
  copy_args(lagrange, opts.source.lagrange);
  copy_args(sweep, opts.sweep);
  if (!out.empty()) opts.out_path = out;
  if (spacing > 0.0) opts.spacing = spacing;
  if (tol > 0.0) opts.tol = tol;
  if (contour.size() == 5) {
    opts.contour_bounds = std::array<double, 4>{contour[0], contour[1], contour[2], contour[3]};
    const double res = contour[4];
    if (res != static_cast<int>(res)) {
      std::cerr << "error: contour resolution must be an integer\n";
      return eqlab::cli::kExitError;
    }
    opts.contour_resolution = static_cast<int>(res);
  }

  if (solve->parsed()) return eqlab::cli::cmd_solve(opts, std::cout, std::cerr);
  if (ring_cmd->parsed()) return eqlab::cli::cmd_ring(opts, std::cout, std::cerr);
  if (sweep_cmd->parsed()) return eqlab::cli::cmd_sweep(opts, std::cout, std::cerr);
  if (contour_cmd->parsed()) return eqlab::cli::cmd_contour(opts, std::cout, std::cerr);
  if (polysys->parsed()) return eqlab::cli::cmd_polysys(opts, std::cout, std::cerr);
  return eqlab::cli::cmd_verify(opts, std::cout, std::cerr);
}
