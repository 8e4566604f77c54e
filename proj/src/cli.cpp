#include "eqlab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "eqlab/bounds_examples.hpp"
#include "eqlab/config_io.hpp"
#include "eqlab/errors.hpp"
#include "eqlab/polysys.hpp"
#include "eqlab/ring_analysis.hpp"
#include "eqlab/solver.hpp"

namespace eqlab::cli {

using nlohmann::json;

namespace {

// Raised for bad user input; reported with exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_value(const std::string& text, const std::string& what) {
  try {
    return to_double(parse_rational(text));
  } catch (const InvalidParameter& e) {
    throw UsageError(what + ": " + e.what());
  }
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer, got '" + text + "'");
  }
}

RingConfig ring_from(const std::array<std::string, 3>& args) {
  RingConfig ring{parse_int(args[0], "--ring N"), parse_value(args[1], "--ring M"),
                  parse_value(args[2], "--ring C"), 1.0};
  try {
    ring.validate();
  } catch (const InvalidParameter& e) {
    throw UsageError(std::string("--ring: ") + e.what());
  }
  return ring;
}

LoadedConfiguration load_source(const ConfigSource& src) {
  const int given = src.config_path.has_value() + src.ring.has_value() + src.lagrange.has_value() +
                    src.triangle.has_value();
  if (given != 1) {
    throw UsageError("give exactly one of --config, --ring, --lagrange, --triangle");
  }
  try {
    if (src.config_path) return load_configuration(*src.config_path);
    Configuration config = [&] {
      if (src.ring) return ring_from(*src.ring).to_configuration();
      if (src.lagrange) {
        return lagrange_config(parse_value((*src.lagrange)[0], "--lagrange M1"),
                               parse_value((*src.lagrange)[1], "--lagrange M2"));
      }
      return triangle_config(parse_value(*src.triangle, "--triangle M"));
    }();
    ExactConfiguration exact = exact_from(config);
    return {std::move(config), std::move(exact)};
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
}

SolveOptions solve_options(const CommandOptions& opts) {
  SolveOptions so;
  so.grid_spacing = opts.spacing;
  so.newton_tolerance = opts.tol;
  return so;
}

// Sends the finished text to out_path or to the stream.
void emit(const CommandOptions& opts, std::ostream& out, const std::string& text) {
  if (!opts.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*opts.out_path);
  if (!file) throw ConfigError("cannot write '" + *opts.out_path + "'");
  file << text;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace

double ContourGrid::x_at(int i) const {
  return x_min + (x_max - x_min) * static_cast<double>(i) / (resolution - 1);
}

double ContourGrid::y_at(int j) const {
  return y_min + (y_max - y_min) * static_cast<double>(j) / (resolution - 1);
}

ContourGrid contour_grid(const Configuration& config, std::array<double, 4> bounds, int resolution,
                         double cap) {
  const auto [x_min, x_max, y_min, y_max] = bounds;
  if (resolution < 2) throw InvalidParameter("contour resolution must be at least 2");
  if (!(x_min < x_max) || !(y_min < y_max) || !std::isfinite(x_max - x_min) ||
      !std::isfinite(y_max - y_min)) {
    throw InvalidParameter("contour bounds must satisfy min < max");
  }
  if (!std::isfinite(cap)) throw InvalidParameter("contour cap must be finite");
  ContourGrid grid{x_min, x_max, y_min, y_max, resolution, {}};
  grid.values.resize(static_cast<std::size_t>(resolution) * resolution);
  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      double v = cap;
      try {
        v = std::min(cap, potential(config, {grid.x_at(i), grid.y_at(j)}));
      } catch (const SingularEvaluation&) {
      }
      grid.values[static_cast<std::size_t>(j) * resolution + i] = v;
    }
  }
  return grid;
}

std::string contour_csv(const ContourGrid& grid) {
  std::ostringstream out;
  out.precision(17);
  out << "y\\x";
  for (int i = 0; i < grid.resolution; ++i) out << ',' << grid.x_at(i);
  out << '\n';
  for (int j = 0; j < grid.resolution; ++j) {
    out << grid.y_at(j);
    for (int i = 0; i < grid.resolution; ++i) out << ',' << grid.at(i, j);
    out << '\n';
  }
  return out.str();
}

std::vector<double> log_spaced(double min, double max, int steps) {
  if (!(min > 0.0) || !(max >= min) || steps < 1 || (steps == 1 && max != min)) {
    throw InvalidParameter("sweep range needs 0 < MIN <= MAX and STEPS >= 1 (2 when MIN < MAX)");
  }
  std::vector<double> out;
  if (steps == 1) return {min};
  const double lo = std::log(min);
  const double hi = std::log(max);
  for (int k = 0; k < steps; ++k) {
    out.push_back(k == 0 ? min : k == steps - 1 ? max : std::exp(lo + (hi - lo) * k / (steps - 1)));
  }
  return out;
}

int cmd_solve(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LoadedConfiguration loaded = load_source(opts.source);
    const auto equilibria = find_equilibria(loaded.config, solve_options(opts));
    const int n = static_cast<int>(loaded.config.size());
    const MorseReport report = morse_report(equilibria, n);
    emit(opts, out, result_json(n, equilibria, report) + "\n");
    if (report.degenerate_found) {
      err << "warning: " << report.degenerate_count
          << " degenerate equilibria found; the equilibrium set may not be isolated\n";
      return kExitWarning;
    }
    return kExitOk;
  });
}

int cmd_ring(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SolveOptions so = solve_options(opts);
    if (opts.source.ring && !opts.source.config_path && !opts.source.lagrange && !opts.source.triangle) {
      const RingConfig ring = ring_from(*opts.source.ring);
      const RingCount count = count_ring_equilibria(ring, so);
      const MorseReport report = morse_report(count.equilibria, ring.n_total);
      json doc = json::parse(result_json(ring.n_total, count.equilibria, report));
      doc["total"] = count.total;
      doc["ray_a"] = count.ray_a;
      doc["ray_b"] = count.ray_b;
      doc["off_ray"] = count.off_ray;
      doc["per_ray_a"] = count.per_ray_a;
      doc["per_ray_b"] = count.per_ray_b;
      doc["consistent"] = count.consistent;
      emit(opts, out, doc.dump(2) + "\n");
      return report.degenerate_found ? kExitWarning : kExitOk;
    }
    if (opts.source.config_path) throw UsageError("ring takes --ring, --lagrange or --triangle");
    const LoadedConfiguration loaded = load_source(opts.source);
    const auto equilibria = find_equilibria(loaded.config, so);
    const int n = static_cast<int>(loaded.config.size());
    const MorseReport report = morse_report(equilibria, n);
    json doc = json::parse(result_json(n, equilibria, report));
    doc["total"] = static_cast<int>(equilibria.size());
    emit(opts, out, doc.dump(2) + "\n");
    return report.degenerate_found ? kExitWarning : kExitOk;
  });
}

int cmd_sweep(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!opts.sweep) throw UsageError("sweep needs --sweep MIN MAX STEPS");
    if (opts.sweep_n < 4) throw UsageError("sweep needs --n N with N >= 4");
    const double lo = parse_value((*opts.sweep)[0], "--sweep MIN");
    const double hi = parse_value((*opts.sweep)[1], "--sweep MAX");
    const int steps = parse_int((*opts.sweep)[2], "--sweep STEPS");
    std::vector<double> ratios;
    try {
      ratios = log_spaced(lo, hi, steps);
    } catch (const InvalidParameter& e) {
      throw UsageError(e.what());
    }
    const SweepResult sweep = mass_sweep(opts.sweep_n, ratios, solve_options(opts));
    emit(opts, out, sweep_csv(sweep));
    if (sweep.first_full_ratio) {
      err << "5n-5 = " << 5 * opts.sweep_n - 5 << " first reached at ratio " << *sweep.first_full_ratio
          << '\n';
    } else {
      err << "5n-5 = " << 5 * opts.sweep_n - 5 << " not reached in the swept range\n";
    }
    return kExitOk;
  });
}

int cmd_contour(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!opts.contour_bounds) throw UsageError("contour needs --contour XMIN XMAX YMIN YMAX RES");
    const LoadedConfiguration loaded = load_source(opts.source);
    ContourGrid grid;
    try {
      grid = contour_grid(loaded.config, *opts.contour_bounds, opts.contour_resolution, opts.contour_cap);
    } catch (const InvalidParameter& e) {
      throw UsageError(e.what());
    }
    emit(opts, out, contour_csv(grid));
    return kExitOk;
  });
}

int cmd_polysys(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.variant != "w" && opts.variant != "ab") {
      throw UsageError("unknown variant '" + opts.variant + "' (expected w or ab)");
    }
    if (opts.format != "pretty" && opts.format != "supports") {
      throw UsageError("unknown format '" + opts.format + "' (expected pretty or supports)");
    }
    const LoadedConfiguration loaded = load_source(opts.source);
    const PolynomialSystem system =
        opts.variant == "w" ? build_system_w(loaded.exact) : build_system_ab(loaded.exact);
    emit(opts, out, opts.format == "pretty" ? format_system(system) : format_supports(newton_supports(system)));
    return kExitOk;
  });
}

int cmd_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LoadedConfiguration loaded = load_source(opts.source);
    const Configuration& config = loaded.config;
    const int n = static_cast<int>(config.size());
    const auto equilibria = find_equilibria(config, solve_options(opts));
    const MorseReport report = morse_report(equilibria, n);
    const BigInt count = static_cast<long>(equilibria.size());

    std::ostringstream text;
    bool all_pass = true;
    const auto check = [&](const std::string& name, bool ok, const std::string& detail) {
      text << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
      all_pass = all_pass && ok;
    };

    check("non_degenerate", !report.degenerate_found,
          report.degenerate_found
              ? std::to_string(report.degenerate_count) + " degenerate equilibria (non-isolated family?)"
              : "all Hessian determinants above threshold");
    check("lower_bound", report.lower_bound_ok,
          "N = " + std::to_string(report.total) + ", n + 1 = " + std::to_string(n + 1));
    check("euler", report.euler_ok,
          "N0 - N1 + N2 = " + std::to_string(report.euler_characteristic()) + ", 1 - n = " +
              std::to_string(1 - n));
    check("weak_morse", report.minima_ok && report.saddles_ok,
          "N0 = " + std::to_string(report.n0) + " >= 1, N1 = " + std::to_string(report.n1) +
              " >= " + std::to_string(n));
    const BigInt bezout = bezout_bound(n);
    check("bezout_bound", count <= bezout, "N = " + count.str() + " <= 4^(n+2) = " + bezout.str());
    const BigInt mv_bound = mv_tilde_formula(n) + 1;
    check("mixed_volume_bound", count <= mv_bound,
          "N = " + count.str() + " <= (9n^2+n+2)2^(n-1) + 1 = " + mv_bound.str());
    if (const auto degree = reference_degrees().lookup(n)) {
      check("reference_degree", count <= *degree,
            "N = " + count.str() + " <= " + std::to_string(*degree));
    }

    const PolynomialSystem sys_w = build_system_w(loaded.exact);
    const PolynomialSystem sys_ab = build_system_ab(loaded.exact);
    double worst_w = 0.0;
    double worst_ab = 0.0;
    for (const auto& eq : equilibria) {
      worst_w = std::max(worst_w, lift_and_residual(sys_w, config, eq));
      worst_ab = std::max(worst_ab, lift_and_residual(sys_ab, config, eq));
    }
    std::ostringstream rw;
    rw << "max residual " << worst_w << " <= 1e-08";
    check("lift_w", worst_w <= 1e-8, rw.str());
    std::ostringstream rab;
    rab << "max residual " << worst_ab << " <= 1e-08";
    check("lift_ab", worst_ab <= 1e-8, rab.str());

    emit(opts, out, text.str());
    return all_pass ? kExitOk : kExitWarning;
  });
}

}  // namespace eqlab::cli
