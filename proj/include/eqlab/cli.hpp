#pragma once

// Command implementations behind the eqlab tool. Each command writes its
// primary output to `out` (or to out_path when set), diagnostics to `err`, and
// returns the process exit code: 0 success, 1 I/O or validation error, 2 a
// degeneracy warning or a failed check.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eqlab/core_model.hpp"

namespace eqlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitWarning = 2;

// Exactly one source should be set; numeric fields accept "p/q" rationals.
struct ConfigSource {
  std::optional<std::string> config_path;
  std::optional<std::array<std::string, 3>> ring;  // N M C
  std::optional<std::array<std::string, 2>> lagrange;
  std::optional<std::string> triangle;
};

struct CommandOptions {
  ConfigSource source;
  std::optional<std::string> out_path;
  std::optional<double> spacing;
  std::optional<double> tol;
  // sweep
  int sweep_n = 0;
  std::optional<std::array<std::string, 3>> sweep;  // MIN MAX STEPS
  // contour
  std::optional<std::array<double, 4>> contour_bounds;  // XMIN XMAX YMIN YMAX
  int contour_resolution = 101;
  double contour_cap = 50.0;
  // polysys
  std::string variant = "w";
  std::string format = "pretty";
};

struct ContourGrid {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  int resolution = 0;
  std::vector<double> values;  // row-major, one row per y

  double x_at(int i) const;
  double y_at(int j) const;
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * resolution + i]; }
};

// Potential on a resolution x resolution node grid, clamped to `cap`; nodes
// at a mass take the cap.
ContourGrid contour_grid(const Configuration& config, std::array<double, 4> bounds, int resolution,
                         double cap = 50.0);

// Header "y\x" then the x coordinates; each row starts with its y coordinate.
std::string contour_csv(const ContourGrid& grid);

// Log-spaced ratios from min to max inclusive.
std::vector<double> log_spaced(double min, double max, int steps);

int cmd_solve(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_ring(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_contour(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_polysys(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace eqlab::cli
