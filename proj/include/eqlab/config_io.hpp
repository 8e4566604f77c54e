#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqlab/core_model.hpp"
#include "eqlab/polysys.hpp"
#include "eqlab/solver.hpp"

namespace eqlab {

// Malformed or unreadable input; the message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Floating-point configuration plus the exact parameters it was read from.
struct LoadedConfiguration {
  Configuration config;
  ExactConfiguration exact;
};

// {"masses": [{"x": <num>, "y": <num>, "m": <num>}, ...]}. Fields may also be
// strings holding exact rationals such as "7/6".
LoadedConfiguration parse_configuration(std::string_view json_text);
LoadedConfiguration load_configuration(const std::filesystem::path& path);

std::string configuration_json(const Configuration& config);

// {"n", "equilibria": [{"x", "y", "residual", "morse_index", "hessian_det"}],
//  "report": {"N0", "N1", "N2", "N", "lower_bound_ok", "euler_ok", "degenerate_found"}}
std::string result_json(int n, const std::vector<Equilibrium>& equilibria, const MorseReport& report);

struct ResultRecord {
  double x = 0.0;
  double y = 0.0;
  double residual = 0.0;
  std::optional<int> morse_index;
  double hessian_det = 0.0;
};

struct ParsedResult {
  int n = 0;
  std::vector<ResultRecord> equilibria;
  int n0 = 0;
  int n1 = 0;
  int n2 = 0;
  bool lower_bound_ok = false;
  bool euler_ok = false;
  bool degenerate_found = false;
};

ParsedResult parse_result_json(std::string_view json_text);

}  // namespace eqlab
