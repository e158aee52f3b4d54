#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mdemon::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kPhysicsViolation = 2;

enum class OutputFormat { Json, Csv };

struct Units {
  double k = 1;
  double hbar = 1;
  double temperature = 1;
};

struct RunConfig {
  Units units;
  std::size_t grid_n = 4096;
  double x_min = -8;
  double x_max = 8;
  bool grid_explicit = false;  ///< set when any grid flag was passed
  double eur_bound = 0.30685281944005469;  ///< ln(e/2)
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 20250322;
};

/// Environment variable naming the default output format (json|csv).
inline constexpr const char* kFormatEnv = "MDEMON_FORMAT";

/// Runs one command line (args excludes the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdemon::cli
