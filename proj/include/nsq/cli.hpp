#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nsq {

enum class Command { kState, kEtaScan, kPhaseScan, kTable1, kReport };
enum class OutputFormat { kCsv, kJson };

// Parsed and defaulted invocation. The eta family can be addressed either
// directly (eta) or through the source parameters (alpha with gamma);
// validate_config rejects every other combination.
struct RunConfig {
  Command command = Command::kState;
  int n_total = 8;
  std::optional<double> eta;
  std::optional<double> alpha;
  std::optional<double> gamma;

  double eta_min = 0.0;    // eta-scan grid
  double eta_max = 1.5;
  double eta_step = 0.005;
  int phi_bins = 20;       // phase-scan grid

  std::vector<double> table_etas;  // empty = defaults
  int table_n_min = 3;
  int table_n_max = 8;

  std::string output_path;  // empty = stdout
  OutputFormat format = OutputFormat::kCsv;
};

// Exit codes: 0 success, 1 numerical-domain failure, 2 configuration error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitConfig = 2;

// Full-range validation of a parsed config; returns an explanation for
// the first violated rule, nothing when the config is runnable.
std::optional<std::string> validate_config(const RunConfig& config);

// Resolve the effective output path: absolute paths and empty (stdout)
// pass through, relative ones are placed under $NSQUEEZE_OUTPUT_DIR when
// that variable is set and nonempty.
std::string resolve_output_path(const std::string& path);

// Execute a validated config, writing payload to `out` (or the file named
// by output_path) and diagnostics to `err`. Returns an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv front end: parse, validate, run. Returns the process exit code.
int main_cli(int argc, const char* const* argv);

}  // namespace nsq
