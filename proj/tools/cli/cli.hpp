#ifndef PPLAB_TOOLS_CLI_HPP
#define PPLAB_TOOLS_CLI_HPP

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pplab::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class ExitCode : int { pass = 0, counterexample = 1, usage = 2 };

enum class Command { verify_theorem, verify_corollary, dims, splitting_type, sweep, export_transition };
enum class OutputFormat { text, json };

std::string_view command_name(Command c);

struct RunConfig {
  Command command = Command::sweep;
  std::vector<unsigned> N_values;
  std::vector<unsigned> n_values;
  std::optional<std::vector<unsigned>> k_values;  // sweep default: 1..n-1
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  unsigned height = 3;
  OutputFormat output = OutputFormat::text;
  std::optional<std::string> out_path;
  bool verbose = false;
  bool timing = true;
  unsigned jobs = 0;  // 0: hardware concurrency
};

/// Thrown for anything that maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "3", "1..4" or "1,2,5" (items may themselves be ranges).
std::vector<unsigned> parse_range(std::string_view spec);

/// The (N, n, k) triples a config asks for, in (N, n, k) order. Throws
/// UsageError naming the violated precondition.
struct Triple {
  unsigned N, n, k;
};
std::vector<Triple> expand_triples(const RunConfig& config);

/// Executes the config and returns the JSON report; timing is stored under
/// "elapsed_ms" unless config.timing is false.
nlohmann::json build_report(const RunConfig& config);

/// pass iff report["overall_pass"], counterexample otherwise.
ExitCode exit_code_for(const nlohmann::json& report);

/// Human-readable table for a report.
std::string render_text(const nlohmann::json& report);

/// Runs a parsed config, writing to `out` (or config.out_path) and
/// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point: parses argv, applies PPLAB_SEED, runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pplab::cli

#endif
