#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wrl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

/// Environment variable holding the default worker count.
inline constexpr const char* kWorkersEnv = "WRLAT_WORKERS";

/// Flags of one invocation. Unused fields keep their defaults.
struct RunConfig {
  std::string subcommand;  ///< "count", "csl index", ...
  std::string lattice = "square";
  bool lattice_given = false;  ///< --lattice or --gram appeared on the command line
  std::string gram_file;
  std::optional<std::int64_t> radicand;
  std::string predicate = "wr";
  std::string method = "auto";
  std::string which;
  std::string model = "none";
  std::string construct;
  std::string lengths_sq;
  std::string axis;
  std::string format = "csv";
  std::int64_t max_n = 0;
  std::int64_t x_min = 10;
  std::int64_t x_max = 0;
  std::int64_t points = 200;
  std::int64_t bound = 10;
  std::int64_t index_bound = 200;
  std::int64_t samples = 20;
  long double tol = 1e-5L;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::string out = "-";
};

/// Workers from the environment, else the hardware concurrency.
unsigned default_workers();

/// Parses argv-style arguments (without the program name). Throws
/// std::invalid_argument on bad input; `help` receives usage text when
/// --help was requested, in which case the result is empty.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::string* help = nullptr);

/// Executes a parsed configuration, writing results to `out` (unless
/// config.out names a file) and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the exit-code contract: 0 ok, 1 verification
/// mismatch, 2 usage error, 3 other failure.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wrl::cli
