#ifndef COVERBOUND_RUN_HPP
#define COVERBOUND_RUN_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "coverbound/certifier.hpp"

namespace coverbound {

enum class Command { certify_moser, certify_closed, replicate_cases, oracle, grid };

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view name);

inline constexpr double kMoserThreshold = 0.232239;
inline constexpr double kClosedThreshold = 0.0879873;
inline constexpr std::uint64_t kDefaultSeed = 20100401;
inline constexpr const char* kOutputDirEnv = "COVERBOUND_OUTPUT_DIR";

struct RunConfig {
  Command command = Command::certify_moser;
  std::optional<double> threshold;  // defaults per command
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = 100'000;
  std::uint64_t hull_trials = 10'000;
  int grid_n = 101;
  std::string output_path;  // empty: per-command default file name
  double b0 = kBroadwormBreadth;
  unsigned workers = 1;
  double min_box_width = 1e-6;
  std::uint64_t max_boxes = 10'000'000;
  BoundMode mode = BoundMode::local_lipschitz;
};

std::string default_output_name(Command c);

// Output file for `cfg`: the configured or default name, placed under
// $COVERBOUND_OUTPUT_DIR when that is set and the name is relative.
std::filesystem::path resolve_output_path(const RunConfig& cfg);

// Exit status: 0 when the certification is proved or the campaigns are
// clean, 1 otherwise (artifacts are still written).
// Throws std::runtime_error when the output file cannot be written.
int run(const RunConfig& cfg, std::ostream& log);

}  // namespace coverbound

#endif  // COVERBOUND_RUN_HPP
