#pragma once

// Command-line front end. Every command writes to the given stream and
// returns an exit code: 0 success, 1 verification failure, 2 usage or input
// error.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "rhp/enumeration.hpp"
#include "rhp/identities.hpp"
#include "rhp/involution.hpp"

namespace rhp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { Json, Dot, Count };

struct RunConfig {
  std::uint64_t seed = 1;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t step_bound = kDefaultStepBound;
  std::filesystem::path output_dir;
  OutputFormat format = OutputFormat::Json;
};

// Defaults, with RHP_STEP_BOUND applied when set.
RunConfig default_run_config();

// {"dim": d, "entries": [[...], ...]}; entries are integers or decimal strings.
IntMatrix matrix_from_json(const nlohmann::json& j);
IntMatrix read_matrix_file(const std::string& path);

// Both sides of the identity for k, or for every k when k is empty.
int cmd_verify_dm(const IntMatrix& m, std::optional<int> k, std::ostream& out);
// Seeded random integer matrices of size dim, entries in [-9, 9].
int cmd_verify_dm_random(int dim, std::optional<int> k, int trials, std::uint64_t seed, std::ostream& out);
IntMatrix random_matrix(int dim, std::uint64_t seed);

int cmd_bijection(const ForestTuple& tuple, bool forward, bool emit_trace, const RunConfig& config,
                  std::ostream& out);
// which: S0, S1, S2, S3 or forbidden.
int cmd_enumerate(int n, int k, const std::string& which, bool count_only, const RunConfig& config,
                  std::ostream& out);
int cmd_verify_all(int n, int k, const RunConfig& config, std::ostream& out);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rhp
