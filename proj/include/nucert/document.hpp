#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace nucert {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitSolverFailure = 2,
  kExitCertificationFailure = 3,
};

// Command-line overrides; unset fields fall back to the config file, then to
// the defaults below.
struct RunOptions {
  std::optional<double> tolerance;           // 1e-12
  std::optional<long long> max_iter;         // 100000
  std::optional<long long> denominator_cap;  // 10000
  std::optional<long long> b_cap;            // 100
  std::optional<std::string> epsilon;        // "p/q"
};

struct RunResult {
  int exit_code = kExitOk;
  nlohmann::json document;
};

// Commands: nu-bound, oracle-nu, solve-multiplicities, verify-certificate,
// proper-check, adapted-basis, find-b.
RunResult run(const std::string& command, const nlohmann::json& config, const RunOptions& options = {});

// Parses config text first; malformed JSON yields exit 1 and a message with
// the byte position.
RunResult run_text(const std::string& command, const std::string& config_text, const RunOptions& options = {});

// Stable rendering used for every emitted document.
std::string render(const nlohmann::json& document);

}  // namespace nucert
