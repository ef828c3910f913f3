#pragma once

// Manifest-driven verification suites. Expected values live in the embedded
// checks manifest; each check id maps to a routine that produces the computed
// string. A check passes iff the two strings are equal.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fgcert {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string id;
  std::string paper_ref;
  CheckStatus status = CheckStatus::skipped;
  std::string expected;
  std::string computed;
  std::int64_t elapsed_millis = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Record wall-clock times; off by default so reports are reproducible.
  bool timing = false;
};

struct Report {
  std::string tool_version;
  std::string timestamp;
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::fail) == 0; }
};

/// section2, largeness, magnus, congruence, affine, properties, all.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
Report run_suite(const std::string& suite, const VerifyOptions& options = {});

/// The parsed embedded manifest.
const nlohmann::json& checks_manifest();

/// SOURCE_DATE_EPOCH as an ISO-8601 UTC string, or the Unix epoch when unset.
std::string report_timestamp();

nlohmann::ordered_json to_json(const Report& report);
std::string to_text(const Report& report);
const char* to_string(CheckStatus s);

}  // namespace fgcert
