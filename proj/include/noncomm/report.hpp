#pragma once

// Verdict reports: a list of named assertions plus free-form data, and the
// JSON envelope every CLI report uses.

#include <string>
#include <vector>

#include "json.hpp"

namespace noncomm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "noncomm";
inline constexpr const char* kToolVersion = "0.1.0";

struct Assertion {
  std::string name;
  Json expected;
  Json computed;
  bool pass = false;
};

struct VerdictReport {
  std::vector<Assertion> assertions;
  Json data = Json::object();

  /// Records expected == computed. Returns the outcome.
  bool check(const std::string& name, const Json& expected, const Json& computed);
  bool check_true(const std::string& name, bool value) { return check(name, true, value); }

  bool passed() const;
  /// Name of the first failing assertion, or empty.
  std::string first_failure() const;
  Json assertions_json() const;
};

/// {"tool","version","config","verdict","assertions","data"}.
Json envelope(const Json& config, const VerdictReport& report);

}  // namespace noncomm
