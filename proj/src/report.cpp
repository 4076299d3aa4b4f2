#include "noncomm/report.hpp"

namespace noncomm {

bool VerdictReport::check(const std::string& name, const Json& expected, const Json& computed) {
  const bool pass = expected == computed;
  assertions.push_back({name, expected, computed, pass});
  return pass;
}

bool VerdictReport::passed() const {
  for (const auto& a : assertions)
    if (!a.pass) return false;
  return true;
}

std::string VerdictReport::first_failure() const {
  for (const auto& a : assertions)
    if (!a.pass) return a.name;
  return {};
}

Json VerdictReport::assertions_json() const {
  Json out = Json::array();
  for (const auto& a : assertions)
    out.push_back({{"name", a.name}, {"expected", a.expected}, {"computed", a.computed}, {"pass", a.pass}});
  return out;
}

Json envelope(const Json& config, const VerdictReport& report) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["config"] = config;
  j["verdict"] = report.passed() ? "pass" : "fail";
  j["assertions"] = report.assertions_json();
  j["data"] = report.data;
  return j;
}

}  // namespace noncomm
