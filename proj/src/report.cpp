#include "helixforge/report.hpp"

#include <algorithm>

namespace helixforge {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::conjectural: return "conjectural";
    case CheckStatus::error: return "error";
  }
  return "unknown";
}

namespace {

CheckStatus status_from_name(const std::string& name) {
  for (CheckStatus s :
       {CheckStatus::pass, CheckStatus::fail, CheckStatus::conjectural, CheckStatus::error})
    if (name == status_name(s)) return s;
  raise(Errc::config_error, "unknown check status '" + name + "'");
}

}  // namespace

bool Report::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::fail || c.status == CheckStatus::error;
  });
}

Json Report::to_json() const {
  std::vector<const CheckResult*> sorted;
  sorted.reserve(checks.size());
  for (const auto& c : checks) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckResult* a, const CheckResult* b) { return a->name < b->name; });

  Json j;
  j["command"] = command;
  j["config"] = config_echo;
  Json arr = Json::array();
  for (const CheckResult* c : sorted) {
    Json e;
    e["name"] = c->name;
    e["status"] = status_name(c->status);
    e["details"] = c->details;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["timing_ms"] = timing_ms;
  j["version"] = version;
  return j;
}

Report Report::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("command") || !j.contains("config") ||
      !j.contains("checks") || !j.contains("timing_ms") || !j.contains("version"))
    raise(Errc::config_error, "report is missing required fields");
  Report rep;
  rep.command = j["command"].get<std::string>();
  rep.config_echo = j["config"];
  for (const Json& e : j["checks"]) {
    if (!e.contains("name") || !e.contains("status") || !e.contains("details"))
      raise(Errc::config_error, "report check entry is missing required fields");
    rep.checks.push_back(
        {e["name"].get<std::string>(), status_from_name(e["status"].get<std::string>()),
         e["details"]});
  }
  rep.timing_ms = j["timing_ms"].get<std::int64_t>();
  rep.version = j["version"].get<std::string>();
  return rep;
}

}  // namespace helixforge
