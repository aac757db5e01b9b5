#pragma once

#include <string>
#include <vector>

#include "helixforge/serialize.hpp"

namespace helixforge {

enum class CheckStatus { pass, fail, conjectural, error };

const char* status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status;
  Json details = Json::object();
};

/// Machine-readable run report. Serialization has stable field order and the
/// checks are sorted by name; timing_ms is the only field that varies between
/// identical runs.
struct Report {
  std::string command;
  Json config_echo = Json::object();
  std::vector<CheckResult> checks;
  std::int64_t timing_ms = 0;
  std::string version;

  bool ok() const;  // no fail or error entry; conjectural does not fail a run
  Json to_json() const;
  static Report from_json(const Json& j);
};

}  // namespace helixforge
