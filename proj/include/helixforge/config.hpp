#pragma once

#include <map>
#include <optional>
#include <string>

#include "helixforge/serialize.hpp"

namespace helixforge {

enum class Command {
  verify_helix,
  blowup,
  blowdown,
  cremona,
  invert,
  roundtrip,
  dims,
  grid,
  ibasis_check,
};

const char* command_name(Command c);
std::optional<Command> command_from_name(std::string_view name);

struct RunConfig {
  GroupDescriptor group;
  GeometrySpec geometry;
  std::map<std::string, GroupElement> points;
  std::map<std::string, Window> windows;  // helix, grid, triviality, dims
  std::uint64_t seed = 0;
  std::int64_t enumeration_cap = kDefaultEnumerationCap;
  std::int64_t degree_cap = 60;

  bool is_quadratic() const { return std::holds_alternative<QuadraticHelixSpec>(geometry); }
  const QuadraticHelixSpec& quadratic() const { return std::get<QuadraticHelixSpec>(geometry); }
  const CubicHelixSpec& cubic() const { return std::get<CubicHelixSpec>(geometry); }

  Window window(const std::string& name) const;
  const GroupElement& point(const std::string& name) const;

  Json to_json() const;
};

/// Parses and eagerly validates a config document. When a command is given,
/// its point requirements and transform invariants are checked as well; every
/// diagnostic names the violated rule and the config path it applies to.
RunConfig parse_config(const std::string& text, std::optional<Command> cmd = std::nullopt);

}  // namespace helixforge
