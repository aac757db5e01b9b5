#include "helixforge/config.hpp"

#include "helixforge/transforms.hpp"

namespace helixforge {

namespace {

const std::map<std::string, Window>& default_windows() {
  static const std::map<std::string, Window> defaults = {
      {"helix", {-10, 10}},
      {"grid", {-4, 8}},
      {"triviality", {-10, 10}},
      {"dims", {0, 200}},
  };
  return defaults;
}

[[noreturn]] void config_fail(const std::string& path, const std::string& msg) {
  raise(Errc::config_error, "at " + path + ": " + msg);
}

Window window_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    config_fail(path, "window must be a two-element integer array [lo, hi]");
  Window w{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
  if (w.lo > w.hi) config_fail(path, "window bounds must satisfy lo <= hi");
  return w;
}

void check_transform_rules(const RunConfig& cfg, Command cmd) {
  auto need_point = [&](const char* name) -> const GroupElement& {
    auto it = cfg.points.find(name);
    if (it == cfg.points.end())
      config_fail("/points", std::string("command '") + command_name(cmd) + "' requires point '" +
                                 name + "'");
    return it->second;
  };

  switch (cmd) {
    case Command::blowup:
    case Command::cremona: {
      if (!cfg.is_quadratic())
        config_fail("/geometry", std::string("command '") + command_name(cmd) +
                                     "' requires quadratic geometry");
      const GroupElement& p = need_point("p");
      const GroupElement& q = need_point("q");
      if (cmd == Command::cremona) {
        const GroupElement& r = need_point("r");
        for (const auto& rule : validate(CremonaSpec{cfg.quadratic(), p, q, r}))
          config_fail("/points", rule);
      } else {
        for (const auto& rule : validate(BlowUpSpec{cfg.quadratic(), p, q}))
          config_fail("/points", rule);
      }
      break;
    }
    case Command::blowdown: {
      if (cfg.is_quadratic())
        config_fail("/geometry", "command 'blowdown' requires cubic geometry");
      const GroupElement& p = need_point("p");
      for (const auto& rule : validate(BlowDownSpec{cfg.cubic(), p})) config_fail("/points", rule);
      break;
    }
    case Command::invert:
    case Command::roundtrip: {
      if (cfg.is_quadratic()) {
        need_point("p");
        need_point("q");
      } else {
        need_point("p");
      }
      break;
    }
    case Command::verify_helix:
    case Command::dims:
    case Command::grid:
    case Command::ibasis_check:
      break;
  }
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::verify_helix: return "verify-helix";
    case Command::blowup: return "blowup";
    case Command::blowdown: return "blowdown";
    case Command::cremona: return "cremona";
    case Command::invert: return "invert";
    case Command::roundtrip: return "roundtrip";
    case Command::dims: return "dims";
    case Command::grid: return "grid";
    case Command::ibasis_check: return "ibasis-check";
  }
  return "unknown";
}

std::optional<Command> command_from_name(std::string_view name) {
  for (Command c : {Command::verify_helix, Command::blowup, Command::blowdown, Command::cremona,
                    Command::invert, Command::roundtrip, Command::dims, Command::grid,
                    Command::ibasis_check})
    if (name == command_name(c)) return c;
  return std::nullopt;
}

Window RunConfig::window(const std::string& name) const {
  auto it = windows.find(name);
  if (it != windows.end()) return it->second;
  auto dit = default_windows().find(name);
  if (dit != default_windows().end()) return dit->second;
  return Window{};
}

const GroupElement& RunConfig::point(const std::string& name) const {
  auto it = points.find(name);
  if (it == points.end()) raise(Errc::config_error, "config has no point named '" + name + "'");
  return it->second;
}

Json RunConfig::to_json() const {
  Json j;
  j["group"] = helixforge::to_json(group);
  j["geometry"] = helixforge::to_json(geometry);
  Json pts = Json::object();
  for (const auto& [name, g] : points) pts[name] = helixforge::to_json(g);
  j["points"] = pts;
  Json wins = Json::object();
  for (const auto& [name, w] : windows) wins[name] = Json::array({w.lo, w.hi});
  j["windows"] = wins;
  j["seed"] = seed;
  j["caps"] = Json{{"enumeration", enumeration_cap}, {"degree", degree_cap}};
  return j;
}

RunConfig parse_config(const std::string& text, std::optional<Command> cmd) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(Errc::config_error, std::string("config is not well-formed JSON: ") + e.what());
  }
  if (!doc.is_object()) raise(Errc::config_error, "config root must be a JSON object");
  if (!doc.contains("group")) config_fail("/group", "missing group descriptor");

  GroupDescriptor group = [&] {
    try {
      return descriptor_from_json(doc["group"]);
    } catch (const Error& e) {
      config_fail("/group", e.what());
    }
  }();

  if (!doc.contains("geometry")) config_fail("/geometry", "missing geometry");
  GeometrySpec geometry = [&] {
    try {
      return geometry_from_json(doc["geometry"], group);
    } catch (const Error& e) {
      config_fail("/geometry", e.what());
    }
  }();
  std::visit(
      [&](const auto& spec) {
        for (const auto& rule : validate(spec)) config_fail("/geometry", rule);
      },
      geometry);

  RunConfig cfg{group, std::move(geometry), {}, {}, 0, kDefaultEnumerationCap, 60};

  if (doc.contains("points")) {
    if (!doc["points"].is_object()) config_fail("/points", "points must be an object");
    for (const auto& [name, val] : doc["points"].items()) {
      try {
        cfg.points.emplace(name, element_from_json(val, group));
      } catch (const Error& e) {
        config_fail("/points/" + name, e.what());
      }
    }
  }

  if (doc.contains("windows")) {
    if (!doc["windows"].is_object()) config_fail("/windows", "windows must be an object");
    for (const auto& [name, val] : doc["windows"].items())
      cfg.windows.emplace(name, window_from_json(val, "/windows/" + name));
  }

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
      config_fail("/seed", "seed must be an integer");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }

  if (doc.contains("caps")) {
    const Json& caps = doc["caps"];
    if (!caps.is_object()) config_fail("/caps", "caps must be an object");
    if (caps.contains("enumeration")) {
      cfg.enumeration_cap = caps["enumeration"].get<std::int64_t>();
      if (cfg.enumeration_cap < 1) config_fail("/caps/enumeration", "cap must be >= 1");
    }
    if (caps.contains("degree")) {
      cfg.degree_cap = caps["degree"].get<std::int64_t>();
      if (cfg.degree_cap < 0) config_fail("/caps/degree", "cap must be >= 0");
    }
  }

  if (cmd) check_transform_rules(cfg, *cmd);
  return cfg;
}

}  // namespace helixforge
