#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "helixforge/commands.hpp"
#include "helixforge/version.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw CLI::ValidationError("--config", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

helixforge::Window parse_window(const std::string& text) {
  auto sep = text.find(':');
  if (sep == std::string::npos)
    throw CLI::ValidationError("--window", "expected lo:hi, got " + text);
  try {
    helixforge::Window w{std::stoll(text.substr(0, sep)), std::stoll(text.substr(sep + 1))};
    if (w.lo > w.hi) throw CLI::ValidationError("--window", "lo must not exceed hi");
    return w;
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--window", "expected lo:hi, got " + text);
  }
}

// which named window --window overrides, per command
const char* principal_window(helixforge::Command cmd) {
  using helixforge::Command;
  switch (cmd) {
    case Command::grid: return "grid";
    case Command::invert: return "triviality";
    case Command::dims: return "dims";
    default: return "helix";
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace helixforge;

  CLI::App app{"helixforge: geometric data of birational transformations between "
               "noncommutative P^2 and P^1 x P^1"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  struct Options {
    std::string config_path;
    std::string out_path;
    std::string window_text;
    std::int64_t seed = -1;
  };
  std::map<std::string, Options> opts;

  for (Command c : {Command::verify_helix, Command::blowup, Command::blowdown, Command::cremona,
                    Command::invert, Command::roundtrip, Command::dims, Command::grid,
                    Command::ibasis_check}) {
    std::string name = command_name(c);
    CLI::App* sub = app.add_subcommand(name, "");
    Options& o = opts[name];
    sub->add_option("--config", o.config_path, "config file (JSON)")->required();
    sub->add_option("--out", o.out_path, "write the report to this file");
    sub->add_option("--window", o.window_text, "override the command's main window, as lo:hi");
    sub->add_option("--seed", o.seed, "override the config seed");
  }

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  Command cmd = *command_from_name(sub->get_name());
  const Options& o = opts[sub->get_name()];

  RunConfig cfg = [&] {
    try {
      RunConfig parsed = parse_config(read_file(o.config_path), cmd);
      if (!o.window_text.empty())
        parsed.windows[principal_window(cmd)] = parse_window(o.window_text);
      if (o.seed >= 0) parsed.seed = static_cast<std::uint64_t>(o.seed);
      return parsed;
    } catch (const Error& e) {
      std::cerr << "config: " << e.what() << "\n";
      std::exit(2);
    } catch (const CLI::Error& e) {
      std::cerr << e.get_name() << ": " << e.what() << "\n";
      std::exit(2);
    }
  }();

  Report rep = run_command(cmd, cfg);
  std::string text = rep.to_json().dump(2);

  if (!o.out_path.empty()) {
    std::ofstream out(o.out_path);
    if (!out.good()) {
      std::cerr << "cannot write " << o.out_path << "\n";
      return 2;
    }
    out << text << "\n";
  } else {
    std::cout << text << "\n";
  }

  return rep.ok() ? 0 : 1;
}
