#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "opcalc/errors.hpp"

int main(int argc, char** argv) {
  using namespace opcalc::cli;

  CLI::App app{"opcalc: operator derivatives, multiple operator integrals and their verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "INI/TOML configuration file ([verify] etc. sections)");
  app.allow_config_extras(CLI::config_extras_mode::error);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Random seed for campaigns")->capture_default_str();
  app.add_option("--out", global.out_dir, "Directory for output files (default: stdout)");
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", global.tolerances, "Tolerance override name=value (repeatable)");

  std::vector<std::pair<CLI::App*, Runner>> commands;
  for (auto add : {add_derive, add_verify, add_besov, add_peller, add_report}) {
    const std::size_t before = app.get_subcommands({}).size();
    Runner run = add(app, global);
    commands.emplace_back(app.get_subcommands({})[before], std::move(run));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    global.validate_tolerances();
    for (auto& [sub, run] : commands) {
      if (sub->parsed()) return run();
    }
    return kUsage;
  } catch (const opcalc::Error& e) {
    std::cerr << "opcalc: error: " << e.what() << '\n';
    return e.kind() == opcalc::ErrorKind::IoError ? kIo : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "opcalc: error: " << e.what() << '\n';
    return kUsage;
  }
}
