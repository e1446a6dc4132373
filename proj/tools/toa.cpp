#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "toa/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Moyal time-of-arrival engine"};
  app.require_subcommand(1);
  std::string config_path;
  toa::cli::CommandOptions options;
  for (const char* name : {"series", "verify", "expectation", "quartic", "kernel"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_flag("--strict", options.strict, "treat flagged rows as failures");
    sub->add_option("--out", options.out, "output path (overrides the config)");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : toa::cli::kExitConfigError;
  }
  try {
    return toa::cli::run_command(app.get_subcommands().front()->get_name(), config_path, options);
  } catch (const std::exception& e) {
    std::cerr << "toa: " << e.what() << "\n";
    return toa::cli::kExitVerificationFailure;
  }
}
