#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dunkl/cli/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact solutions of the time-dependent Dunkl oscillator and their numerical verification"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> out_dir;
  for (const auto* name : {"solve-pinney", "eval", "verify", "propagate"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "Run configuration (TOML)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "Output directory (overrides outputs.directory)");
  }
  app.get_subcommand("solve-pinney")->description("Integrate the Ermakov-Pinney equation and write pinney.csv");
  app.get_subcommand("eval")->description("Evaluate the exact states and write state CSVs and eigenvalues.json");
  app.get_subcommand("verify")->description("Run the numerical verification roster and write verify.json");
  app.get_subcommand("propagate")->description("Crank-Nicolson propagation with fidelity tracking (fidelity.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dunkl::cli::kConfigError;
  }
  const auto* chosen = app.get_subcommands().front();
  return dunkl::cli::run_command(chosen->get_name(), config_path, out_dir, std::cerr);
}
