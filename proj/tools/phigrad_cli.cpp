#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "phigrad/config.hpp"
#include "phigrad/reports.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Gradient-estimate and Liouville-type analysis for generalized "
               "phi-Laplacian equations"};
  app.require_subcommand(1);

  struct Args {
    std::string config;
    phigrad::ReportOptions opts;
  };
  Args args;

  for (const char* name : {"analyze", "verdict", "scan", "verify", "constants"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", args.config, "run configuration file")->required();
    sub->add_option("--csv", args.opts.csv_path, "CSV output path");
    sub->add_option("--svg", args.opts.svg_path, "SVG output path (scan only)");
    sub->add_option("--precision", args.opts.precision, "significant digits [6, 17]")
        ->check(CLI::Range(6, 17));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : phigrad::kExitConfig;
  }

  phigrad::RunConfig cfg;
  try {
    cfg = phigrad::load_config(args.config);
  } catch (const phigrad::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return phigrad::kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  return phigrad::run_command(command, cfg, std::cout, std::cerr, args.opts);
}
