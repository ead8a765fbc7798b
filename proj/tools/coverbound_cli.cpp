// coverbound: certify the hull-area lower bounds, replicate the case split,
// run the randomized inequality campaigns and export bound grids.

#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "coverbound/run.hpp"

namespace {

constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
  using coverbound::Command;

  CLI::App app{"Certified lower bounds for convex universal covers"};
  app.require_subcommand(1);

  coverbound::RunConfig cfg;
  std::string mode = "local";
  double threshold = 0.0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output_path,
                    "Output file (relative paths go under $" +
                        std::string(coverbound::kOutputDirEnv) + " if set)");
    sub->add_option("--workers", cfg.workers, "Worker threads")
        ->check(CLI::Range(1u, 256u));
    sub->add_option("--b0", cfg.b0, "Broadworm breadth")
        ->check(CLI::PositiveNumber);
  };
  const auto add_certify = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--threshold", threshold, "Threshold to certify");
    sub->add_option("--min-box-width", cfg.min_box_width,
                    "Smallest box width that may still be bisected")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-boxes", cfg.max_boxes, "Box budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--bound-mode", mode, "Per-box bound: local or global")
        ->check(CLI::IsMember({"local", "global"}));
  };

  std::map<CLI::App*, Command> commands;
  auto* moser = app.add_subcommand(
      "certify-moser", "Certify F >= threshold on the canonical domain");
  add_certify(moser);
  commands[moser] = Command::certify_moser;

  auto* closed = app.add_subcommand(
      "certify-closed", "Certify G >= threshold on [pi/4, pi/2]");
  add_certify(closed);
  commands[closed] = Command::certify_closed;

  auto* cases = app.add_subcommand(
      "replicate-cases", "Check the four-way case split of the F bound");
  add_common(cases);
  cases->add_option("--min-box-width", cfg.min_box_width)
      ->check(CLI::PositiveNumber);
  cases->add_option("--max-boxes", cfg.max_boxes)->check(CLI::PositiveNumber);
  commands[cases] = Command::replicate_cases;

  auto* oracle = app.add_subcommand(
      "oracle", "Randomized inequality and hull-oracle campaigns");
  add_common(oracle);
  oracle->add_option("--seed", cfg.seed, "Campaign seed");
  oracle->add_option("--trials", cfg.trials, "Trials per inequality campaign")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--hull-trials", cfg.hull_trials,
                     "Trials for the hull oracle comparison")
      ->check(CLI::PositiveNumber);
  commands[oracle] = Command::oracle;

  auto* grid = app.add_subcommand("grid", "Export p, q, f, g, F on a grid");
  add_common(grid);
  grid->add_option("--n", cfg.grid_n, "Grid points per axis")
      ->check(CLI::Range(2, 100000));
  commands[grid] = Command::grid;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) cfg.command = command;
  }
  if (cfg.command == Command::certify_moser ||
      cfg.command == Command::certify_closed) {
    const auto* sub = cfg.command == Command::certify_moser ? moser : closed;
    if (sub->count("--threshold") > 0) cfg.threshold = threshold;
  }
  cfg.mode = *coverbound::parse_bound_mode(mode);

  try {
    return coverbound::run(cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
