// Copyright 2026 The Quantal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end for the experiment runner.
//
//   quantal generate     --config cfg.json --out games/
//   quantal solve        --config cfg.json --out results/ --workers 4
//   quantal sweep-lambda --config cfg.json
//   quantal p-profile    --config cfg.json
//   quantal validate     games/ more.json

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quantal/experiment.h"

namespace {

struct Flags {
  std::string config;
  std::optional<std::string> out;
  std::optional<int> workers;
  std::optional<std::uint64_t> seed;
};

void AddCommon(CLI::App* cmd, Flags* flags) {
  cmd->add_option("--config", flags->config, "experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", flags->out, "output directory");
  cmd->add_option("--workers", flags->workers, "parallel jobs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", flags->seed, "base seed for randomized solvers");
}

quantal::ExperimentConfig Load(const Flags& flags) {
  quantal::ExperimentConfig c =
      quantal::ExperimentConfig::FromJson(quantal::ReadJsonFile(flags.config));
  if (flags.out) c.out_dir = *flags.out;
  if (flags.workers) c.workers = *flags.workers;
  if (flags.seed) c.seed = *flags.seed;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers and experiments for games against quantal opponents"};
  app.require_subcommand(1);

  Flags flags;
  auto* generate = app.add_subcommand("generate", "write game JSON files");
  auto* solve = app.add_subcommand("solve", "run algorithms, write results.csv");
  auto* sweep = app.add_subcommand(
      "sweep-lambda", "evaluate solutions over lambdas, write sweep_lambda.csv");
  auto* profile = app.add_subcommand(
      "p-profile", "COMB and fixed-p RQR over p_grid, write p_profile.csv");
  for (CLI::App* cmd : {generate, solve, sweep, profile}) AddCommon(cmd, &flags);

  std::vector<std::string> files;
  auto* validate = app.add_subcommand("validate", "check game JSON files");
  validate->add_option("files", files, "game files or directories")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      const auto failures = quantal::CmdValidate(files);
      for (const auto& f : failures) std::cerr << f << '\n';
      if (!failures.empty()) return 1;
      std::cout << "ok\n";
      return 0;
    }
    const quantal::ExperimentConfig config = Load(flags);
    if (*generate) {
      const auto paths = quantal::CmdGenerate(config);
      std::cout << "wrote " << paths.size() << " games to " << config.out_dir
                << '\n';
    } else if (*solve) {
      const auto rows = quantal::CmdSolve(config);
      std::cout << "wrote " << rows.size() << " rows to " << config.out_dir
                << "/results.csv\n";
    } else if (*sweep) {
      const auto rows = quantal::CmdSweepLambda(config);
      std::cout << "wrote " << rows.size() << " rows to " << config.out_dir
                << "/sweep_lambda.csv\n";
    } else if (*profile) {
      const auto rows = quantal::CmdPProfile(config);
      std::cout << "wrote " << rows.size() << " rows to " << config.out_dir
                << "/p_profile.csv\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
