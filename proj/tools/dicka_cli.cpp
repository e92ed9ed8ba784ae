// Copyright 2026 The dicka Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include "CLI11.hpp"
#include "dicka/cli.hpp"

int main(int argc, char** argv) {
  dicka::cli::RunConfig cfg;
  CLI::App app{"Upper bounds on device-independent conference key rates"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file (command-line flags take precedence)");

  app.add_option("--nu-min", cfg.nu_min, "Smallest noise level of the grid")->capture_default_str();
  app.add_option("--nu-max", cfg.nu_max, "Largest noise level of the grid")->capture_default_str();
  app.add_option("--nu-step", cfg.nu_step, "Grid spacing")->capture_default_str();
  app.add_flag("--minimize", cfg.minimize, "Minimise over Eve's channels instead of the fixed guess channel");
  app.add_option("--seed", cfg.seed, "Seed for random instances and the relay")->capture_default_str();
  app.add_option("--out", cfg.output_path, "Output file (default: stdout)");
  app.add_option("--workers", cfg.workers, "Worker threads for grid evaluation")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--nu", cfg.nu, "Noise level for the attack command")->capture_default_str();
  app.add_option("--parties", cfg.parties, "Number of parties")->capture_default_str();
  app.add_option("--key-len", cfg.key_len, "Relay key length in bits")->capture_default_str();
  app.add_option("--extra-outputs", cfg.extra_outputs, "Extra output symbols for channel refinement")
      ->capture_default_str();
  app.add_flag("--symmetrize", cfg.symmetrize, "Minimise S_N over party orderings");
  app.add_flag("--corrupt", cfg.corrupt, "")->group("");  // negative-control hook for verify

  for (const char* name : {"curves", "verify", "game", "attack", "relay", "partitions"}) {
    app.add_subcommand(name, "")->callback([&cfg, name] { cfg.command = name; });
  }
  app.get_subcommand("curves")->description("Write intrinsic, dual, trivial and proxy bound curves as CSV");
  app.get_subcommand("verify")->description("Run the seeded identity suites");
  app.get_subcommand("game")->description("Parity-CHSH values and the critical noise level");
  app.get_subcommand("attack")->description("Attack joint distribution and its bound values at --nu");
  app.get_subcommand("relay")->description("Simulate the XOR key relay along a path");
  app.get_subcommand("partitions")->description("List nontrivial partitions of the parties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dicka::cli::kFailure;
  }
  return dicka::cli::dispatch(cfg, std::cout, std::cerr);
}
