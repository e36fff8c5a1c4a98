// Copyright 2026 The condgem Authors
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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

void add_format_flags(CLI::App* sub, condgem::cli::CliConfig* cfg) {
  sub->add_option("--format", cfg->format, "Output format")
      ->check(CLI::IsMember({"csv", "json-lines"}))
      ->capture_default_str();
  sub->add_option("--output", cfg->output, "Output file (default stdout)");
}

void add_rng_flags(CLI::App* sub, condgem::cli::CliConfig* cfg) {
  sub->add_option("--seed", cfg->seed, "Generator seed")->capture_default_str();
  sub->add_option("--stream", cfg->stream, "Generator stream")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"condgem: stick-breaking weights of Pitman-Yor processes "
               "conditioned on a mixed-Poisson species count"};
  app.require_subcommand(1);
  condgem::cli::CliConfig cfg;

  CLI::App* sample = app.add_subcommand("sample", "Draw stick-breaking weights");
  sample->add_option("--alpha", cfg.alpha, "Stability index in (0,1)")
      ->capture_default_str();
  sample->add_option("--theta", cfg.theta, "Pitman-Yor theta (gem law)")
      ->capture_default_str();
  sample->add_option("--m", cfg.m, "Conditioned species count");
  sample->add_option("--lambda", cfg.lambda, "Fixed rate (fixed-rate laws)")
      ->capture_default_str();
  sample->add_option("--law", cfg.law, "Sampling law")
      ->check(CLI::IsMember({"m0", "m1", "general", "gem", "half"}))
      ->capture_default_str();
  sample->add_option("--n-sticks", cfg.n_sticks, "Sticks per draw")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sample->add_option("--draws", cfg.draws, "Number of draws")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_rng_flags(sample, &cfg);
  add_format_flags(sample, &cfg);

  CLI::App* pmf = app.add_subcommand("pmf", "Tabulate a block-count pmf");
  pmf->add_option("--which", cfg.which, "Pmf family")
      ->required()
      ->check(CLI::IsMember({"blocks", "blocks-cond", "n-marginal", "n-cond"}));
  pmf->add_option("--alpha", cfg.alpha, "Stability index in (0,1)")
      ->capture_default_str();
  pmf->add_option("--m", cfg.m, "Sample size / species count");
  pmf->add_option("--lambda", cfg.lambda, "Rate for conditional pmfs")
      ->capture_default_str();
  pmf->add_option("--r", cfg.r, "Conditioning ratio for n-cond")
      ->capture_default_str();
  add_format_flags(pmf, &cfg);

  CLI::App* density = app.add_subcommand("density", "Tabulate a density");
  density->add_option("--which", cfg.which, "Density family")
      ->required()
      ->check(CLI::IsMember(
          {"stable", "cond-stable", "y", "r1m", "w-cond", "gem-lambda"}));
  density->add_option("--alpha", cfg.alpha, "Stability index in (0,1)")
      ->capture_default_str();
  density->add_option("--theta", cfg.theta, "Pitman-Yor theta (gem-lambda)")
      ->capture_default_str();
  density->add_option("--m", cfg.m, "Species count / tilt order");
  density->add_option("--k", cfg.k, "Subset block count for y and r1m")
      ->capture_default_str();
  density->add_option("--lambda", cfg.lambda, "Rate parameter")
      ->capture_default_str();
  density->add_option("--r", cfg.r, "Conditioning ratio for w-cond")
      ->capture_default_str();
  density->add_option("--grid-min", cfg.grid_min, "Grid lower edge")
      ->capture_default_str();
  density->add_option("--grid-max", cfg.grid_max, "Grid upper edge")
      ->capture_default_str();
  density->add_option("--grid-points", cfg.grid_points, "Grid point count")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  density->add_flag("--log-grid", cfg.log_grid, "Log-spaced grid");
  add_format_flags(density, &cfg);

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", cfg.suite, "Suite name or 'all'")
      ->capture_default_str();
  verify->add_option("--draws", cfg.verify_draws, "Draws per statistical test")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--level", cfg.level, "Family-wise significance per suite")
      ->capture_default_str();
  verify->add_option("--alpha", cfg.v_alpha, "Collapse the alpha grid");
  verify->add_option("--lambda", cfg.v_lambda, "Collapse the lambda grid");
  verify->add_option("--theta", cfg.v_theta, "Collapse the theta grid");
  verify->add_option("--m", cfg.v_m, "Collapse the m grid");
  add_rng_flags(verify, &cfg);
  add_format_flags(verify, &cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.output << '\n';
      return 3;
    }
    os = &file;
  }
  return condgem::cli::run(cfg, *os);
}
