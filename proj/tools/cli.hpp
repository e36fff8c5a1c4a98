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

#ifndef CONDGEM_TOOLS_CLI_HPP_
#define CONDGEM_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace condgem::cli {

// Parsed command line.  The seed default is the documented constant 42 on
// stream 0; output is reproducible byte for byte across runs.
struct CliConfig {
  std::string command;  // sample | pmf | density | verify

  double alpha = 0.5;
  double theta = 0.5;
  std::optional<int> m;  // m0/m1 laws pin it; general requires it
  double lambda = 1.0;
  std::string law = "m0";
  int n_sticks = 10;
  long draws = 1;
  std::uint64_t seed = 42;
  std::uint64_t stream = 0;
  std::string format = "csv";  // csv | json-lines
  std::string output;          // empty = stdout

  std::string which;  // pmf/density family selector
  int k = 1;          // subset block count for y / r1m densities
  double r = 0.5;     // conditioning ratio for n-cond / w-cond

  double grid_min = 0.01;
  double grid_max = 10.0;
  int grid_points = 200;
  bool log_grid = false;

  std::string suite = "all";
  double level = 1e-3;
  long verify_draws = 100000;
  std::optional<double> v_alpha;  // verify grid narrowing, unset = full grid
  std::optional<double> v_lambda;
  std::optional<double> v_theta;
  std::optional<int> v_m;
};

// Runs a parsed config, writing records to `os` and diagnostics to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric or
// I/O error.
int run(const CliConfig& config, std::ostream& os);

}  // namespace condgem::cli

#endif  // CONDGEM_TOOLS_CLI_HPP_
