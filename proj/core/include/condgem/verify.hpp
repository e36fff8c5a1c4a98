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
//
// Statistical verification harness: hypothesis-test primitives, cached
// quadrature cdfs for one-sample comparisons, and the named suites that
// exercise the samplers against the deterministic kernel.

#ifndef CONDGEM_VERIFY_HPP_
#define CONDGEM_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "condgem/param.hpp"
#include "condgem/rng.hpp"
#include "condgem/specfun.hpp"

namespace condgem::verify {

// Outcome of one check.  For statistical tests `passed` is decided on the
// statistic-vs-threshold comparison and p_value is reported alongside; for
// deterministic checks p_value is NaN.
struct TestReport {
  std::string suite;
  double statistic = 0.0;
  double threshold = 0.0;
  double p_value = 0.0;
  long draws = 0;
  std::uint64_t seed = 0;
  bool passed = false;
  std::string detail;
};

std::string to_json_line(const TestReport& r);
std::string csv_header();
std::string to_csv_row(const TestReport& r);
bool all_passed(const std::vector<TestReport>& reports);

// Two-sided Kolmogorov asymptotic tail Q(x) = 2 sum (-1)^(j-1) e^(-2 j^2 x^2).
double kolmogorov_q(double x);

// Two-sample Kolmogorov-Smirnov at significance `level` (asymptotic
// critical value).  Fills statistic/threshold/p_value/draws/passed.
TestReport ks_two_sample(std::vector<double> a, std::vector<double> b,
                         double level);

// One-sample KS of `a` against a cdf callback.
TestReport ks_one_sample(std::vector<double> a,
                         const std::function<double(double)>& cdf,
                         double level);

// Pearson chi-square of counts over {1..size} against a PmfTable; adjacent
// cells are pooled left to right until each expected count reaches 5.
TestReport chi_square_pmf(const std::vector<long>& counts,
                          const specfun::PmfTable& pmf, double level);

// z-test of the sample mean against `target`; threshold is in sigmas.
TestReport moment_check(const std::vector<double>& draws, double target,
                        double level_sigmas);

// Two-sided z threshold equivalent to a given significance level.
double sigmas_for_level(double level);

// Piecewise-linear cdf built from quadrature panel masses of exp(log_pdf),
// normalized over [lo, hi]; evaluation clamps to [0, 1] outside the window.
class CdfGrid {
 public:
  CdfGrid(std::vector<double> x, std::vector<double> cdf);
  double operator()(double v) const;

  static CdfGrid from_log_pdf(const std::function<double(double)>& log_pdf,
                              double lo, double hi, int cells,
                              bool log_spacing);

 private:
  std::vector<double> x_;
  std::vector<double> cdf_;
};

// Per-thread cache keyed by a caller-composed string (density id plus
// parameters); building quadrature cdfs is the dominant suite cost.
const CdfGrid& cached_cdf(const std::string& key,
                          const std::function<CdfGrid()>& build);

// Suite configuration.  Unset optionals mean "run the built-in parameter
// grid"; set ones collapse the grid to the given point.  `level` is the
// family-wise significance of the whole suite: each of its T statistical
// tests runs at level/T.
struct SuiteConfig {
  long draws = 100000;
  double level = 1e-3;
  std::optional<double> alpha;
  std::optional<double> lambda;
  std::optional<double> theta;
  std::optional<int> m;
};

// Suites: normalization, stirling, moments, transfer, gem, binomial, half,
// pipelines.  Unknown names throw DomainError.
std::vector<std::string> suite_names();
std::vector<TestReport> run_suite(const std::string& name,
                                  const SuiteConfig& config, RngState& rng);

}  // namespace condgem::verify

#endif  // CONDGEM_VERIFY_HPP_
