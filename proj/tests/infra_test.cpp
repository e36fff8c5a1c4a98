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

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "condgem/io.hpp"
#include "condgem/logspace.hpp"
#include "condgem/quadrature.hpp"
#include "condgem/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace {

using condgem::RngState;
using condgem::testutil::rel_err;
namespace qd = condgem;

}  // namespace

TEST_SUITE("infra") {

TEST_CASE("rng determinism and stream separation") {
  RngState a(1234, 0), b(1234, 0), c(1234, 1), d(99, 0);
  bool c_differs = false, d_differs = false;
  for (int i = 0; i < 32; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    c_differs = c_differs || (x != c.next_u64());
    d_differs = d_differs || (x != d.next_u64());
  }
  CHECK(c_differs);
  CHECK(d_differs);
  CHECK(a.seed() == 1234);
  CHECK(c.stream() == 1);
}

TEST_CASE("rng state snapshot round trip") {
  RngState rng(7, 3);
  for (int i = 0; i < 17; ++i) rng.uniform();
  const auto snap = rng.state();
  std::vector<double> first;
  for (int i = 0; i < 10; ++i) first.push_back(rng.gamma(2.5));
  rng.restore(snap);
  for (int i = 0; i < 10; ++i) CHECK(first[i] == rng.gamma(2.5));
}

TEST_CASE("rng variates land in range with sane moments") {
  RngState rng(42, 60);
  const int n = 100000;
  double su = 0.0, se = 0.0, sn = 0.0, sn2 = 0.0, sg = 0.0, sb = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    su += u;
    se += rng.exponential();
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
    sg += rng.gamma(3.0);
    const double bd = rng.beta(2.0, 5.0);
    CHECK(bd > 0.0);
    CHECK(bd < 1.0);
    sb += bd;
  }
  // 4.5 sigma bands.
  CHECK(std::fabs(su / n - 0.5) < 4.5 * std::sqrt(1.0 / 12.0 / n));
  CHECK(std::fabs(se / n - 1.0) < 4.5 / std::sqrt(n));
  CHECK(std::fabs(sn / n) < 4.5 / std::sqrt(n));
  CHECK(std::fabs(sn2 / n - 1.0) < 4.5 * std::sqrt(2.0 / n));
  CHECK(std::fabs(sg / n - 3.0) < 4.5 * std::sqrt(3.0 / n));
  CHECK(std::fabs(sb / n - 2.0 / 7.0) <
        4.5 * std::sqrt((2.0 / 7.0) * (5.0 / 7.0) / 8.0 / n));
}

TEST_CASE("adaptive quadrature") {
  const auto s = qd::integrate([](double x) { return std::sin(x); }, 0.0,
                               M_PI, 1e-12);
  CHECK(s.converged);
  CHECK(rel_err(s.value, 2.0) < 1e-12);

  const auto e = qd::integrate([](double x) { return std::exp(-x); }, 0.0,
                               100.0, 1e-10);
  CHECK(e.converged);
  CHECK(rel_err(e.value, 1.0) < 1e-10);

  const auto seg = qd::integrate_segments(
      [](double x) { return 1.0 / (1.0 + x * x); }, {-100.0, 0.0, 100.0},
      1e-10);
  CHECK(rel_err(seg.value, M_PI - 2.0 * std::atan(1.0 / 100.0)) < 1e-9);
}

TEST_CASE("log-space quadrature and mass bracketing") {
  const auto lg = qd::log_integrate(
      [](double x) { return -0.5 * x * x - 0.5 * std::log(2.0 * M_PI); },
      -10.0, 10.0, 1e-11);
  CHECK(lg.converged);
  CHECK(std::fabs(lg.log_value) < 1e-10);

  // Window around a gamma(3) density must capture essentially all mass.
  const auto g3 = [](double x) {
    return 2.0 * std::log(x) - x - std::lgamma(3.0);
  };
  const auto [lo, hi] = qd::bracket_log_mass(g3, 1.0);
  CHECK(lo > 0.0);
  CHECK(lo < 2.0);
  CHECK(hi > 2.0);
  const auto mass = qd::log_integrate(g3, lo, hi, 1e-11);
  CHECK(mass.converged);
  CHECK(std::fabs(mass.log_value) < 1e-9);
}

TEST_CASE("log-space arithmetic") {
  using condgem::kNegInf;
  using condgem::log_add;
  using condgem::log_sum_exp;
  CHECK(rel_err(log_add(std::log(2.0), std::log(3.0)), std::log(5.0)) <
        1e-14);
  CHECK(log_add(kNegInf, std::log(3.0)) == std::log(3.0));
  CHECK(log_add(kNegInf, kNegInf) == kNegInf);
  CHECK(rel_err(log_sum_exp({std::log(1.0), std::log(2.0), std::log(3.0)}),
                std::log(6.0)) < 1e-14);
  CHECK(log_sum_exp({kNegInf, kNegInf}) == kNegInf);
  CHECK(rel_err(log_sum_exp({1000.0, 1000.0}), 1000.0 + std::log(2.0)) <
        1e-14);
}

TEST_CASE("shortest round-trip double formatting") {
  using condgem::io::format_double;
  for (double v : {1.0 / 3.0, 0.1, 1e-300, 6.02e23, 0.5, -0.0, 12345.6789}) {
    const std::string s = format_double(v);
    const double back = std::strtod(s.c_str(), nullptr);
    CHECK(back == v);
    CHECK(format_double(back) == s);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("json and csv field encoding") {
  using condgem::io::csv_field;
  using condgem::io::json_number;
  CHECK(json_number(std::nan("")) == "null");
  CHECK(json_number(std::numeric_limits<double>::infinity()) == "null");
  CHECK(json_number(0.25) == "0.25");
  CHECK(csv_field("plain") == "plain");
  const std::string quoted = csv_field("a,b");
  CHECK(quoted.front() == '"');
  CHECK(quoted.back() == '"');
}

}  // TEST_SUITE
