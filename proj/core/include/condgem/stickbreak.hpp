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
// Stick-breaking pipelines for the count-conditioned laws: the m = 0 and
// m = 1 shortcuts on the shared ratio walk, the general-m chain, the GEM
// mixture over a random rate, and the alpha = 1/2 chi-square walk.

#ifndef CONDGEM_STICKBREAK_HPP_
#define CONDGEM_STICKBREAK_HPP_

#include <cstdint>
#include <vector>

#include "condgem/param.hpp"
#include "condgem/rng.hpp"

namespace condgem::stickbreak {

// One truncated stick-breaking draw.  Invariants, checked by the verify
// suites rather than here:
//   ptilde[k] = (1 - w[k]) * prod_{i<k} w[i], remainder = prod w[i],
//   sum(ptilde) + remainder = 1 up to accumulated rounding;
//   r[k] < w[k] < 1 (r[0] may be 0 when the rate is 0);
//   lambda_path[j] = lambda_path[j-1] / r[j-1] along the rate chain.
struct StickDraw {
  std::vector<double> w;       // sticks, in (0,1)
  std::vector<double> r;       // ratios, in [0,1)
  std::vector<int> n;          // absorbed counts; empty off the general path
  std::vector<double> ptilde;  // masses of the first n atoms
  double remainder = 0.0;      // mass not yet broken off
  std::vector<double> lambda_path;  // lambda_0 .. lambda_n

  // Generator snapshot at entry: replaying with RngState(seed, stream)
  // advanced to state_in reproduces this draw exactly.
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::uint64_t state_in = 0;
};

struct Masses {
  std::vector<double> ptilde;
  double remainder = 1.0;
};

// Running-product mass assembly; every w must lie strictly in (0,1).
Masses weights_to_masses(const std::vector<double>& w);

// Normalized generalized gamma sticks (count 0): ratio walk plus
// W_k = 1 - Beta(1-alpha, alpha) * (1 - R_k).  lambda >= 0.
StickDraw sticks_m0(double lambda, AlphaParam alpha, int n, RngState& rng);

// Count 1, first size-biased pick absorbed: same ratio walk,
// W_k = [Beta(1-alpha, alpha) * (1-R_k)/R_k + 1]^(-1).  lambda > 0.
StickDraw sticks_m1(double lambda, AlphaParam alpha, int n, RngState& rng);

// General count m >= 1: per stick j draw the absorbed count N_j, the rate
// increment Y, R_j = lambda_{j-1}/(lambda_{j-1}+Y), then
// W_j = [Beta(N_j - alpha, alpha) * (1-R_j)/R_j + 1]^(-1).  lambda > 0.
StickDraw sticks_general(int m, double lambda, AlphaParam alpha, int n,
                         RngState& rng);

// GEM(alpha, theta) via a random rate: lambda = sample_gem_lambda(m, theta)
// then the m-appropriate fixed-rate pipeline.  The output law does not
// depend on m; theta > -alpha, and theta > 0 when m = 0.
StickDraw sticks_gem(AlphaParam alpha, double theta, int m, int n,
                     RngState& rng);

// alpha = 1/2 closed-form walk: one conditioned stable draw sets s^2 =
// 1/(2S), then W_l = (Q_{l-1} + s^2)/(Q_l + s^2) with Q_l cumulative squared
// standard normals; the implied ratio is R_l = W_l^2.  lambda > 0, m >= 0.
StickDraw sticks_half(int m, double lambda, int n, RngState& rng);

// Law description for the dispatcher (mirrors the CLI surface).
struct LawSpec {
  AlphaParam alpha{0.5};
  int m = 0;
  enum class Rate { kFixed, kGem };
  Rate rate = Rate::kFixed;
  double lambda = 1.0;  // used when rate == kFixed
  double theta = 0.0;   // used when rate == kGem
};

enum class Pipeline { kM0, kM1, kGeneral, kGem, kHalf };

// Validates that the pipeline fits the law (m matches, rate kind matches,
// alpha = 1/2 for kHalf, lambda = 0 only on the m = 0 path) and runs it.
StickDraw draw_sticks(Pipeline pipeline, const LawSpec& law, int n,
                      RngState& rng);

}  // namespace condgem::stickbreak

#endif  // CONDGEM_STICKBREAK_HPP_
