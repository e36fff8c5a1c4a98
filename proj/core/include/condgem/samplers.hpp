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
// Exact samplers for the positive stable family and the conditioned
// variants the stick-breaking pipelines consume.  All draws are rejection
// based: no discretization, no tabulated inverses.

#ifndef CONDGEM_SAMPLERS_HPP_
#define CONDGEM_SAMPLERS_HPP_

#include <vector>

#include "condgem/param.hpp"
#include "condgem/rng.hpp"

namespace condgem::samplers {

// Above this value of lambda^alpha the tilted sampler switches from plain
// rejection (acceptance e^(-lambda^alpha)) to the double-rejection envelope.
inline constexpr double kTiltThreshold = 3.0;

// Positive alpha-stable draw, Laplace transform e^(-s^alpha).
double sample_stable(AlphaParam alpha, RngState& rng);

// Exponentially tilted stable draw: density propto e^(-lambda*t) f_alpha(t).
// lambda >= 0; the runtime is O(1) uniformly in lambda.
double sample_tilted_stable(AlphaParam alpha, double lambda, RngState& rng);

// Block count K in {1, ..., m} under the rate-reweighted block-count law.
int sample_block_count_conditional(int m, double lambda, AlphaParam alpha,
                                   RngState& rng);

// Draw with density propto t^m e^(-lambda*t) f_alpha(t): a tilted draw plus
// an independent Gamma(m - K*alpha) / lambda given the block count K.
// m = 0 admits lambda >= 0; m >= 1 requires lambda > 0.
double sample_cond_stable(int m, double lambda, AlphaParam alpha,
                          RngState& rng);

// Rate increment Y = Gamma(m - ell) / T with T the (ell, x)-conditioned
// stable draw; 0 <= ell <= m-1, x > 0.
double sample_y(int m, int ell, double x, AlphaParam alpha, RngState& rng);

// Ratios R_k of the rate path driven by a standard exponential walk:
//   R_k = ((G_{k-1} + L) / (G_k + L))^(1/alpha),   L = lambda^alpha,
// with G_0 = 0 and G_k the walk.  gtilde exposes the realized walk so the
// exact product identity L / prod R^alpha = G_k + L stays testable.
struct RSequence {
  std::vector<double> r;
  std::vector<double> gtilde;
};
RSequence sample_r_sequence(int n, double lambda, AlphaParam alpha,
                            RngState& rng);

// Number of blocks after m sequential insertions with reinforcement
// (theta + k*alpha) for a new block at step i against theta + i total.
// theta > -alpha; m >= 1.
int sample_crp_block_count(int m, AlphaParam alpha, double theta,
                           RngState& rng);

// Random rate that turns a fixed-rate stick pipeline into GEM(alpha, theta)
// conditioned on a count of m: Gamma(theta/alpha + K_m)^(1/alpha) with K_m
// the reinforced block count above.  m = 0 requires theta > 0.
double sample_gem_lambda(int m, double theta, AlphaParam alpha,
                         RngState& rng);

}  // namespace condgem::samplers

#endif  // CONDGEM_SAMPLERS_HPP_
