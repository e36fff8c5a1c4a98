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

#ifndef CONDGEM_QUADRATURE_HPP_
#define CONDGEM_QUADRATURE_HPP_

#include <functional>
#include <utility>
#include <vector>

namespace condgem {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;  // accumulated Kronrod error estimate
  long evaluations = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod 7/15 on [a, b].  Bisects the interval with the
// largest error estimate until |err| <= max(abs_tol, rel_tol*|value|) or the
// panel budget runs out.  Endpoints are never evaluated, so integrable
// endpoint singularities slow convergence but do not produce NaN.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double rel_tol = 1e-10, double abs_tol = 0.0,
                     int max_panels = 4000);

// Same, but seeded with the segments [pts[0],pts[1]], [pts[1],pts[2]], ...
// Use to pin known breakpoints (peaks, kinks) so adaptivity starts aligned.
QuadResult integrate_segments(const std::function<double(double)>& f,
                              const std::vector<double>& pts,
                              double rel_tol = 1e-10, double abs_tol = 0.0,
                              int max_panels = 4000);

// log of integral of exp(log_f) over [a, b], stabilized by the max of log_f
// sampled on the seed grid.  log_value is -inf when the mass underflows.
struct LogQuadResult {
  double log_value = 0.0;
  double rel_error = 0.0;
  bool converged = false;
};
LogQuadResult log_integrate(const std::function<double(double)>& log_f,
                            double a, double b, double rel_tol = 1e-10,
                            int max_panels = 4000);

// Window [lo, hi] holding essentially all mass of exp(log_f) for a
// unimodal-ish log density on (0, inf).  Scans hint*2^j, j in [-jmax, jmax],
// picks the peak and widens until log_f drops `drop` nats below it (or the
// scan range ends).  Half-octave refinement at both edges.
std::pair<double, double> bracket_log_mass(
    const std::function<double(double)>& log_f, double hint, double drop = 50.0,
    int jmax = 60);

}  // namespace condgem

#endif  // CONDGEM_QUADRATURE_HPP_
