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

#ifndef CONDGEM_PARAM_HPP_
#define CONDGEM_PARAM_HPP_

#include <stdexcept>
#include <string>

namespace condgem {

// Invalid argument values or combinations (bad alpha, k out of range, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Configured size limits exceeded (e.g. m above the Stirling cap).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Numerical failure: non-convergent quadrature, failed cross-check, overflow.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Stability index alpha, strictly inside (0,1). Values within 1e-6 of the
// boundary are rejected: the kernels lose all accuracy there (Gamma(1-alpha)
// and the Zolotarev exponent 1/(1-alpha) blow up).
class AlphaParam {
 public:
  explicit AlphaParam(double alpha) : alpha_(alpha) {
    if (!(alpha >= kMin && alpha <= kMax)) {
      throw DomainError("alpha must lie in [" + std::to_string(kMin) + ", " +
                        std::to_string(kMax) + "], got " +
                        std::to_string(alpha));
    }
  }

  double value() const { return alpha_; }

  static constexpr double kMin = 1e-6;
  static constexpr double kMax = 1.0 - 1e-6;

 private:
  double alpha_;
};

// Count cap for Stirling triangles and everything indexed by m.
inline constexpr int kDefaultMaxM = 512;

// Gamma draws and Gamma(m - k*alpha) shapes below this are treated as the
// degenerate Gamma(0) == 0.
inline constexpr double kGammaShapeFloor = 1e-12;

}  // namespace condgem

#endif  // CONDGEM_PARAM_HPP_
