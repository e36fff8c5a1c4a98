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

#ifndef CONDGEM_RNG_HPP_
#define CONDGEM_RNG_HPP_

#include <cstdint>

namespace condgem {

// Deterministic generator with a (seed, stream) contract: identical pairs
// reproduce identical draw sequences on every platform.  The core is the
// minimal pcg32 step (64-bit LCG state, xorshift-rotate output); streams are
// pcg's odd increments, so distinct streams never share a sequence.
//
// Every distribution below is implemented here on top of uniform bits.
// Standard-library distributions are deliberately not used: their algorithms
// differ across standard libraries, which would break cross-platform replay.
class RngState {
 public:
  RngState(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  // Raw LCG state; together with stream() this snapshots mid-sequence
  // positions exactly.
  std::uint64_t state() const { return state_; }
  void restore(std::uint64_t state) { state_ = state; }

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on the open interval (0,1); never returns 0 or 1, so logs and
  // inversions are always finite.
  double uniform();

  double exponential();          // Exp(1)
  double normal();               // N(0,1), Box-Muller (two uniforms per call)
  double gamma(double shape);    // Gamma(shape, 1); shape < kGammaShapeFloor -> 0
  double beta(double a, double b);

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
  std::uint64_t seed_;
  std::uint64_t stream_;
};

}  // namespace condgem

#endif  // CONDGEM_RNG_HPP_
