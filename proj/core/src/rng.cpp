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

#include "condgem/rng.hpp"

#include <cmath>

#include "condgem/param.hpp"

namespace condgem {

namespace {
constexpr std::uint64_t kPcgMult = 6364136223846793005ULL;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

RngState::RngState(std::uint64_t seed, std::uint64_t stream)
    : state_(0), inc_((stream << 1u) | 1u), seed_(seed), stream_(stream) {
  next_u32();
  state_ += seed;
  next_u32();
}

std::uint32_t RngState::next_u32() {
  std::uint64_t old = state_;
  state_ = old * kPcgMult + inc_;
  std::uint32_t xorshifted =
      static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t RngState::next_u64() {
  std::uint64_t hi = next_u32();
  std::uint64_t lo = next_u32();
  return (hi << 32) | lo;
}

double RngState::uniform() {
  // 53 random bits centered in each cell of a 2^-53 grid: open (0,1).
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngState::exponential() { return -std::log(uniform()); }

double RngState::normal() {
  double u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double RngState::gamma(double shape) {
  if (shape < kGammaShapeFloor) return 0.0;
  if (shape < 1.0) {
    // Boost by one and thin with U^{1/shape}.
    double g = gamma(shape + 1.0);
    return g * std::pow(uniform(), 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze.
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = uniform();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RngState::beta(double a, double b) {
  double x = gamma(a);
  double y = gamma(b);
  if (x + y <= 0.0) return a / (a + b);  // both shapes under the floor
  return x / (x + y);
}

}  // namespace condgem
