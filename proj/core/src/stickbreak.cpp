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

#include "condgem/stickbreak.hpp"

#include <cmath>

#include "condgem/samplers.hpp"
#include "condgem/specfun.hpp"

namespace condgem::stickbreak {
namespace {

// Largest double below 1.
constexpr double kBelowOne = 0x1.fffffffffffffp-1;

void stamp(StickDraw& d, const RngState& rng) {
  d.seed = rng.seed();
  d.stream = rng.stream();
  d.state_in = rng.state();
}

// Pins w into (r, 1) at the representable boundary.  The raw transforms
// guarantee r < w < 1 almost surely; only draws within an ulp of the
// boundary are moved, which is below Monte Carlo resolution.
double pin_stick(double w, double r) {
  w = std::min(w, kBelowOne);
  if (!(w > r)) w = std::min(std::nextafter(r, 2.0), kBelowOne);
  return w;
}

void assemble(StickDraw& d) {
  Masses m = weights_to_masses(d.w);
  d.ptilde = std::move(m.ptilde);
  d.remainder = m.remainder;
}

}  // namespace

Masses weights_to_masses(const std::vector<double>& w) {
  Masses out;
  out.ptilde.reserve(w.size());
  double prod = 1.0;
  for (double wk : w) {
    if (!(wk > 0.0 && wk < 1.0)) {
      throw DomainError("stick weights must lie strictly in (0, 1)");
    }
    out.ptilde.push_back(prod * (1.0 - wk));
    prod *= wk;
  }
  out.remainder = prod;
  return out;
}

StickDraw sticks_m0(double lambda, AlphaParam alpha, int n, RngState& rng) {
  if (n < 1) throw DomainError("n must be >= 1");
  StickDraw d;
  stamp(d, rng);
  const double a = alpha.value();
  const samplers::RSequence rs =
      samplers::sample_r_sequence(n, lambda, alpha, rng);
  const double big_l = std::pow(lambda, a);
  d.lambda_path.push_back(lambda);
  for (int k = 0; k < n; ++k) {
    const double b = rng.beta(1.0 - a, a);
    d.r.push_back(rs.r[k]);
    d.w.push_back(pin_stick(1.0 - b * (1.0 - rs.r[k]), rs.r[k]));
    d.lambda_path.push_back(std::pow(rs.gtilde[k] + big_l, 1.0 / a));
  }
  assemble(d);
  return d;
}

StickDraw sticks_m1(double lambda, AlphaParam alpha, int n, RngState& rng) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("lambda must be > 0");
  }
  StickDraw d;
  stamp(d, rng);
  const double a = alpha.value();
  const samplers::RSequence rs =
      samplers::sample_r_sequence(n, lambda, alpha, rng);
  const double big_l = std::pow(lambda, a);
  d.lambda_path.push_back(lambda);
  for (int k = 0; k < n; ++k) {
    const double b = rng.beta(1.0 - a, a);
    const double rk = rs.r[k];
    d.r.push_back(rk);
    d.w.push_back(pin_stick(1.0 / (1.0 + b * (1.0 - rk) / rk), rk));
    d.lambda_path.push_back(std::pow(rs.gtilde[k] + big_l, 1.0 / a));
  }
  assemble(d);
  return d;
}

StickDraw sticks_general(int m, double lambda, AlphaParam alpha, int n,
                         RngState& rng) {
  if (m < 1) throw DomainError("m must be >= 1");
  if (n < 1) throw DomainError("n must be >= 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("lambda must be > 0");
  }
  StickDraw d;
  stamp(d, rng);
  const double a = alpha.value();
  double lam = lambda;
  d.lambda_path.push_back(lam);
  for (int j = 0; j < n; ++j) {
    const specfun::PmfTable pmf = specfun::n_marginal_pmf(m, lam, alpha);
    const int nj = pmf.sample(rng);
    const double y = samplers::sample_y(m, m - nj, lam, alpha, rng);
    const double lam_next = lam + y;
    const double rj = lam / lam_next;
    const double b = rng.beta(nj - a, a);
    // (1 - R_j)/R_j equals Y/lambda_{j-1} exactly; using it directly avoids
    // the cancellation in 1 - R_j.
    const double w = 1.0 / (1.0 + b * (y / lam));
    d.n.push_back(nj);
    d.r.push_back(rj);
    d.w.push_back(pin_stick(w, rj));
    d.lambda_path.push_back(lam_next);
    lam = lam_next;
  }
  assemble(d);
  return d;
}

StickDraw sticks_gem(AlphaParam alpha, double theta, int m, int n,
                     RngState& rng) {
  const std::uint64_t seed = rng.seed();
  const std::uint64_t stream = rng.stream();
  const std::uint64_t state_in = rng.state();
  const double lambda = samplers::sample_gem_lambda(m, theta, alpha, rng);
  StickDraw d;
  if (m == 0) {
    d = sticks_m0(lambda, alpha, n, rng);
  } else if (m == 1) {
    d = sticks_m1(lambda, alpha, n, rng);
  } else {
    d = sticks_general(m, lambda, alpha, n, rng);
  }
  // The snapshot must cover the rate draw too.
  d.seed = seed;
  d.stream = stream;
  d.state_in = state_in;
  return d;
}

StickDraw sticks_half(int m, double lambda, int n, RngState& rng) {
  if (m < 0) throw DomainError("m must be >= 0");
  if (n < 1) throw DomainError("n must be >= 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("lambda must be > 0");
  }
  StickDraw d;
  stamp(d, rng);
  const AlphaParam half(0.5);
  const double s = samplers::sample_cond_stable(m, lambda, half, rng);
  const double s2 = 0.5 / s;
  double q = 0.0;
  double lam = lambda;
  d.lambda_path.push_back(lam);
  for (int l = 0; l < n; ++l) {
    const double b = rng.normal();
    const double q_next = q + b * b;
    double w = (q + s2) / (q_next + s2);
    const double r = std::min(w, kBelowOne) * std::min(w, kBelowOne);
    w = pin_stick(w, r);
    d.w.push_back(w);
    d.r.push_back(r);
    lam /= r;
    d.lambda_path.push_back(lam);
    q = q_next;
  }
  assemble(d);
  return d;
}

StickDraw draw_sticks(Pipeline pipeline, const LawSpec& law, int n,
                      RngState& rng) {
  const bool fixed = law.rate == LawSpec::Rate::kFixed;
  if (fixed && law.lambda == 0.0 && law.m != 0) {
    throw DomainError("a zero rate is only valid with m = 0");
  }
  switch (pipeline) {
    case Pipeline::kM0:
      if (!fixed) throw DomainError("law m0 needs a fixed rate");
      if (law.m != 0) throw DomainError("law m0 needs m = 0");
      return sticks_m0(law.lambda, law.alpha, n, rng);
    case Pipeline::kM1:
      if (!fixed) throw DomainError("law m1 needs a fixed rate");
      if (law.m != 1) throw DomainError("law m1 needs m = 1");
      return sticks_m1(law.lambda, law.alpha, n, rng);
    case Pipeline::kGeneral:
      if (!fixed) throw DomainError("law general needs a fixed rate");
      return sticks_general(law.m, law.lambda, law.alpha, n, rng);
    case Pipeline::kGem:
      if (fixed) throw DomainError("law gem needs a theta rate");
      return sticks_gem(law.alpha, law.theta, law.m, n, rng);
    case Pipeline::kHalf:
      if (!fixed) throw DomainError("law half needs a fixed rate");
      if (law.alpha.value() != 0.5) {
        throw DomainError("law half requires alpha = 1/2");
      }
      return sticks_half(law.m, law.lambda, n, rng);
  }
  throw DomainError("unknown pipeline");
}

}  // namespace condgem::stickbreak
