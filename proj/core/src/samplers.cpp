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

#include "condgem/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "condgem/logspace.hpp"
#include "condgem/specfun.hpp"

namespace condgem::samplers {
namespace {

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Double rejection for the tilted stable law at large lambda^alpha.
//
// Kanter's representation writes a stable draw as X = (A(U)/E)^((1-a)/a)
// with U uniform on (0,pi) and E exponential.  Tilting by e^(-lambda*X)
// turns the joint law of (U, E) into
//
//   pi(u, t) propto exp(-J(u, t)),   J(u, t) = t + lambda * (A(u)/t)^c,
//
// with c = (1-a)/a.  In t the exponent dips at t*(u) = c^a L A(u)^(1-a)
// (L = lambda^a), where J equals J*(u) = t*(u)/(1-a), rising from J*(0) = L.
// The sampler majorizes exp(L - J) by a piecewise envelope over a u-grid:
// within a cell [u_i, u_i+1] the height is e^(-phi_i), phi_i = J*(u_i) - L,
// and in t it is flat on a Laplace-width window around [t*(u_i), t*(u_i+1)]
// with exponential tails whose rates underbound |dJ/dt| outside the window.
// Every bound holds because A and hence phi and t* increase in u; rejection
// against the exact J keeps the draw exact.  Cells where phi jumps by more
// than 40 nats, and the final cell reaching pi, fall back to the crude but
// still dominating min(e^(-phi_i), e^(L - t)).
class TiltedEnvelope {
 public:
  TiltedEnvelope(AlphaParam alpha, double lambda)
      : alpha_(alpha),
        a_(alpha.value()),
        c_((1.0 - a_) / a_),
        log_lambda_(std::log(lambda)),
        big_l_(std::pow(lambda, a_)),
        la0_(specfun::zolotarev_log_a0(alpha)) {
    build();
  }

  double draw(RngState& rng) const;

 private:
  struct Cell {
    double u_lo, u_hi;
    double phi;   // phi at u_lo, the in-cell minimum
    double mass;  // envelope mass, used for cell selection
    bool crude;
    double tau;                    // crude: uniform/exponential split point
    double t_l, t_r;               // precise: flat window
    double rho_l, rho_r;           // precise: tail rates
    double w_left, w_center, w_right;
  };

  double phi(double u) const {
    const double la = specfun::zolotarev_log_a(u, alpha_);
    return big_l_ * std::expm1((1.0 - a_) * (la - la0_));
  }
  double t_star(double la) const {
    return std::exp(a_ * std::log(c_) + std::log(big_l_) +
                    (1.0 - a_) * la);
  }

  void build();

  AlphaParam alpha_;
  double a_, c_, log_lambda_, big_l_, la0_;
  std::vector<Cell> cells_;
  std::vector<double> cum_mass_;
  double total_mass_ = 0.0;
};

void TiltedEnvelope::build() {
  const double gamma = big_l_ * a_ * (1.0 - a_);  // phi''(0)
  const double cap = kPi / 16.0;
  double du = std::min(cap, 0.5 / std::sqrt(std::max(gamma, 0.25)));
  double u = 0.0;
  double phi_lo = 0.0;
  double la_lo = la0_;
  while (u < kPi) {
    Cell cell{};
    cell.u_lo = u;
    cell.u_hi = std::min(kPi, u + du);
    cell.phi = phi_lo;
    const double height = std::exp(-phi_lo);
    const bool tail = cell.u_hi >= kPi;
    double phi_hi = 0.0, la_hi = 0.0;
    if (!tail) {
      la_hi = specfun::zolotarev_log_a(cell.u_hi, alpha_);
      phi_hi = big_l_ * std::expm1((1.0 - a_) * (la_hi - la0_));
    }
    if (tail || !(phi_hi - phi_lo <= 40.0)) {
      cell.crude = true;
      cell.tau = big_l_ + phi_lo;  // e^(L-tau) meets e^(-phi) continuously
      cell.mass =
          height > 0.0 ? (cell.u_hi - u) * height * (cell.tau + 1.0) : 0.0;
    } else {
      cell.crude = false;
      const double tl_star = t_star(la_lo);
      const double tr_star = t_star(la_hi);
      // Window edges at 1.25 Laplace widths, floored at a relative offset so
      // the tail rates below never round to zero.
      cell.t_l = std::max(
          0.0, tl_star - std::max(1.25 * std::sqrt(a_ * tl_star),
                                  1e-9 * tl_star));
      cell.t_r = tr_star + std::max(1.25 * std::sqrt(a_ * tr_star),
                                    1e-9 * tr_star);
      if (cell.t_l > 0.0) {
        // expm1 of a clipped exponent never exceeds the exact rate, and a
        // smaller rate only fattens the envelope.
        cell.rho_l = std::expm1(
            std::min(690.0, std::log(tl_star / cell.t_l) / a_));
        cell.w_left = 1.0 / cell.rho_l;
      }
      cell.rho_r = -std::expm1(std::log(tr_star / cell.t_r) / a_);
      cell.w_center = cell.t_r - cell.t_l;
      cell.w_right = 1.0 / cell.rho_r;
      cell.mass = (cell.u_hi - u) * height *
                  (cell.w_left + cell.w_center + cell.w_right);
    }
    if (cell.mass > 0.0 && std::isfinite(cell.mass)) {
      cells_.push_back(cell);
      total_mass_ += cell.mass;
      cum_mass_.push_back(total_mass_);
    }
    u = cell.u_hi;
    du = std::min(du * 1.35, cap);
    phi_lo = phi_hi;
    la_lo = la_hi;
  }
  if (cells_.empty() || !std::isfinite(total_mass_)) {
    throw NumericError("tilted envelope mass out of double range");
  }
}

double TiltedEnvelope::draw(RngState& rng) const {
  for (;;) {
    const double pick = rng.uniform() * total_mass_;
    const auto it =
        std::lower_bound(cum_mass_.begin(), cum_mass_.end(), pick);
    const Cell& cell = cells_[it - cum_mass_.begin()];
    const double u =
        cell.u_lo + rng.uniform() * (cell.u_hi - cell.u_lo);

    double t, log_khat;
    if (cell.crude) {
      if (rng.uniform() * (cell.tau + 1.0) < cell.tau) {
        t = rng.uniform() * cell.tau;
        log_khat = 0.0;
      } else {
        t = cell.tau + rng.exponential();
        log_khat = cell.tau - t;
      }
    } else {
      const double pos =
          rng.uniform() * (cell.w_left + cell.w_center + cell.w_right);
      if (pos < cell.w_left) {
        t = cell.t_l - rng.exponential() / cell.rho_l;
        if (t <= 0.0) continue;  // envelope mass below 0 is discarded
        log_khat = -cell.rho_l * (cell.t_l - t);
      } else if (pos < cell.w_left + cell.w_center) {
        t = cell.t_l + rng.uniform() * (cell.t_r - cell.t_l);
        log_khat = 0.0;
      } else {
        t = cell.t_r + rng.exponential() / cell.rho_r;
        log_khat = -cell.rho_r * (t - cell.t_r);
      }
    }
    if (!(t > 0.0)) continue;

    const double la = specfun::zolotarev_log_a(u, alpha_);
    const double log_x = c_ * (la - std::log(t));
    const double tilt_arg = log_lambda_ + log_x;
    const double j =
        tilt_arg > 700.0 ? kNegInf : -(t + std::exp(tilt_arg));
    if (j == kNegInf) continue;  // J is astronomically large: reject
    const double log_ratio = big_l_ + cell.phi + j - log_khat;
    if (log_ratio > 1e-6 - 1e-10 * j) {
      throw NumericError("tilted stable envelope violated");
    }
    if (std::log(rng.uniform()) < log_ratio) return std::exp(log_x);
  }
}

}  // namespace

double sample_stable(AlphaParam alpha, RngState& rng) {
  const double a = alpha.value();
  const double c = (1.0 - a) / a;
  for (;;) {
    const double u = kPi * rng.uniform();
    const double e = rng.exponential();
    const double s =
        std::exp(c * (specfun::zolotarev_log_a(u, alpha) - std::log(e)));
    if (std::isfinite(s) && s > 0.0) return s;
  }
}

double sample_tilted_stable(AlphaParam alpha, double lambda, RngState& rng) {
  if (lambda < 0.0 || !std::isfinite(lambda)) {
    throw DomainError("lambda must be a finite real >= 0");
  }
  if (lambda == 0.0) return sample_stable(alpha, rng);
  const double big_l = std::pow(lambda, alpha.value());
  if (big_l <= kTiltThreshold) {
    // Plain rejection; acceptance e^(-L) >= e^(-3).
    for (;;) {
      const double s = sample_stable(alpha, rng);
      if (rng.exponential() > lambda * s) return s;
    }
  }
  return TiltedEnvelope(alpha, lambda).draw(rng);
}

int sample_block_count_conditional(int m, double lambda, AlphaParam alpha,
                                   RngState& rng) {
  return specfun::block_pmf_conditional(m, lambda, alpha).sample(rng);
}

double sample_cond_stable(int m, double lambda, AlphaParam alpha,
                          RngState& rng) {
  if (m == 0) return sample_tilted_stable(alpha, lambda, rng);
  // Mixture split: conditionally on the block count K the draw is the
  // tilted stable plus an independent Gamma(m - K*alpha) / lambda.
  const int k = sample_block_count_conditional(m, lambda, alpha, rng);
  const double g = rng.gamma(m - k * alpha.value());
  return sample_tilted_stable(alpha, lambda, rng) + g / lambda;
}

double sample_y(int m, int ell, double x, AlphaParam alpha, RngState& rng) {
  if (m < 1 || ell < 0 || ell > m - 1) {
    throw DomainError("sample_y needs 0 <= ell <= m-1");
  }
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("sample_y needs x > 0");
  }
  const double g = rng.gamma(static_cast<double>(m - ell));
  return g / sample_cond_stable(ell, x, alpha, rng);
}

RSequence sample_r_sequence(int n, double lambda, AlphaParam alpha,
                            RngState& rng) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (lambda < 0.0 || !std::isfinite(lambda)) {
    throw DomainError("lambda must be a finite real >= 0");
  }
  const double big_l = std::pow(lambda, alpha.value());
  RSequence out;
  out.r.reserve(n);
  out.gtilde.reserve(n);
  double g = 0.0;
  for (int k = 0; k < n; ++k) {
    const double e = rng.exponential();
    // log R_k = -log1p(e / (G_{k-1} + L)) / alpha: no cancellation, and the
    // lambda = 0 start gives R_1 = 0 exactly.
    const double log_r = -std::log1p(e / (g + big_l)) / alpha.value();
    g += e;
    out.r.push_back(std::exp(log_r));
    out.gtilde.push_back(g);
  }
  return out;
}

int sample_crp_block_count(int m, AlphaParam alpha, double theta,
                           RngState& rng) {
  if (m < 1) throw DomainError("m must be >= 1");
  const double a = alpha.value();
  if (!(theta > -a) || !std::isfinite(theta)) {
    throw DomainError("theta must exceed -alpha");
  }
  int k = 1;
  for (int i = 1; i < m; ++i) {
    if (rng.uniform() < (theta + k * a) / (theta + i)) ++k;
  }
  return k;
}

double sample_gem_lambda(int m, double theta, AlphaParam alpha,
                         RngState& rng) {
  if (m < 0) throw DomainError("m must be >= 0");
  const double a = alpha.value();
  if (!(theta > -a) || !std::isfinite(theta)) {
    throw DomainError("theta must exceed -alpha");
  }
  if (m == 0 && !(theta > 0.0)) {
    throw DomainError("m = 0 needs theta > 0");
  }
  const int blocks = m == 0 ? 0 : sample_crp_block_count(m, alpha, theta, rng);
  for (;;) {
    const double lambda = std::pow(rng.gamma(theta / a + blocks), 1.0 / a);
    if (lambda > 0.0 && std::isfinite(lambda)) return lambda;
  }
}

}  // namespace condgem::samplers
