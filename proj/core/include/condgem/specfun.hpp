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
// Deterministic kernel: generalized Stirling numbers, the Omega polynomial
// family built on them, positive stable densities via the Zolotarev integral
// representation, and the exponentially tilted / polynomially weighted
// variants plus the discrete laws attached to them.  Everything is computed
// in log space; the *_log_* entry points are the primary surface and the
// plain ones exponentiate.

#ifndef CONDGEM_SPECFUN_HPP_
#define CONDGEM_SPECFUN_HPP_

#include <functional>
#include <vector>

#include "condgem/param.hpp"
#include "condgem/rng.hpp"

namespace condgem::specfun {

// Normalized discrete law on {1, ..., size()}.  Built from raw log weights;
// raw_log_total() preserves the pre-normalization log sum so callers can test
// identities the raw weights are supposed to satisfy.  Construction rejects
// NaN and any -inf weight: every k in range must carry positive mass.
class PmfTable {
 public:
  explicit PmfTable(std::vector<double> raw_log_weights);

  int size() const { return static_cast<int>(logp_.size()); }
  double log_pmf(int k) const;  // k in [1, size()]
  double pmf(int k) const;
  double raw_log_total() const { return raw_log_total_; }
  int sample(RngState& rng) const;  // inversion on the cached cdf

 private:
  std::vector<double> logp_;
  std::vector<double> cdf_;
  double raw_log_total_;
};

// Triangle of log S_alpha(m, k) for 1 <= k <= m <= rows().  Recurrence
//   S(m+1, k) = S(m, k-1) + (m - k*alpha) * S(m, k),  S(1, 1) = 1,
// all terms positive for alpha in (0,1), so log space loses nothing.
class StirlingTable {
 public:
  StirlingTable(AlphaParam alpha, int m_max, int cap = kDefaultMaxM);

  void extend(int m_max);  // grows rows; throws CapacityError past cap
  int rows() const { return static_cast<int>(rows_.size()); }
  double alpha() const { return alpha_; }
  double log_value(int m, int k) const;  // requires 1 <= k <= m <= rows()

 private:
  double alpha_;
  int cap_;
  std::vector<std::vector<double>> rows_;  // rows_[m-1][k-1]
};

// log S_alpha(m, k).  Memoized per (thread, alpha); the memo grows to the
// largest m seen, capped at kDefaultMaxM.
double gen_stirling_log(int m, int k, AlphaParam alpha);

// Block-count law of the alpha-stable partition of [m]:
//   P(K = k) = alpha^(k-1) * Gamma(k) * S_alpha(m, k) / Gamma(m).
// Raw weights sum to 1 analytically; raw_log_total() ~ 0 is a self-test.
PmfTable pd_block_pmf(int m, AlphaParam alpha);

// Omega polynomial family:
//   Omega_0(x) = 1/(alpha*x),  Omega_1 = 1,
//   Omega_m(x) = Gamma(m) * sum_k P(K=k) x^(k-1) / Gamma(k)   (m >= 1),
// continuous at x = 0 for m >= 1 with value Gamma(m) * P(K=1).
// log_omega takes log(x) so callers with x = exp(huge) never overflow;
// m = 0 with log_x = -inf is a DomainError (the pole at x = 0).
double log_omega(int m, double log_x, AlphaParam alpha);
double omega(int m, double x, AlphaParam alpha);

// E[S^m e^(-lambda S)] for S positive alpha-stable with Laplace exponent
// lambda^alpha.  Equals alpha * e^(-lambda^alpha) * lambda^(alpha-m) *
// Omega_m(lambda^alpha) for m >= 1 and e^(-lambda^alpha) for m = 0.
// m >= 1 requires lambda > 0 (the bare moments diverge).
double log_tilted_moment(int m, double lambda, AlphaParam alpha);
double tilted_moment(int m, double lambda, AlphaParam alpha);

// Zolotarev kernel A(u) on (0, pi), increasing, with
//   A(u)^(1-alpha) = sin(alpha*u)^alpha sin((1-alpha)*u)^(1-alpha) / sin(u)
// ... up to the standard arrangement; zolotarev_log_a0 is the u -> 0 limit
// log A(0+) = (alpha*log(alpha) + (1-alpha)*log(1-alpha)) / (1-alpha).
double zolotarev_log_a(double u, AlphaParam alpha);
double zolotarev_log_a0(AlphaParam alpha);

// Density of the positive alpha-stable law (Laplace transform e^(-s^alpha))
// by adaptive quadrature of the Zolotarev integral, factored around the
// integrand's peak so t far into either tail stays accurate.
double stable_log_pdf(double t, AlphaParam alpha, double rel_tol = 1e-10);
double stable_pdf(double t, AlphaParam alpha, double rel_tol = 1e-10);

// Density proportional to t^rho * e^(-lambda t) * stable_pdf(t).  Integer
// rho = m with lambda > 0 normalizes through tilted_moment; rho = 0 through
// e^(-lambda^alpha); lambda = 0 requires rho < alpha and normalizes through
// Gamma identities; anything else falls back to quadrature.
double cond_stable_log_pdf(double t, double lambda, double rho,
                           AlphaParam alpha, double rel_tol = 1e-8);
double cond_stable_pdf(double t, double lambda, double rho, AlphaParam alpha,
                       double rel_tol = 1e-8);

// Block-count law reweighted by the rate:  P(K = k | lambda) is proportional
// to P(K = k) * lambda^(k*alpha) / Gamma(k).  Extra self-test identity: the
// raw total equals lambda^alpha * Omega_m(lambda^alpha) / Gamma(m).
PmfTable block_pmf_conditional(int m, double lambda, AlphaParam alpha);

// Law of the count N in {1, ..., m} absorbed by the first stick:
//   P(N = k) = [Gamma(k-alpha)/Gamma(1-alpha)] C(m-1, k-1)
//              * Omega_{m-k}(L) * alpha * L / Omega_m(L),   L = lambda^alpha.
// Raw weights sum to 1 analytically.
PmfTable n_marginal_pmf(int m, double lambda, AlphaParam alpha);

// Same count given the first ratio R = r:
//   P(N = k | r) propto E[beta^(k-1)] C(m-1, k-1) (1-r)^(k-1) r^(m-k),
// with beta ~ Beta(1-alpha, alpha).  The raw total must match
// beta_mix_moment(m, r, alpha); a mismatch beyond 1e-10 relative throws
// NumericError.
PmfTable n_conditional_pmf(int m, double r, AlphaParam alpha);

// E[(beta*(1-r) + r)^(m-1)] for beta ~ Beta(1-alpha, alpha); the normalizer
// shared by n_conditional_pmf and the conditional stick density.
double beta_mix_moment(int m, double r, AlphaParam alpha);
double log_beta_mix_moment(int m, double r, AlphaParam alpha);

// Density of Y/lambda where Y = Gamma(k) / S_{alpha,m-k}(lambda) is the jump
// the first stick adds to the rate:
//   f(y) = Omega_m(L(1+y)^alpha) / (Gamma(k) Omega_{m-k}(L))
//          * y^(k-1) (1+y)^(alpha-m) e^(-L((1+y)^alpha - 1)).
double y_log_pdf(double y, double lambda, int m, int k, AlphaParam alpha);
double y_pdf(double y, double lambda, int m, int k, AlphaParam alpha);

// Joint-component density of the first ratio R given N = k (m >= 1), built
// on the m = 0 ratio density f(r) = alpha L e^L e^(-L r^-alpha) r^(-alpha-1):
//   f_{m,k}(r) = Omega_m(L r^-alpha) / (Gamma(k) Omega_{m-k}(L) alpha L)
//                * (1-r)^(k-1) r^(m-k) * f(r).
double r1m_log_pdf(double r, double lambda, int m, int k, AlphaParam alpha);
double r1m_pdf(double r, double lambda, int m, int k, AlphaParam alpha);

// Marginal of the first ratio (k summed out):
//   f_m(r) = [Omega_m(L r^-alpha) / Omega_m(L)] * beta_mix_moment(m, r)
//            * f(r).
double r_marginal_log_pdf(double r, double lambda, int m, AlphaParam alpha);
double r_marginal_pdf(double r, double lambda, int m, AlphaParam alpha);

// Density on (r, 1) of the first stick W given the ratio R = r:
//   B(w) = w^-m (1-w)^-alpha (w-r)^(alpha-1) r^(m-alpha)
//          / (Gamma(1-alpha) Gamma(alpha) beta_mix_moment(m, r)).
double w_conditional_log_pdf(double w, double r, int m, AlphaParam alpha);
double w_conditional_pdf(double w, double r, int m, AlphaParam alpha);

// E[S^-theta] = Gamma(theta/alpha + 1) / Gamma(theta + 1), theta > -alpha.
double neg_moment(double theta, AlphaParam alpha);

// Density of the random rate hidden in a GEM(alpha, theta) stick sequence
// after m observed counts:
//   g(y) = alpha * Omega_m(y^alpha) * y^(alpha+theta-1) * e^(-y^alpha)
//          / (Gamma(m+theta) * neg_moment(theta, alpha)),
// theta > -alpha, and theta > 0 when m = 0.
double gem_rate_log_pdf(double y, int m, double theta, AlphaParam alpha);
double gem_rate_pdf(double y, int m, double theta, AlphaParam alpha);

// Tabulated density on an explicit grid, trapezoid mass over the window.
struct DensityGrid {
  std::vector<double> x;
  std::vector<double> f;
  double trapezoid_mass = 0.0;
};
DensityGrid tabulate_density(const std::function<double(double)>& pdf,
                             double lo, double hi, int points,
                             bool log_spacing);

}  // namespace condgem::specfun

#endif  // CONDGEM_SPECFUN_HPP_
