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

#include "condgem/specfun.hpp"

#include <cmath>
#include <vector>

#include "condgem/logspace.hpp"
#include "condgem/param.hpp"
#include "condgem/quadrature.hpp"
#include "condgem/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using condgem::AlphaParam;
using condgem::CapacityError;
using condgem::DomainError;
using condgem::NumericError;
using condgem::testutil::log_rel_err;
using condgem::testutil::rel_err;
namespace sf = condgem::specfun;
namespace orc = condgem::oracles;

double beta_log_pdf(double x, double a, double b) {
  return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) +
         std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
}

// Density of W given (R = r, N = k): W = 1 / (1 + B (1-r)/r) with
// B ~ Beta(k - alpha, alpha), pushed through the change of variables.
double stick_given_blocks_pdf(double w, double r, int k, double alpha) {
  const double b = r * (1.0 - w) / (w * (1.0 - r));
  if (!(b > 0.0 && b < 1.0)) return 0.0;
  const double jac = r / ((1.0 - r) * w * w);
  return std::exp(beta_log_pdf(b, k - alpha, alpha)) * jac;
}

}  // namespace

TEST_SUITE("specfun") {

TEST_CASE("alpha parameter domain") {
  CHECK_THROWS_AS(AlphaParam(0.0), DomainError);
  CHECK_THROWS_AS(AlphaParam(1.0), DomainError);
  CHECK_THROWS_AS(AlphaParam(-0.2), DomainError);
  CHECK_THROWS_AS(AlphaParam(1e-7), DomainError);
  CHECK(AlphaParam(0.5).value() == 0.5);
  CHECK(AlphaParam(1e-6).value() == 1e-6);
}

TEST_CASE("stirling hand values and domain") {
  const AlphaParam half(0.5);
  CHECK(sf::gen_stirling_log(1, 1, half) == 0.0);
  CHECK(rel_err(sf::gen_stirling_log(2, 1, half), std::log(0.5)) < 1e-14);
  CHECK(rel_err(sf::gen_stirling_log(3, 2, half), std::log(1.5)) < 1e-14);
  CHECK_THROWS_AS(sf::gen_stirling_log(0, 1, half), DomainError);
  CHECK_THROWS_AS(sf::gen_stirling_log(3, 0, half), DomainError);
  CHECK_THROWS_AS(sf::gen_stirling_log(3, 4, half), DomainError);
  CHECK_THROWS_AS(sf::gen_stirling_log(513, 1, half), CapacityError);
}

TEST_CASE("stirling triangle matches the exact rational oracle") {
  for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const AlphaParam ap(alpha);
    const auto tri = orc::stirling_log_triangle(64, alpha);
    for (int m = 1; m <= 64; ++m) {
      for (int k = 1; k <= m; ++k) {
        CHECK(log_rel_err(sf::gen_stirling_log(m, k, ap), tri[m - 1][k - 1]) <
              1e-10);
      }
    }
  }
}

TEST_CASE("stirling table object") {
  const AlphaParam ap(0.35);
  sf::StirlingTable table(ap, 8, 32);
  CHECK(table.rows() == 8);
  CHECK(table.alpha() == 0.35);
  CHECK(table.log_value(5, 3) == sf::gen_stirling_log(5, 3, ap));
  table.extend(20);
  CHECK(table.rows() == 20);
  CHECK(log_rel_err(table.log_value(20, 1),
                    std::lgamma(20 - 0.35) - std::lgamma(1 - 0.35)) < 1e-12);
  CHECK_THROWS_AS(table.extend(33), CapacityError);
  CHECK_THROWS_AS(table.log_value(21, 1), DomainError);
  CHECK_THROWS_AS(table.log_value(3, 0), DomainError);
}

TEST_CASE("partition block pmf") {
  const AlphaParam half(0.5);
  {
    const auto t = sf::pd_block_pmf(1, half);
    CHECK(t.size() == 1);
    CHECK(t.pmf(1) == 1.0);
  }
  {
    const auto t = sf::pd_block_pmf(2, half);
    CHECK(rel_err(t.pmf(1), 0.5) < 1e-14);
    CHECK(rel_err(t.pmf(2), 0.5) < 1e-14);
  }
  for (int m : {3, 17, 64}) {
    for (double alpha : {0.2, 0.6}) {
      const auto t = sf::pd_block_pmf(m, AlphaParam(alpha));
      double sum = 0.0;
      for (int k = 1; k <= m; ++k) sum += t.pmf(k);
      CHECK(std::fabs(sum - 1.0) < 1e-12);
      // The raw weights already sum to one analytically.
      CHECK(std::fabs(t.raw_log_total()) < 1e-12);
    }
  }
}

TEST_CASE("omega hand values") {
  const AlphaParam half(0.5);
  CHECK(rel_err(sf::omega(1, 1e-8, half), 1.0) < 1e-12);
  CHECK(rel_err(sf::omega(1, 1.0, half), 1.0) < 1e-12);
  CHECK(rel_err(sf::omega(1, 1e8, half), 1.0) < 1e-12);
  CHECK(rel_err(sf::omega(0, 2.0, half), 1.0) < 1e-12);
  CHECK(rel_err(sf::omega(2, 1.0, half), 1.0) < 1e-12);
  // m = 2 at any alpha: (1 - alpha) + alpha x at x = 1 collapses to 1.
  for (double alpha : {0.1, 0.4, 0.9}) {
    CHECK(rel_err(sf::omega(2, 1.0, AlphaParam(alpha)), 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(sf::omega(0, 0.0, half), DomainError);
  CHECK_THROWS_AS(sf::log_omega(0, condgem::kNegInf, half), DomainError);
}

TEST_CASE("omega matches its stirling polynomial") {
  // Omega_m(x) = sum_k S_alpha(m, k) (alpha x)^(k-1), evaluated from the
  // exact-rational triangle in long double log space.
  for (double alpha : {0.3, 0.7}) {
    const AlphaParam ap(alpha);
    const auto tri = orc::stirling_log_triangle(30, alpha);
    for (int m : {1, 2, 3, 5, 8, 12, 20, 30}) {
      for (double x : {0.1, 1.0, 10.0}) {
        std::vector<long double> logs;
        for (int k = 1; k <= m; ++k) {
          logs.push_back(static_cast<long double>(tri[m - 1][k - 1]) +
                         (k - 1) * (std::log(static_cast<long double>(alpha)) +
                                    std::log(static_cast<long double>(x))));
        }
        long double scale = logs.front();
        for (long double lt : logs) scale = std::max(scale, lt);
        long double acc = 0.0L;
        for (long double lt : logs) acc += std::exp(lt - scale);
        const double want = static_cast<double>(scale + std::log(acc));
        CHECK(std::fabs(sf::log_omega(m, std::log(x), ap) - want) < 1e-11);
        CHECK(log_rel_err(sf::log_omega(m, std::log(x), ap), want) < 1e-10);
      }
    }
  }
  // As x -> 0 only the k = 1 term survives.
  for (int m : {1, 2, 5, 8}) {
    const AlphaParam ap(0.45);
    const double want = std::lgamma(m - 0.45) - std::lgamma(1.0 - 0.45);
    CHECK(std::fabs(sf::log_omega(m, condgem::kNegInf, ap) - want) < 1e-11);
  }
}

TEST_CASE("tilted moment hand values") {
  const AlphaParam half(0.5);
  CHECK(rel_err(sf::tilted_moment(0, 1.0, half), std::exp(-1.0)) < 1e-13);
  CHECK(rel_err(sf::tilted_moment(1, 1.0, half), 0.5 * std::exp(-1.0)) <
        1e-13);
  CHECK(rel_err(sf::tilted_moment(2, 1.0, half), 0.5 * std::exp(-1.0)) <
        1e-13);
}

TEST_CASE("tilted moment matches the faa di bruno oracle") {
  for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const AlphaParam ap(alpha);
    for (double lambda : {0.5, 1.0, 2.0}) {
      for (int m = 0; m <= 6; ++m) {
        const double want = static_cast<double>(
            orc::tilted_derivative(m, lambda, alpha));
        CHECK(rel_err(sf::tilted_moment(m, lambda, ap), want) < 1e-6);
        CHECK(log_rel_err(sf::log_tilted_moment(m, lambda, ap),
                          std::log(want)) < 1e-6);
      }
    }
  }
}

TEST_CASE("stable density closed form at alpha one half") {
  const AlphaParam half(0.5);
  const double f1 = std::exp(-0.25) / (2.0 * std::sqrt(M_PI));
  CHECK(rel_err(sf::stable_pdf(1.0, half), f1) < 1e-10);
  for (int i = 0; i < 40; ++i) {
    const double t =
        0.05 * std::pow(20.0 / 0.05, i / 39.0);
    const double want =
        std::exp(-0.25 / t) / (2.0 * std::sqrt(M_PI) * std::pow(t, 1.5));
    CHECK(rel_err(sf::stable_pdf(t, half), want) < 1e-10);
  }
  CHECK_THROWS_AS(sf::stable_pdf(0.0, half), DomainError);
  CHECK_THROWS_AS(sf::stable_pdf(-1.0, half), DomainError);
}

TEST_CASE("stable density matches the convergent tail series") {
  for (double alpha : {0.3, 0.5, 0.7, 0.9}) {
    const AlphaParam ap(alpha);
    for (double t : {2.0, 8.0, 100.0, 1e4, 1e8}) {
      const double want =
          static_cast<double>(orc::stable_pdf_series(t, alpha));
      CHECK(rel_err(sf::stable_pdf(t, ap), want) < 1e-8);
    }
  }
}

TEST_CASE("stable log density is finite across deep parameter sweeps") {
  for (double alpha : {1e-6, 0.05, 0.5, 0.95, 0.998}) {
    const AlphaParam ap(alpha);
    for (int j = -40; j <= 40; j += 2) {
      const double t = std::ldexp(1.0, j);
      const double lp = sf::stable_log_pdf(t, ap);
      CHECK_FALSE(std::isnan(lp));
      CHECK(lp < 1e308);
    }
  }
  // Within ~1e-3 of the degenerate boundary the law is nearly a point mass
  // at t = 1 and far tails may refuse to converge; that must surface as a
  // clean NumericError, never a NaN.
  const AlphaParam near_one(1.0 - 1e-6);
  for (int j : {-40, 0, 40}) {
    const double t = std::ldexp(1.0, j);
    try {
      const double lp = sf::stable_log_pdf(t, near_one);
      CHECK_FALSE(std::isnan(lp));
    } catch (const NumericError&) {
      CHECK(true);
    }
  }
}

TEST_CASE("conditioned stable density reductions") {
  const AlphaParam half(0.5);
  const double f1 = sf::stable_pdf(1.0, half);
  // rho = 0: plain exponential tilt; at lambda = 1, t = 1 the tilt factor
  // e^(lambda^alpha - lambda t) is 1.
  CHECK(rel_err(sf::cond_stable_pdf(1.0, 1.0, 0.0, half), f1) < 1e-8);
  for (double t : {0.3, 1.0, 4.0}) {
    CHECK(rel_err(sf::cond_stable_pdf(t, 0.0, 0.0, half),
                  sf::stable_pdf(t, half)) < 1e-8);
    const double tilt =
        std::exp(std::sqrt(2.0) - 2.0 * t) * sf::stable_pdf(t, half);
    CHECK(rel_err(sf::cond_stable_pdf(t, 2.0, 0.0, half), tilt) < 1e-8);
  }
  CHECK_THROWS_AS(sf::cond_stable_pdf(1.0, 0.0, 0.5, half), DomainError);
  CHECK_THROWS_AS(sf::cond_stable_pdf(1.0, 0.0, 1.0, half), DomainError);
  CHECK_THROWS_AS(sf::cond_stable_pdf(0.0, 1.0, 1.0, half), DomainError);
}

TEST_CASE("conditioned stable density against moment closed forms") {
  // Integer rho: the normalizer is the tilted moment.
  for (double alpha : {0.4, 0.6}) {
    const AlphaParam ap(alpha);
    const double lambda = 1.3;
    const int m = 2;
    const double norm = sf::tilted_moment(m, lambda, ap);
    for (double t : {0.5, 2.0, 8.0}) {
      const double want = std::pow(t, m) * std::exp(-lambda * t) *
                          sf::stable_pdf(t, ap) / norm;
      CHECK(rel_err(sf::cond_stable_pdf(t, lambda, m, ap), want) < 1e-7);
    }
  }
  // Untilted fractional rho < alpha: E[S^rho] = Gamma(1 - rho/alpha) /
  // Gamma(1 - rho).
  for (double alpha : {0.5, 0.7}) {
    const AlphaParam ap(alpha);
    for (double rho : {-0.3, 0.2}) {
      const double norm = std::exp(std::lgamma(1.0 - rho / alpha) -
                                   std::lgamma(1.0 - rho));
      for (double t : {0.7, 1.5, 6.0}) {
        const double want = std::pow(t, rho) * sf::stable_pdf(t, ap) / norm;
        CHECK(rel_err(sf::cond_stable_pdf(t, 0.0, rho, ap), want) < 1e-7);
      }
    }
  }
}

TEST_CASE("conditioned stable density normalizer by quadrature") {
  const AlphaParam ap(0.6);
  const double lambda = 1.0;
  const double rho = 2.5;
  const auto integrand = [&](double t) {
    return std::pow(t, rho) * std::exp(-lambda * t) * sf::stable_pdf(t, ap);
  };
  const auto q = condgem::integrate_segments(
      integrand, {1e-6, 1.0, 5.0, 40.0}, 1e-10);
  CHECK(q.converged);
  for (double t : {0.8, 2.0, 6.0}) {
    const double want = integrand(t) / q.value;
    CHECK(rel_err(sf::cond_stable_pdf(t, lambda, rho, ap), want) < 1e-6);
  }
}

TEST_CASE("conditional block pmf brute force") {
  const AlphaParam half(0.5);
  {
    const auto t = sf::block_pmf_conditional(2, 1.0, half);
    CHECK(rel_err(t.pmf(1), 0.5) < 1e-13);
    CHECK(rel_err(t.pmf(2), 0.5) < 1e-13);
  }
  {
    const auto t = sf::block_pmf_conditional(1, 3.0, AlphaParam(0.3));
    CHECK(t.size() == 1);
    CHECK(t.pmf(1) == 1.0);
  }
  // Unnormalized weights S_alpha(m,k) alpha^(k-1) lambda^(k alpha),
  // rebuilt from the exact-rational triangle.
  struct Case {
    int m;
    double lambda;
    double alpha;
  };
  for (const Case c : {Case{3, 2.0, 0.3}, Case{7, 0.5, 0.6}}) {
    const AlphaParam ap(c.alpha);
    const auto tri = orc::stirling_log_triangle(c.m, c.alpha);
    std::vector<long double> logw;
    for (int k = 1; k <= c.m; ++k) {
      logw.push_back(static_cast<long double>(tri[c.m - 1][k - 1]) +
                     (k - 1) * std::log(static_cast<long double>(c.alpha)) +
                     k * c.alpha * std::log(static_cast<long double>(c.lambda)));
    }
    long double mx = logw[0];
    for (long double v : logw) mx = std::max(mx, v);
    long double total = 0.0L;
    for (long double v : logw) total += std::exp(v - mx);
    const auto t = sf::block_pmf_conditional(c.m, c.lambda, ap);
    for (int k = 1; k <= c.m; ++k) {
      const double want =
          static_cast<double>(std::exp(logw[k - 1] - mx) / total);
      CHECK(rel_err(t.pmf(k), want) < 1e-12);
    }
    // Raw total identity: lambda^alpha Omega_m(lambda^alpha) / Gamma(m).
    const double la = c.alpha * std::log(c.lambda);
    const double want_total =
        la + sf::log_omega(c.m, la, ap) - std::lgamma(c.m);
    CHECK(std::fabs(t.raw_log_total() - want_total) < 1e-11);
  }
}

TEST_CASE("first block count marginal pmf") {
  const AlphaParam half(0.5);
  {
    const auto t = sf::n_marginal_pmf(1, 1.0, half);
    CHECK(t.size() == 1);
    CHECK(t.pmf(1) == 1.0);
  }
  {
    const auto t = sf::n_marginal_pmf(2, 1.0, half);
    CHECK(rel_err(t.pmf(1), 0.5) < 1e-12);
    CHECK(rel_err(t.pmf(2), 0.5) < 1e-12);
  }
  {
    const auto t = sf::n_marginal_pmf(4, 0.7, AlphaParam(0.6));
    double sum = 0.0;
    for (int k = 1; k <= 4; ++k) sum += t.pmf(k);
    CHECK(std::fabs(sum - 1.0) < 1e-12);
  }
}

TEST_CASE("block count conditional on the ratio") {
  const AlphaParam half(0.5);
  {
    const auto t = sf::n_conditional_pmf(2, 0.5, half);
    CHECK(rel_err(t.pmf(1), 2.0 / 3.0) < 1e-13);
    CHECK(rel_err(t.pmf(2), 1.0 / 3.0) < 1e-13);
  }
  // Unnormalized weights C(m-1, k-1) E[B^(k-1)] (1-r)^(k-1) r^(m-k) with
  // B ~ Beta(1 - alpha, alpha); the normalizer is the mixed beta moment.
  for (int m : {2, 3, 8}) {
    for (double r : {0.2, 0.5, 0.8}) {
      for (double alpha : {0.3, 0.5, 0.7}) {
        const AlphaParam ap(alpha);
        const auto t = sf::n_conditional_pmf(m, r, ap);
        std::vector<double> w;
        double total = 0.0;
        for (int k = 1; k <= m; ++k) {
          const double choose = std::exp(std::lgamma(m) - std::lgamma(k) -
                                         std::lgamma(m - k + 1));
          const double v = choose *
                           orc::beta_power_moment(k - 1, 1.0 - alpha, alpha) *
                           std::pow(1.0 - r, k - 1) * std::pow(r, m - k);
          w.push_back(v);
          total += v;
        }
        for (int k = 1; k <= m; ++k) {
          CHECK(rel_err(t.pmf(k), w[k - 1] / total) < 1e-10);
        }
        CHECK(rel_err(sf::beta_mix_moment(m, r, ap), total) < 1e-10);
      }
    }
  }
}

TEST_CASE("mixed beta moment expansion") {
  // E[(r + (1-r) B)^(m-1)], B ~ Beta(1-alpha, alpha), vs its binomial
  // expansion in plain double arithmetic.
  for (int m : {1, 2, 5, 16, 32}) {
    for (double r : {0.1, 0.55, 0.9}) {
      for (double alpha : {0.2, 0.5, 0.8}) {
        const AlphaParam ap(alpha);
        double want = 0.0;
        for (int j = 0; j <= m - 1; ++j) {
          const double choose = std::exp(std::lgamma(m) - std::lgamma(j + 1) -
                                         std::lgamma(m - j));
          want += choose * orc::beta_power_moment(j, 1.0 - alpha, alpha) *
                  std::pow(1.0 - r, j) * std::pow(r, m - 1 - j);
        }
        CHECK(rel_err(sf::beta_mix_moment(m, r, ap), want) < 1e-10);
        CHECK(log_rel_err(sf::log_beta_mix_moment(m, r, ap),
                          std::log(want)) < 1e-10);
      }
    }
  }
}

TEST_CASE("subordinator increment density closed form") {
  // The argument is the jump relative to the rate.  At m = k = 1 with
  // L = lambda^alpha: f(y) = alpha L (1+y)^(alpha-1) exp(L(1 - (1+y)^alpha)),
  // i.e. the hazard form of the unscaled jump pushed through y = Y/lambda.
  for (double alpha : {0.3, 0.5, 0.7}) {
    const AlphaParam ap(alpha);
    for (double lambda : {0.5, 2.0}) {
      const double big_l = std::pow(lambda, alpha);
      for (double y : {0.3, 1.0, 3.0}) {
        const double want =
            alpha * big_l * std::pow(1.0 + y, alpha - 1.0) *
            std::exp(big_l * (1.0 - std::pow(1.0 + y, alpha)));
        CHECK(rel_err(sf::y_pdf(y, lambda, 1, 1, ap), want) < 1e-12);
      }
    }
  }
  // Survival identity by quadrature at lambda = 1, alpha = 1/2.
  const AlphaParam half(0.5);
  for (double y : {1.0, 3.0}) {
    const auto q = condgem::integrate(
        [&](double u) { return sf::y_pdf(u, 1.0, 1, 1, half); }, 0.0, y,
        1e-11);
    CHECK(q.converged);
    const double survival = std::exp(1.0 - std::sqrt(1.0 + y));
    CHECK(rel_err(1.0 - q.value, survival) < 1e-8);
  }
}

TEST_CASE("ratio density is the jacobian image of the increment density") {
  // With y the relative jump, r = 1/(1+y) gives f_R(r) = f(1/r - 1) / r^2.
  struct Case {
    int m;
    int k;
  };
  for (const Case c : {Case{1, 1}, Case{2, 1}, Case{2, 2}, Case{4, 3}}) {
    for (double alpha : {0.4, 0.6}) {
      const AlphaParam ap(alpha);
      for (double lambda : {0.7, 1.5}) {
        for (double r : {0.2, 0.5, 0.8}) {
          const double y = (1.0 - r) / r;
          const double want = sf::y_pdf(y, lambda, c.m, c.k, ap) / (r * r);
          CHECK(rel_err(sf::r1m_pdf(r, lambda, c.m, c.k, ap), want) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("ratio density closed form at m equals one") {
  for (double alpha : {0.3, 0.5, 0.7}) {
    const AlphaParam ap(alpha);
    for (double lambda : {0.6, 1.0, 2.0}) {
      const double la = std::pow(lambda, alpha);
      for (double r : {0.15, 0.5, 0.9}) {
        const double want = alpha * la * std::exp(la - la / std::pow(r, alpha)) *
                            std::pow(r, -alpha - 1.0);
        CHECK(rel_err(sf::r1m_pdf(r, lambda, 1, 1, ap), want) < 1e-10);
        CHECK(rel_err(sf::r_marginal_pdf(r, lambda, 1, ap), want) < 1e-10);
      }
    }
  }
}

TEST_CASE("ratio mixture closure") {
  // Marginal over the block count: sum_k q(k) f(r | k) = f(r).
  for (int m : {2, 5}) {
    for (double lambda : {0.5, 2.0}) {
      for (double alpha : {0.3, 0.7}) {
        const AlphaParam ap(alpha);
        const auto q = sf::n_marginal_pmf(m, lambda, ap);
        for (double r : {0.15, 0.5, 0.85}) {
          double mix = 0.0;
          for (int k = 1; k <= m; ++k) {
            mix += q.pmf(k) * sf::r1m_pdf(r, lambda, m, k, ap);
          }
          CHECK(rel_err(sf::r_marginal_pdf(r, lambda, m, ap), mix) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("stick conditional density transformed beta forms") {
  // m = 1 pins the block count at 1.
  for (double alpha : {0.35, 0.5, 0.75}) {
    const AlphaParam ap(alpha);
    for (double r : {0.25, 0.6}) {
      for (double frac : {0.15, 0.5, 0.9}) {
        const double w = r + frac * (1.0 - r);
        const double want = stick_given_blocks_pdf(w, r, 1, alpha);
        CHECK(rel_err(sf::w_conditional_pdf(w, r, 1, ap), want) < 1e-10);
      }
    }
  }
  // m = 3: mixture over the conditional block-count pmf.
  {
    const double alpha = 0.5, r = 0.4;
    const AlphaParam ap(alpha);
    const auto q = sf::n_conditional_pmf(3, r, ap);
    for (double w : {0.45, 0.6, 0.8, 0.95}) {
      double mix = 0.0;
      for (int k = 1; k <= 3; ++k) {
        mix += q.pmf(k) * stick_given_blocks_pdf(w, r, k, alpha);
      }
      CHECK(rel_err(sf::w_conditional_pdf(w, r, 3, ap), mix) < 1e-10);
    }
  }
}

TEST_CASE("negative moment hand values") {
  const AlphaParam half(0.5);
  CHECK(rel_err(sf::neg_moment(0.0, half), 1.0) < 1e-13);
  CHECK(rel_err(sf::neg_moment(1.0, half), 2.0) < 1e-13);
  CHECK(rel_err(sf::neg_moment(0.5, half), 1.0 / std::tgamma(1.5)) < 1e-13);
  CHECK_THROWS_AS(sf::neg_moment(-0.5, half), DomainError);
  CHECK_THROWS_AS(sf::neg_moment(-0.7, half), DomainError);
}

TEST_CASE("gem rate density closed forms") {
  // m = 0: lambda^alpha ~ Gamma(theta/alpha), so
  // f(y) = alpha y^(theta-1) e^(-y^alpha) / Gamma(theta/alpha).
  for (double alpha : {0.3, 0.6}) {
    const AlphaParam ap(alpha);
    for (double theta : {0.4, 1.2}) {
      for (double y : {0.3, 1.0, 4.0}) {
        const double m0 = alpha * std::pow(y, theta - 1.0) *
                          std::exp(-std::pow(y, alpha)) /
                          std::tgamma(theta / alpha);
        CHECK(rel_err(sf::gem_rate_pdf(y, 0, theta, ap), m0) < 1e-12);
        const double m1 = alpha * std::pow(y, theta + alpha - 1.0) *
                          std::exp(-std::pow(y, alpha)) /
                          std::tgamma((theta + alpha) / alpha);
        CHECK(rel_err(sf::gem_rate_pdf(y, 1, theta, ap), m1) < 1e-12);
      }
    }
  }
  // General m integrates to one.
  {
    const AlphaParam half(0.5);
    const auto q = condgem::integrate_segments(
        [&](double y) { return sf::gem_rate_pdf(y, 2, 0.5, half); },
        {1e-9, 1.0, 10.0, 100.0, 2000.0}, 1e-9);
    CHECK(q.converged);
    CHECK(rel_err(q.value, 1.0) < 1e-6);
  }
}

TEST_CASE("pmf table") {
  sf::PmfTable t({std::log(2.0), std::log(6.0)});
  CHECK(t.size() == 2);
  CHECK(rel_err(t.pmf(1), 0.25) < 1e-14);
  CHECK(rel_err(t.pmf(2), 0.75) < 1e-14);
  CHECK(rel_err(t.raw_log_total(), std::log(8.0)) < 1e-14);
  CHECK(rel_err(t.log_pmf(2), std::log(0.75)) < 1e-14);
  CHECK_THROWS_AS(t.pmf(0), DomainError);
  CHECK_THROWS_AS(t.pmf(3), DomainError);
  // Degenerate weights are numeric corruption, not a caller domain slip.
  CHECK_THROWS_AS(sf::PmfTable({0.0, condgem::kNegInf}), NumericError);
  CHECK_THROWS_AS(sf::PmfTable({0.0, std::nan("")}), NumericError);
  CHECK_THROWS_AS(sf::PmfTable({}), DomainError);

  condgem::RngState rng(11, 0);
  long hits = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const int k = t.sample(rng);
    CHECK(k >= 1);
    CHECK(k <= 2);
    hits += (k == 2);
  }
  // 3.3 sigma band around p = 0.75.
  CHECK(std::fabs(hits / static_cast<double>(n) - 0.75) <
        3.3 * std::sqrt(0.75 * 0.25 / n));
}

TEST_CASE("density tabulation") {
  const AlphaParam half(0.5);
  const auto grid = sf::tabulate_density(
      [&](double t) { return sf::stable_pdf(t, half); }, 0.01, 50.0, 2000,
      true);
  CHECK(grid.x.size() == 2000);
  CHECK(grid.f.size() == 2000);
  CHECK(grid.x.front() == 0.01);
  CHECK(rel_err(grid.x.back(), 50.0) < 1e-12);
  for (size_t i = 1; i < grid.x.size(); ++i) CHECK(grid.x[i] > grid.x[i - 1]);
  for (double v : grid.f) CHECK(v >= 0.0);
  const auto q = condgem::integrate(
      [&](double t) { return sf::stable_pdf(t, half); }, 0.01, 50.0, 1e-10);
  CHECK(rel_err(grid.trapezoid_mass, q.value) < 1e-3);
}

}  // TEST_SUITE
