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

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <tuple>

#include <boost/math/special_functions/gamma.hpp>

#include "condgem/logspace.hpp"
#include "condgem/quadrature.hpp"

namespace condgem::specfun {
namespace {

constexpr double kPi = 3.14159265358979323846;

// boost::math::lgamma instead of std::lgamma: no signgam global, so it is
// safe under the thread_local caching below.
double lg(double x) { return boost::math::lgamma(x); }

double log_choose(int n, int k) {
  return lg(n + 1.0) - lg(k + 1.0) - lg(n - k + 1.0);
}

// Per-thread, per-alpha memo of the Stirling triangle and the block-count
// log pmf rows derived from it.  pd_rows is sized to the cap up front and
// entries are heap-held so references stay valid across cache growth.
struct AlphaEntry {
  AlphaEntry(AlphaParam a, int m)
      : alpha(a.value()), table(a, m), pd_rows(kDefaultMaxM) {}
  double alpha;
  StirlingTable table;
  std::vector<std::vector<double>> pd_rows;  // pd_rows[m-1], built lazily
};

AlphaEntry& entry_for(AlphaParam alpha, int m_needed) {
  thread_local std::vector<std::unique_ptr<AlphaEntry>> entries;
  for (auto& e : entries) {
    if (e->alpha == alpha.value()) {
      if (e->table.rows() < m_needed) e->table.extend(m_needed);
      return *e;
    }
  }
  entries.push_back(
      std::make_unique<AlphaEntry>(alpha, std::max(m_needed, 1)));
  return *entries.back();
}

// log pmf row of the block-count law for a fixed m, cached.
const std::vector<double>& pd_log_row(int m, AlphaParam alpha) {
  AlphaEntry& e = entry_for(alpha, m);
  std::vector<double>& row = e.pd_rows[m - 1];
  if (row.empty()) {
    row.resize(m);
    const double la = std::log(alpha.value());
    const double lgm = lg(static_cast<double>(m));
    for (int k = 1; k <= m; ++k) {
      row[k - 1] = (k - 1) * la + lg(static_cast<double>(k)) +
                   e.table.log_value(m, k) - lgm;
    }
  }
  return row;
}

void check_m(int m, int min_m) {
  if (m < min_m) throw DomainError("m must be >= " + std::to_string(min_m));
  if (m > kDefaultMaxM) {
    throw CapacityError("m = " + std::to_string(m) + " exceeds cap " +
                        std::to_string(kDefaultMaxM));
  }
}

void check_k(int k, int m) {
  if (k < 1 || k > m) {
    throw DomainError("k must lie in [1, m], got k = " + std::to_string(k) +
                      ", m = " + std::to_string(m));
  }
}

void check_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(name) + " must be a positive finite real");
  }
}

void check_open_unit(double r, const char* name) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError(std::string(name) + " must lie strictly in (0, 1)");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PmfTable

PmfTable::PmfTable(std::vector<double> raw_log_weights)
    : logp_(std::move(raw_log_weights)) {
  if (logp_.empty()) throw DomainError("pmf table needs at least one cell");
  for (double w : logp_) {
    if (std::isnan(w)) throw NumericError("NaN weight in pmf table");
    if (w == kNegInf) throw NumericError("zero-mass cell in pmf table");
    if (w == -kNegInf) throw NumericError("infinite weight in pmf table");
  }
  raw_log_total_ = log_sum_exp(logp_);
  cdf_.resize(logp_.size());
  double acc = 0.0;
  for (size_t i = 0; i < logp_.size(); ++i) {
    logp_[i] -= raw_log_total_;
    acc += std::exp(logp_[i]);
    cdf_[i] = acc;
  }
  cdf_.back() = 1.0;  // kill the last-ulp rounding so sampling covers k = size
}

double PmfTable::log_pmf(int k) const {
  if (k < 1 || k > size()) throw DomainError("pmf index out of range");
  return logp_[k - 1];
}

double PmfTable::pmf(int k) const { return std::exp(log_pmf(k)); }

int PmfTable::sample(RngState& rng) const {
  const double u = rng.uniform();
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  return static_cast<int>(it - cdf_.begin()) + 1;
}

// ---------------------------------------------------------------------------
// Stirling triangle

StirlingTable::StirlingTable(AlphaParam alpha, int m_max, int cap)
    : alpha_(alpha.value()), cap_(cap) {
  if (cap_ < 1) throw DomainError("Stirling cap must be >= 1");
  rows_.push_back({0.0});  // S(1, 1) = 1
  extend(m_max);
}

void StirlingTable::extend(int m_max) {
  if (m_max > cap_) {
    throw CapacityError("Stirling triangle limited to m <= " +
                        std::to_string(cap_));
  }
  while (rows() < m_max) {
    const int m = rows();  // building row m+1 from row m
    const std::vector<double>& prev = rows_.back();
    std::vector<double> next(m + 1);
    for (int k = 1; k <= m; ++k) {
      const double grow = std::log(m - k * alpha_) + prev[k - 1];
      next[k - 1] = (k >= 2) ? log_add(prev[k - 2], grow) : grow;
    }
    next[m] = prev[m - 1];  // S(m+1, m+1) = S(m, m)
    rows_.push_back(std::move(next));
  }
}

double StirlingTable::log_value(int m, int k) const {
  if (m < 1 || m > rows()) throw DomainError("Stirling row out of range");
  check_k(k, m);
  return rows_[m - 1][k - 1];
}

double gen_stirling_log(int m, int k, AlphaParam alpha) {
  check_m(m, 1);
  check_k(k, m);
  return entry_for(alpha, m).table.log_value(m, k);
}

// ---------------------------------------------------------------------------
// Block-count laws and the Omega family

PmfTable pd_block_pmf(int m, AlphaParam alpha) {
  check_m(m, 1);
  return PmfTable(pd_log_row(m, alpha));
}

double log_omega(int m, double log_x, AlphaParam alpha) {
  if (std::isnan(log_x) || log_x == -kNegInf) {
    throw DomainError("log_x must be finite or -inf");
  }
  check_m(m, 0);
  if (m == 0) {
    if (log_x == kNegInf) {
      throw DomainError("omega(0, x) has a pole at x = 0");
    }
    return -std::log(alpha.value()) - log_x;
  }
  if (m == 1) return 0.0;
  const std::vector<double>& row = pd_log_row(m, alpha);
  const double lgm = lg(static_cast<double>(m));
  double acc = lgm + row[0];  // k = 1 term, exact at x = 0
  if (log_x != kNegInf) {
    for (int k = 2; k <= m; ++k) {
      acc = log_add(acc, lgm + row[k - 1] + (k - 1) * log_x -
                             lg(static_cast<double>(k)));
    }
  }
  return acc;
}

double omega(int m, double x, AlphaParam alpha) {
  if (x < 0.0 || std::isnan(x)) throw DomainError("omega needs x >= 0");
  return std::exp(log_omega(m, x > 0.0 ? std::log(x) : kNegInf, alpha));
}

double log_tilted_moment(int m, double lambda, AlphaParam alpha) {
  check_m(m, 0);
  const double a = alpha.value();
  if (m == 0) {
    if (lambda < 0.0 || std::isnan(lambda)) {
      throw DomainError("lambda must be >= 0");
    }
    return -std::pow(lambda, a);
  }
  check_positive(lambda, "lambda");  // bare moments of the stable law diverge
  const double log_lambda = std::log(lambda);
  const double big_l = std::pow(lambda, a);
  return std::log(a) - big_l + (a - m) * log_lambda +
         log_omega(m, a * log_lambda, alpha);
}

double tilted_moment(int m, double lambda, AlphaParam alpha) {
  return std::exp(log_tilted_moment(m, lambda, alpha));
}

PmfTable block_pmf_conditional(int m, double lambda, AlphaParam alpha) {
  check_m(m, 1);
  check_positive(lambda, "lambda");
  const double a = alpha.value();
  const double log_big_l = a * std::log(lambda);
  const std::vector<double>& row = pd_log_row(m, alpha);
  std::vector<double> raw(m);
  for (int k = 1; k <= m; ++k) {
    raw[k - 1] = row[k - 1] + k * log_big_l - lg(static_cast<double>(k));
  }
  return PmfTable(std::move(raw));
}

PmfTable n_marginal_pmf(int m, double lambda, AlphaParam alpha) {
  check_m(m, 1);
  check_positive(lambda, "lambda");
  const double a = alpha.value();
  const double log_big_l = a * std::log(lambda);
  const double lg1a = lg(1.0 - a);
  const double log_om_m = log_omega(m, log_big_l, alpha);
  std::vector<double> raw(m);
  for (int k = 1; k <= m; ++k) {
    raw[k - 1] = lg(k - a) - lg1a + log_choose(m - 1, k - 1) +
                 log_omega(m - k, log_big_l, alpha) + std::log(a) + log_big_l -
                 log_om_m;
  }
  return PmfTable(std::move(raw));
}

double log_beta_mix_moment(int m, double r, AlphaParam alpha) {
  check_m(m, 1);
  check_open_unit(r, "r");
  if (m == 1) return 0.0;
  const double a = alpha.value();
  const double log_r = std::log(r);
  const double log_1mr = std::log1p(-r);
  const double lg1a = lg(1.0 - a);
  double acc = kNegInf;
  for (int j = 0; j <= m - 1; ++j) {
    // E[beta^j] = Gamma(j+1-alpha) / (Gamma(1-alpha) Gamma(j+1))
    acc = log_add(acc, log_choose(m - 1, j) + lg(j + 1.0 - a) - lg1a -
                           lg(j + 1.0) + j * log_1mr + (m - 1 - j) * log_r);
  }
  return acc;
}

double beta_mix_moment(int m, double r, AlphaParam alpha) {
  return std::exp(log_beta_mix_moment(m, r, alpha));
}

PmfTable n_conditional_pmf(int m, double r, AlphaParam alpha) {
  check_m(m, 1);
  check_open_unit(r, "r");
  const double a = alpha.value();
  const double log_r = std::log(r);
  const double log_1mr = std::log1p(-r);
  const double lg1a = lg(1.0 - a);
  std::vector<double> raw(m);
  for (int k = 1; k <= m; ++k) {
    raw[k - 1] = lg(k - a) - lg1a - lg(static_cast<double>(k)) +
                 log_choose(m - 1, k - 1) + (k - 1) * log_1mr +
                 (m - k) * log_r;
  }
  PmfTable table(std::move(raw));
  // The raw total has a closed form; a mismatch means the term table is
  // corrupt, which must never ship a silently wrong law.
  const double diff =
      table.raw_log_total() - log_beta_mix_moment(m, r, alpha);
  if (!(std::abs(std::expm1(diff)) <= 1e-10)) {
    throw NumericError("n_conditional_pmf normalizer cross-check failed");
  }
  return table;
}

// ---------------------------------------------------------------------------
// Stable density via the Zolotarev integral

double zolotarev_log_a0(AlphaParam alpha) {
  const double a = alpha.value();
  return (a * std::log(a) + (1.0 - a) * std::log1p(-a)) / (1.0 - a);
}

double zolotarev_log_a(double u, AlphaParam alpha) {
  if (!(u > 0.0 && u < kPi)) {
    throw DomainError("Zolotarev kernel needs u in (0, pi)");
  }
  const double a = alpha.value();
  return (a * std::log(std::sin(a * u)) +
          (1.0 - a) * std::log(std::sin((1.0 - a) * u)) -
          std::log(std::sin(u))) /
         (1.0 - a);
}

namespace {

// log(sin(x)/x) on (0, pi); series below 0.06 where the direct form loses
// the leading bits of sin(x)/x - 1.
double log_sinc(double x) {
  if (x < 0.06) {
    const double x2 = x * x;
    return -x2 * (1.0 / 6.0 +
                  x2 * (1.0 / 180.0 + x2 * (1.0 / 2835.0 + x2 / 37800.0)));
  }
  return std::log(std::sin(x) / x);
}

}  // namespace

double stable_log_pdf(double t, AlphaParam alpha, double rel_tol) {
  check_positive(t, "t");
  const double a = alpha.value();
  const double b = a / (1.0 - a);
  const double log_v = -b * std::log(t);
  const double la0 = zolotarev_log_a0(alpha);
  const double prefactor =
      std::log(a / ((1.0 - a) * kPi)) - std::log(t) / (1.0 - a);
  const double drop = std::max(30.0, -std::log(rel_tol) + 16.0);

  // h(u) = log A(u) - A(u) v peaks at u -> 0 when A(0+) v >= 1 and at the
  // interior root of A(u) v = 1 otherwise.  Both peak heights are analytic,
  // and writing the integrand as h - h_max in closed form below avoids
  // subtracting two floats that share a huge A v term; that subtraction is
  // what used to drown the deep tails in rounding noise.
  const double phi = la0 + log_v;
  const bool edge_peak = phi >= 0.0;
  const double h_max = edge_peak
                           ? ((phi > 709.0) ? kNegInf : la0 - std::exp(phi))
                           : -log_v - 1.0;
  // Once exp(prefactor + h_max) underflows, the density is zero to every
  // caller and the integrand is too ill-conditioned to refine further.
  if (h_max == kNegInf || prefactor + h_max + std::log(kPi) < -745.0) {
    return kNegInf;
  }
  const double a0v = edge_peak ? std::exp(phi) : 0.0;

  // Each half of (0, pi) is integrated in a log coordinate anchored at its
  // endpoint, which keeps the peak resolvable in doubles even when it sits
  // within 1e-200 of 0 or pi (t far into either tail does that).
  auto left_log_g = [&](double s) {  // u = exp(s), Jacobian folded in
    const double u = std::exp(s);
    const double delta =  // log A(u) - log A(0+), stable as u -> 0
        (a * log_sinc(a * u) + (1.0 - a) * log_sinc((1.0 - a) * u) -
         log_sinc(u)) /
        (1.0 - a);
    if (edge_peak) {
      if (!(delta < 700.0)) return kNegInf;
      return delta - a0v * std::expm1(delta) + s;
    }
    const double psi = phi + delta;
    if (!(psi < 700.0)) return kNegInf;
    return psi + 1.0 - std::exp(psi) + s;
  };
  auto right_log_g = [&](double w) {  // pi - u = exp(w), Jacobian folded in
    const double ww = std::exp(w);
    const double u = kPi - ww;
    // sin(pi - ww) folds to sin(ww); the other two factors sit away from
    // the zeros of sin, so forming u directly costs nothing for them.
    const double la = (a * std::log(std::sin(a * u)) +
                       (1.0 - a) * std::log(std::sin((1.0 - a) * u)) -
                       std::log(std::sin(ww))) /
                      (1.0 - a);
    const double x = edge_peak ? la - la0 : la + log_v;
    if (!(x < 700.0)) return kNegInf;
    return edge_peak ? x - a0v * std::expm1(x) + w
                     : x + 1.0 - std::exp(x) + w;
  };

  // Coarse scan from the shared midpoint down.  Every chart value is <= its
  // coordinate (h <= h_max), the uphill slope is at most 1/(1-a) + 2, and h
  // is single-peaked, so a monotone plunge this deep cannot come back.
  const double smax = std::log(0.5 * kPi);
  const double step = std::min(1.0, 8.0 * (1.0 - a));
  const double slack = step * (1.0 / (1.0 - a) + 2.0) + 3.0;
  struct Chart {
    std::vector<double> s, v;
    double best = kNegInf;
  };
  auto scan = [&](const std::function<double(double)>& log_g) {
    Chart c;
    for (double x = smax; x > -800.0; x -= step) {
      const double v = log_g(x);
      const bool plunge =
          !c.v.empty() && v <= c.v.back() && v < c.best - drop - slack;
      c.s.push_back(x);
      c.v.push_back(v);
      c.best = std::max(c.best, v);
      if (plunge) break;
    }
    return c;
  };
  const Chart left = scan(left_log_g);
  const Chart right = scan(right_log_g);
  const double gb = std::max(left.best, right.best);
  if (gb == kNegInf) return kNegInf;
  const double cut = gb - drop - slack;
  const double tol = std::max(0.5 * rel_tol, 3e-13);

  auto chart_mass = [&](const Chart& c,
                        const std::function<double(double)>& log_g) {
    size_t last = 0;
    bool live = false;
    for (size_t i = 0; i < c.v.size(); ++i) {
      if (c.v[i] >= cut) {
        last = i;
        live = true;
      }
    }
    if (!live) return 0.0;
    std::vector<double> pts;  // scan points down to one past the cut
    for (size_t i = std::min(last + 1, c.s.size() - 1) + 1; i-- > 0;) {
      pts.push_back(c.s[i]);
    }
    auto g = [&](double x) {
      const double v = log_g(x);
      return v == kNegInf ? 0.0 : std::exp(v - gb);
    };
    QuadResult q = integrate_segments(g, pts, tol);
    if (!q.converged) {
      throw NumericError("stable density quadrature did not converge");
    }
    return std::max(q.value, 0.0);
  };

  const double total =
      chart_mass(left, left_log_g) + chart_mass(right, right_log_g);
  if (!(total > 0.0)) return kNegInf;
  return prefactor + h_max + gb + std::log(total);
}

double stable_pdf(double t, AlphaParam alpha, double rel_tol) {
  return std::exp(stable_log_pdf(t, alpha, rel_tol));
}

// ---------------------------------------------------------------------------
// Tilted and weighted stable densities

namespace {

// Normalizers with no closed form are cached: grid tabulation calls the
// density at thousands of points with identical parameters.
double quadrature_norm(double lambda, double rho, AlphaParam alpha,
                       double rel_tol) {
  thread_local std::map<std::tuple<double, double, double>, double> cache;
  const auto key = std::make_tuple(lambda, rho, alpha.value());
  const auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto log_f = [&](double t) {
    return rho * std::log(t) - lambda * t + stable_log_pdf(t, alpha);
  };
  const auto [lo, hi] = bracket_log_mass(log_f, 1.0);
  LogQuadResult q = log_integrate(log_f, lo, hi, 0.1 * rel_tol);
  if (!q.converged) {
    throw NumericError("weighted stable normalizer did not converge");
  }
  cache[key] = q.log_value;
  return q.log_value;
}

}  // namespace

double cond_stable_log_pdf(double t, double lambda, double rho,
                           AlphaParam alpha, double rel_tol) {
  check_positive(t, "t");
  if (lambda < 0.0 || std::isnan(lambda)) {
    throw DomainError("lambda must be >= 0");
  }
  if (std::isnan(rho) || std::isinf(rho)) {
    throw DomainError("rho must be finite");
  }
  const double a = alpha.value();
  if (lambda == 0.0 && rho >= a) {
    throw DomainError("lambda = 0 needs rho < alpha for an integrable tail");
  }

  double log_norm;
  const bool integer_rho = rho >= 0.0 && rho == std::floor(rho) &&
                           rho <= static_cast<double>(kDefaultMaxM);
  if (rho == 0.0) {
    log_norm = -std::pow(lambda, a);
  } else if (lambda == 0.0) {
    // E[S^rho] with rho < alpha, through the negative-moment identity.
    log_norm = lg(1.0 - rho / a) - lg(1.0 - rho);
  } else if (integer_rho) {
    log_norm = log_tilted_moment(static_cast<int>(rho), lambda, alpha);
  } else {
    log_norm = quadrature_norm(lambda, rho, alpha, rel_tol);
  }
  return rho * std::log(t) - lambda * t +
         stable_log_pdf(t, alpha, std::min(rel_tol, 1e-10)) - log_norm;
}

double cond_stable_pdf(double t, double lambda, double rho, AlphaParam alpha,
                       double rel_tol) {
  return std::exp(cond_stable_log_pdf(t, lambda, rho, alpha, rel_tol));
}

// ---------------------------------------------------------------------------
// Stick-breaking component densities

double y_log_pdf(double y, double lambda, int m, int k, AlphaParam alpha) {
  check_m(m, 1);
  check_k(k, m);
  check_positive(y, "y");
  check_positive(lambda, "lambda");
  const double a = alpha.value();
  const double log_big_l = a * std::log(lambda);
  const double big_l = std::exp(log_big_l);
  const double log1py = std::log1p(y);
  return log_omega(m, log_big_l + a * log1py, alpha) -
         lg(static_cast<double>(k)) - log_omega(m - k, log_big_l, alpha) +
         (k - 1) * std::log(y) + (a - m) * log1py -
         big_l * std::expm1(a * log1py);
}

double y_pdf(double y, double lambda, int m, int k, AlphaParam alpha) {
  return std::exp(y_log_pdf(y, lambda, m, k, alpha));
}

double r1m_log_pdf(double r, double lambda, int m, int k, AlphaParam alpha) {
  check_m(m, 1);
  check_k(k, m);
  check_open_unit(r, "r");
  check_positive(lambda, "lambda");
  const double a = alpha.value();
  const double log_big_l = a * std::log(lambda);
  const double big_l = std::exp(log_big_l);
  const double log_r = std::log(r);
  const double log_lr = log_big_l - a * log_r;  // log of L / r^alpha
  if (log_lr > 709.0) return kNegInf;           // e^L / e^(L/r^a) underflows
  return log_omega(m, log_lr, alpha) - lg(static_cast<double>(k)) -
         log_omega(m - k, log_big_l, alpha) + (k - 1) * std::log1p(-r) +
         (m - k) * log_r + big_l - std::exp(log_lr) - (a + 1.0) * log_r;
}

double r1m_pdf(double r, double lambda, int m, int k, AlphaParam alpha) {
  return std::exp(r1m_log_pdf(r, lambda, m, k, alpha));
}

double r_marginal_log_pdf(double r, double lambda, int m, AlphaParam alpha) {
  check_m(m, 0);
  check_open_unit(r, "r");
  check_positive(lambda, "lambda");
  const double a = alpha.value();
  const double log_big_l = a * std::log(lambda);
  const double big_l = std::exp(log_big_l);
  const double log_r = std::log(r);
  const double log_lr = log_big_l - a * log_r;
  if (log_lr > 709.0) return kNegInf;
  const double log_base = std::log(a) + log_big_l + big_l -
                          std::exp(log_lr) - (a + 1.0) * log_r;
  if (m == 0) return log_base;
  return log_omega(m, log_lr, alpha) - log_omega(m, log_big_l, alpha) +
         log_beta_mix_moment(m, r, alpha) + log_base;
}

double r_marginal_pdf(double r, double lambda, int m, AlphaParam alpha) {
  return std::exp(r_marginal_log_pdf(r, lambda, m, alpha));
}

double w_conditional_log_pdf(double w, double r, int m, AlphaParam alpha) {
  check_m(m, 1);
  check_open_unit(r, "r");
  if (!(w > r && w < 1.0)) {
    throw DomainError("w must lie strictly in (r, 1)");
  }
  const double a = alpha.value();
  return -lg(1.0 - a) - lg(a) - m * std::log(w) - a * std::log1p(-w) +
         (a - 1.0) * std::log(w - r) + (m - a) * std::log(r) -
         log_beta_mix_moment(m, r, alpha);
}

double w_conditional_pdf(double w, double r, int m, AlphaParam alpha) {
  return std::exp(w_conditional_log_pdf(w, r, m, alpha));
}

double neg_moment(double theta, AlphaParam alpha) {
  const double a = alpha.value();
  if (!(theta > -a) || !std::isfinite(theta)) {
    throw DomainError("neg_moment needs theta > -alpha");
  }
  return std::exp(lg(theta / a + 1.0) - lg(theta + 1.0));
}

double gem_rate_log_pdf(double y, int m, double theta, AlphaParam alpha) {
  check_m(m, 0);
  check_positive(y, "y");
  const double a = alpha.value();
  if (!(theta > -a) || !std::isfinite(theta)) {
    throw DomainError("gem rate needs theta > -alpha");
  }
  if (m == 0 && !(theta > 0.0)) {
    throw DomainError("gem rate with m = 0 needs theta > 0");
  }
  const double log_y = std::log(y);
  return std::log(a) + log_omega(m, a * log_y, alpha) +
         (a + theta - 1.0) * log_y - std::pow(y, a) - lg(m + theta) -
         (lg(theta / a + 1.0) - lg(theta + 1.0));
}

double gem_rate_pdf(double y, int m, double theta, AlphaParam alpha) {
  return std::exp(gem_rate_log_pdf(y, m, theta, alpha));
}

DensityGrid tabulate_density(const std::function<double(double)>& pdf,
                             double lo, double hi, int points,
                             bool log_spacing) {
  if (!(lo < hi)) throw DomainError("grid needs lo < hi");
  if (points < 2) throw DomainError("grid needs at least two points");
  if (log_spacing && !(lo > 0.0)) {
    throw DomainError("log-spaced grid needs lo > 0");
  }
  DensityGrid out;
  out.x.resize(points);
  out.f.resize(points);
  const double step =
      log_spacing ? std::log(hi / lo) / (points - 1) : (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    double x = log_spacing ? lo * std::exp(step * i) : lo + step * i;
    if (i == points - 1) x = hi;
    out.x[i] = x;
    out.f[i] = pdf(x);
  }
  for (int i = 0; i + 1 < points; ++i) {
    out.trapezoid_mass +=
        0.5 * (out.f[i] + out.f[i + 1]) * (out.x[i + 1] - out.x[i]);
  }
  return out;
}

}  // namespace condgem::specfun
