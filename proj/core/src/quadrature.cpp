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

#include "condgem/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "condgem/logspace.hpp"

namespace condgem {
namespace {

// Gauss-Kronrod 7/15 pair.  Positive Kronrod abscissae; even indices are the
// embedded Gauss-7 nodes.
constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
constexpr double kWg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double fsum = f(c - h * kXgk[i]) + f(c + h * kXgk[i]);
    resk += kWgk[i] * fsum;
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }
  // Plain |K15 - G7| gap: pessimistic for the Kronrod value, which is the
  // direction adaptivity wants.
  return Panel{a, b, resk * h, std::abs((resk - resg) * h)};
}

QuadResult run_adaptive(const std::function<double(double)>& f,
                        std::priority_queue<Panel>& heap, double total,
                        double err, long evals, double rel_tol, double abs_tol,
                        int max_panels) {
  int panels = static_cast<int>(heap.size());
  while (err > std::max(abs_tol, rel_tol * std::abs(total)) &&
         panels < max_panels) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted in doubles
      heap.push(Panel{worst.a, worst.b, worst.value, 0.0});
      continue;
    }
    Panel left = eval_panel(f, worst.a, mid);
    Panel right = eval_panel(f, mid, worst.b);
    evals += 30;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  QuadResult out;
  out.value = total;
  out.abs_error = err;
  out.evaluations = evals;
  out.converged = err <= std::max(abs_tol, rel_tol * std::abs(total));
  return out;
}

}  // namespace

QuadResult integrate_segments(const std::function<double(double)>& f,
                              const std::vector<double>& pts, double rel_tol,
                              double abs_tol, int max_panels) {
  std::priority_queue<Panel> heap;
  double total = 0.0, err = 0.0;
  long evals = 0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i] < pts[i + 1])) continue;  // skip degenerate segments
    Panel p = eval_panel(f, pts[i], pts[i + 1]);
    evals += 15;
    total += p.value;
    err += p.error;
    heap.push(p);
  }
  if (heap.empty()) return QuadResult{0.0, 0.0, 0, true};
  return run_adaptive(f, heap, total, err, evals, rel_tol, abs_tol,
                      max_panels);
}

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double rel_tol, double abs_tol,
                     int max_panels) {
  return integrate_segments(f, {a, b}, rel_tol, abs_tol, max_panels);
}

LogQuadResult log_integrate(const std::function<double(double)>& log_f,
                            double a, double b, double rel_tol,
                            int max_panels) {
  // Shift by the max over a coarse interior scan so exp() cannot overflow.
  double m = kNegInf;
  constexpr int kScan = 64;
  for (int i = 1; i < kScan; ++i) {
    m = std::max(m, log_f(a + (b - a) * i / kScan));
  }
  LogQuadResult out;
  if (m == kNegInf) {
    out.log_value = kNegInf;
    out.converged = true;
    return out;
  }
  auto shifted = [&](double x) {
    const double lf = log_f(x);
    return lf == kNegInf ? 0.0 : std::exp(lf - m);
  };
  QuadResult q = integrate(shifted, a, b, rel_tol, 0.0, max_panels);
  if (q.value <= 0.0) {
    out.log_value = kNegInf;
    out.converged = false;
    return out;
  }
  out.log_value = m + std::log(q.value);
  out.rel_error = q.abs_error / q.value;
  out.converged = q.converged;
  return out;
}

std::pair<double, double> bracket_log_mass(
    const std::function<double(double)>& log_f, double hint, double drop,
    int jmax) {
  int best_j = 0;
  double best = kNegInf;
  std::vector<double> vals(2 * jmax + 1, kNegInf);
  for (int j = -jmax; j <= jmax; ++j) {
    const double v = log_f(hint * std::exp2(j));
    vals[j + jmax] = v;
    if (v > best) {
      best = v;
      best_j = j;
    }
  }
  if (best == kNegInf) return {hint * std::exp2(-jmax), hint * std::exp2(jmax)};
  int jlo = best_j;
  while (jlo > -jmax && vals[jlo + jmax] > best - drop) --jlo;
  int jhi = best_j;
  while (jhi < jmax && vals[jhi + jmax] > best - drop) ++jhi;
  // Half-octave refinement pulls the edges in without losing coverage.
  double lo = hint * std::exp2(jlo);
  double hi = hint * std::exp2(jhi);
  if (jlo < best_j && log_f(lo * std::sqrt(2.0)) <= best - drop)
    lo *= std::sqrt(2.0);
  if (jhi > best_j && log_f(hi / std::sqrt(2.0)) <= best - drop)
    hi /= std::sqrt(2.0);
  return {lo, hi};
}

}  // namespace condgem
