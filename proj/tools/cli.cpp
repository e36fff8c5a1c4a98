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

#include "cli.hpp"

#include <functional>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "condgem/io.hpp"
#include "condgem/param.hpp"
#include "condgem/rng.hpp"
#include "condgem/specfun.hpp"
#include "condgem/stickbreak.hpp"
#include "condgem/verify.hpp"

namespace condgem::cli {
namespace {

using io::csv_field;
using io::format_double;
using io::json_number;

bool csv_mode(const CliConfig& c) {
  if (c.format == "csv") return true;
  if (c.format == "json-lines") return false;
  throw DomainError("unknown format: " + c.format);
}

int need_m(const CliConfig& c, int at_least) {
  if (!c.m || *c.m < at_least) {
    throw DomainError("this operation needs --m >= " +
                      std::to_string(at_least));
  }
  return *c.m;
}

int run_sample(const CliConfig& c, std::ostream& os) {
  stickbreak::LawSpec law;
  law.alpha = AlphaParam(c.alpha);
  stickbreak::Pipeline p;
  if (c.law == "m0") {
    p = stickbreak::Pipeline::kM0;
    law.m = c.m.value_or(0);
    law.lambda = c.lambda;
  } else if (c.law == "m1") {
    p = stickbreak::Pipeline::kM1;
    law.m = c.m.value_or(1);
    law.lambda = c.lambda;
  } else if (c.law == "general") {
    p = stickbreak::Pipeline::kGeneral;
    law.m = need_m(c, 1);
    law.lambda = c.lambda;
  } else if (c.law == "gem") {
    p = stickbreak::Pipeline::kGem;
    law.m = c.m.value_or(0);
    law.rate = stickbreak::LawSpec::Rate::kGem;
    law.theta = c.theta;
  } else if (c.law == "half") {
    p = stickbreak::Pipeline::kHalf;
    law.m = c.m.value_or(0);
    law.lambda = c.lambda;
  } else {
    throw DomainError("unknown law: " + c.law);
  }

  const bool csv = csv_mode(c);
  if (csv) os << "draw,k,w,r,n,ptilde,remainder,lambda\n";
  RngState rng(c.seed, c.stream);
  for (long d = 0; d < c.draws; ++d) {
    const auto s = stickbreak::draw_sticks(p, law, c.n_sticks, rng);
    double running = 1.0;
    for (int k = 0; k < c.n_sticks; ++k) {
      running *= s.w[k];
      const bool has_n = !s.n.empty();
      if (csv) {
        os << d << ',' << (k + 1) << ',' << format_double(s.w[k]) << ','
           << format_double(s.r[k]) << ','
           << (has_n ? std::to_string(s.n[k]) : std::string()) << ','
           << format_double(s.ptilde[k]) << ',' << format_double(running)
           << ',' << format_double(s.lambda_path[k + 1]) << '\n';
      } else {
        os << "{\"draw\":" << d << ",\"k\":" << (k + 1)
           << ",\"w\":" << json_number(s.w[k])
           << ",\"r\":" << json_number(s.r[k]) << ",\"n\":"
           << (has_n ? std::to_string(s.n[k]) : std::string("null"))
           << ",\"ptilde\":" << json_number(s.ptilde[k])
           << ",\"remainder\":" << json_number(running)
           << ",\"lambda\":" << json_number(s.lambda_path[k + 1]) << "}\n";
      }
    }
  }
  return 0;
}

int run_pmf(const CliConfig& c, std::ostream& os) {
  const AlphaParam ap(c.alpha);
  specfun::PmfTable table = [&]() {
    if (c.which == "blocks") return specfun::pd_block_pmf(need_m(c, 1), ap);
    if (c.which == "blocks-cond") {
      return specfun::block_pmf_conditional(need_m(c, 1), c.lambda, ap);
    }
    if (c.which == "n-marginal") {
      return specfun::n_marginal_pmf(need_m(c, 1), c.lambda, ap);
    }
    if (c.which == "n-cond") {
      return specfun::n_conditional_pmf(need_m(c, 1), c.r, ap);
    }
    throw DomainError("unknown pmf: " + c.which);
  }();

  const bool csv = csv_mode(c);
  if (csv) os << "k,probability\n";
  for (int k = 1; k <= table.size(); ++k) {
    if (csv) {
      os << k << ',' << format_double(table.pmf(k)) << '\n';
    } else {
      os << "{\"k\":" << k << ",\"probability\":" << json_number(table.pmf(k))
         << "}\n";
    }
  }
  return 0;
}

int run_density(const CliConfig& c, std::ostream& os) {
  const AlphaParam ap(c.alpha);
  std::function<double(double)> pdf;
  if (c.which == "stable") {
    pdf = [ap](double t) { return specfun::stable_pdf(t, ap); };
  } else if (c.which == "cond-stable") {
    const double rho = static_cast<double>(c.m.value_or(0));
    pdf = [=](double t) { return specfun::cond_stable_pdf(t, c.lambda, rho, ap); };
  } else if (c.which == "y") {
    const int m = need_m(c, 1);
    pdf = [=](double t) { return specfun::y_pdf(t, c.lambda, m, c.k, ap); };
  } else if (c.which == "r1m") {
    const int m = need_m(c, 1);
    pdf = [=](double t) { return specfun::r1m_pdf(t, c.lambda, m, c.k, ap); };
  } else if (c.which == "w-cond") {
    const int m = need_m(c, 1);
    pdf = [=](double t) { return specfun::w_conditional_pdf(t, c.r, m, ap); };
  } else if (c.which == "gem-lambda") {
    const int m = c.m.value_or(0);
    pdf = [=](double t) { return specfun::gem_rate_pdf(t, m, c.theta, ap); };
  } else {
    throw DomainError("unknown density: " + c.which);
  }

  const auto grid = specfun::tabulate_density(pdf, c.grid_min, c.grid_max,
                                              c.grid_points, c.log_grid);
  const bool csv = csv_mode(c);
  if (csv) os << "t,f\n";
  for (size_t i = 0; i < grid.x.size(); ++i) {
    if (csv) {
      os << format_double(grid.x[i]) << ',' << format_double(grid.f[i])
         << '\n';
    } else {
      os << "{\"t\":" << json_number(grid.x[i])
         << ",\"f\":" << json_number(grid.f[i]) << "}\n";
    }
  }
  return 0;
}

int run_verify(const CliConfig& c, std::ostream& os) {
  std::vector<std::string> names;
  if (c.suite == "all") {
    names = verify::suite_names();
  } else {
    names.push_back(c.suite);
  }
  verify::SuiteConfig sc;
  sc.draws = c.verify_draws;
  sc.level = c.level;
  sc.alpha = c.v_alpha;
  sc.lambda = c.v_lambda;
  sc.theta = c.v_theta;
  sc.m = c.v_m;

  const bool csv = csv_mode(c);
  if (csv) os << verify::csv_header() << '\n';
  RngState rng(c.seed, c.stream);
  bool ok = true;
  for (const auto& name : names) {
    const auto reports = verify::run_suite(name, sc, rng);
    for (const auto& r : reports) {
      os << (csv ? verify::to_csv_row(r) : verify::to_json_line(r)) << '\n';
      if (!r.passed) {
        std::cerr << "FAIL [" << r.suite << "] " << r.detail
                  << " statistic=" << format_double(r.statistic)
                  << " threshold=" << format_double(r.threshold) << '\n';
      }
    }
    ok = ok && verify::all_passed(reports);
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const CliConfig& c, std::ostream& os) {
  try {
    int code = 0;
    if (c.command == "sample") {
      code = run_sample(c, os);
    } else if (c.command == "pmf") {
      code = run_pmf(c, os);
    } else if (c.command == "density") {
      code = run_density(c, os);
    } else if (c.command == "verify") {
      code = run_verify(c, os);
    } else {
      throw DomainError("unknown command: " + c.command);
    }
    os.flush();
    if (os.fail()) {
      std::cerr << "error: write failure\n";
      return 3;
    }
    return code;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace condgem::cli
