// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance is fixed here, in code.

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gosset/calibration.hpp"
#include "gosset/distributions.hpp"
#include "gosset/martingale.hpp"
#include "gosset/oracle.hpp"
#include "gosset/pricing.hpp"

using namespace gosset;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const MarketParams kPaperMarket{50.0, 49.0, 0.03, 0.3, 1.0};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// "Matches to the printed precision, +-1 in the last printed digit": the
// computed value, rounded to the table's precision, may differ from the
// printed figure by at most one unit of its last digit.
bool matches_printed(double computed, double printed, int decimals) {
  const double unit = std::pow(10.0, -decimals);
  return std::fabs(computed - printed) <= 1.5 * unit + 1e-12;
}

// ---- criterion 1: Black-Scholes reference ---------------------------------

Outcome criterion1() {
  Outcome o;
  const double c0 = black_scholes_price(kPaperMarket, OptionKind::Call).price_now;
  o.require(std::fabs(c0 - 7.12) <= 0.005, "C0 = " + num(c0) + " vs 7.12 +- 0.005");
  o.detail = o.detail.empty() ? "C0 = " + num(c0) : o.detail;
  return o;
}

// ---- criterion 2: critical values and growth caps at sigma_t = 0.4 --------

Outcome criterion2() {
  struct Row {
    double p;
    double xc;
    int xc_dec;
    double growth;
    int growth_dec;
  };
  // Six confidence levels; t with nu = 5 and the normal limit.
  const std::vector<Row> t_rows = {
      {0.9, 1.476, 3, 1.805, 3},  {0.95, 2.015, 3, 2.239, 3},
      {0.99, 3.365, 3, 3.842, 3}, {0.995, 4.032, 3, 5.018, 3},
      {0.999, 5.893, 3, 10.56, 2}, {0.9999, 9.678, 3, 47.99, 2},
  };
  // The 0.9999 growth figure is 4.426: the tabulated source misprints it as
  // 4.428 while quoting 4.426 in its own accompanying text, and
  // exp(0.4 * 3.719016) = 4.42649.
  const std::vector<Row> n_rows = {
      {0.9, 1.282, 3, 1.670, 3},  {0.95, 1.645, 3, 1.931, 3},
      {0.99, 2.326, 3, 2.536, 3}, {0.995, 2.576, 3, 2.801, 3},
      {0.999, 3.090, 3, 3.442, 3}, {0.9999, 3.719, 3, 4.426, 3},
  };
  const double sigma_t = 0.4;
  Outcome o;
  for (const Row& row : t_rows) {
    const double xc = t_quantile(row.p, 5.0);
    const double growth = std::exp(sigma_t * xc);
    o.require(matches_printed(xc, row.xc, row.xc_dec),
              "t x_c(" + num(row.p) + ") = " + num(xc) + " vs " + num(row.xc));
    o.require(matches_printed(growth, row.growth, row.growth_dec),
              "t growth(" + num(row.p) + ") = " + num(growth) + " vs " + num(row.growth));
  }
  for (const Row& row : n_rows) {
    const double xc = normal_quantile(row.p);
    const double growth = std::exp(sigma_t * xc);
    o.require(matches_printed(xc, row.xc, row.xc_dec),
              "normal x_c(" + num(row.p) + ") = " + num(xc) + " vs " + num(row.xc));
    o.require(matches_printed(growth, row.growth, row.growth_dec),
              "normal growth(" + num(row.p) + ") = " + num(growth) + " vs " +
                  num(row.growth));
  }
  if (o.pass) o.detail = "all 24 cells within one printed digit";
  return o;
}

// ---- criterion 3: critical-value matrix over nu ---------------------------

Outcome criterion3() {
  const std::vector<double> nus = {3.0, 4.0, 6.0, 40.0, kInf};
  const std::vector<double> ps = {0.9, 0.95, 0.99, 0.999, 0.9999};
  const double printed[5][5] = {
      {1.638, 2.353, 4.541, 10.21, 22.20},
      {1.533, 2.132, 3.747, 7.173, 13.03},
      {1.440, 1.943, 3.143, 5.208, 8.025},
      {1.303, 1.684, 2.423, 3.307, 4.094},
      {1.282, 1.645, 2.326, 3.090, 3.719},
  };
  const int decimals[5][5] = {
      {3, 3, 3, 2, 2}, {3, 3, 3, 3, 2}, {3, 3, 3, 3, 3}, {3, 3, 3, 3, 3}, {3, 3, 3, 3, 3},
  };
  Outcome o;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const double xc = t_quantile(ps[j], nus[i]);
      o.require(matches_printed(xc, printed[i][j], decimals[i][j]),
                "x_c(p=" + num(ps[j]) + ", nu=" + num(nus[i]) + ") = " + num(xc) +
                    " vs " + num(printed[i][j]));
    }
  }
  if (o.pass) o.detail = "all 25 cells within one printed digit";
  return o;
}

// ---- criterion 4: diagnostic reproduction at nu=3, p=0.9999 ---------------

Outcome criterion4() {
  Outcome o;
  const auto capped =
      call_price(kPaperMarket, 3.0, TailPolicy::with_p(TailMode::Capped, 0.9999));
  const auto truncated =
      call_price(kPaperMarket, 3.0, TailPolicy::with_p(TailMode::Truncated, 0.9999));

  o.require(std::fabs(capped.scale.denominator - 1.281) <= 0.002,
            "capped denominator = " + num(capped.scale.denominator) + " vs 1.281 +- 0.002");
  o.require(std::fabs(capped.lower_limit - 0.6583) <= 0.001,
            "capped lower limit = " + num(capped.lower_limit) + " vs 0.6583 +- 0.001");
  o.require(std::fabs(truncated.scale.z - 1.203) <= 0.002,
            "truncated Z = " + num(truncated.scale.z) + " vs 1.203 +- 0.002");
  o.require(std::fabs(truncated.lower_limit - 0.4488) <= 0.001,
            "truncated lower limit = " + num(truncated.lower_limit) + " vs 0.4488 +- 0.001");

  const double diff = capped.price_now - truncated.price_now;
  o.require(diff >= 1.40 && diff <= 1.60,
            "capped - truncated = " + num(diff) + " vs [1.40, 1.60]");

  const double cap_value = capped.scale.a_t * std::exp(0.3 * capped.scale.x_c);
  const double tail_term = (cap_value - 49.0) * (1.0 - capped.scale.p);
  o.require(std::fabs(tail_term - 3.14) <= 0.05,
            "cap-tail term = " + num(tail_term) + " vs 3.14 +- 0.05");
  if (o.pass)
    o.detail = "denominator " + num(capped.scale.denominator) + ", Z " +
               num(truncated.scale.z) + ", price diff " + num(diff) + ", tail " +
               num(tail_term);
  return o;
}

// ---- criterion 5: price-difference anchors --------------------------------

Outcome criterion5() {
  Outcome o;
  const double bs = black_scholes_price(kPaperMarket, OptionKind::Call).price_now;
  for (double p : {0.99, 0.999, 0.9999}) {
    const double diff =
        call_price(kPaperMarket, 40.0, TailPolicy::with_p(TailMode::Capped, p)).price_now - bs;
    o.require(diff >= 0.05 && diff <= 0.12,
              "nu=40 capped diff(p=" + num(p) + ") = " + num(diff) + " vs [0.05, 0.12]");
  }
  // Known red: the computed difference peaks near the money at 0.1085
  // (Monte Carlo validated), while the anchor above accepts up to 0.12 for
  // the same nu=40, p=0.999 configuration. The 0.10 bound is kept as
  // specified rather than loosened to fit.
  double worst = 0.0;
  for (double s0 = 25.0; s0 <= 75.0 + 1e-9; s0 += 2.5) {
    MarketParams market = kPaperMarket;
    market.s0 = s0;
    const auto policy = TailPolicy::with_p(TailMode::Capped, 0.999);
    const double call_diff =
        call_price(market, 40.0, policy).price_now -
        black_scholes_price(market, OptionKind::Call).price_now;
    const double put_diff =
        put_price(market, 40.0, policy).price_now -
        black_scholes_price(market, OptionKind::Put).price_now;
    worst = std::max({worst, std::fabs(call_diff), std::fabs(put_diff)});
  }
  o.require(worst < 0.10, "max |gosset - BS| over S0 in [25,75] = " + num(worst));
  if (o.pass) o.detail = "max |gosset - BS| over the spot range = " + num(worst);
  return o;
}

// ---- criterion 6: put-call parity grid -------------------------------------

Outcome criterion6() {
  Outcome o;
  double worst = 0.0;
  for (TailMode mode : {TailMode::Capped, TailMode::Truncated}) {
    for (double nu : {2.65, 3.0, 5.0, 40.0}) {
      for (double p : {0.99, 0.999, 0.9999}) {
        for (double s0 : {25.0, 40.0, 50.0, 60.0, 75.0}) {
          MarketParams market = kPaperMarket;
          market.s0 = s0;
          const auto policy = TailPolicy::with_p(mode, p);
          const auto call = call_price(market, nu, policy);
          const auto put = put_price(market, nu, policy);
          const double gap = std::fabs(parity_gap(call, put, market));
          worst = std::max(worst, gap);
          o.require(gap < 1e-6, "gap " + num(gap) + " at mode=" +
                                    (mode == TailMode::Capped ? "capped" : "truncated") +
                                    " nu=" + num(nu) + " p=" + num(p) + " s0=" + num(s0));
        }
      }
    }
  }
  if (o.pass) o.detail = "120 configurations, max |gap| = " + num(worst);
  return o;
}

// ---- criterion 7: martingale property grid ---------------------------------

Outcome criterion7() {
  Outcome o;
  double worst = 0.0;
  for (TailMode mode : {TailMode::Capped, TailMode::Truncated}) {
    for (double nu : {2.65, 3.0, 5.0, 40.0}) {
      for (double p : {0.99, 0.999, 0.9999}) {
        for (double s0 : {25.0, 40.0, 50.0, 60.0, 75.0}) {
          MarketParams market = kPaperMarket;
          market.s0 = s0;
          const auto policy = TailPolicy::with_p(mode, p);
          const auto scale = martingale_scale(market, nu, policy);
          const double ev = expected_asset_value(scale, market, nu, policy);
          const double rel = std::fabs(ev / market.forward() - 1.0);
          worst = std::max(worst, rel);
          o.require(rel < 1e-8, "relative error " + num(rel) + " at mode=" +
                                    (mode == TailMode::Capped ? "capped" : "truncated") +
                                    " nu=" + num(nu) + " p=" + num(p) + " s0=" + num(s0));
        }
      }
    }
  }
  if (o.pass) o.detail = "120 configurations, max relative error = " + num(worst);
  return o;
}

// ---- criterion 8: log-normal limit ------------------------------------------

Outcome criterion8() {
  Outcome o;
  QuadratureOptions tight;
  tight.rel_tol = 1e-13;
  tight.abs_tol = 1e-15;
  for (double sigma : {0.1, 0.3, 0.4}) {
    const double z = growth_integral_normal(sigma, 40.0, tight);
    const double err = std::fabs(z - std::exp(0.5 * sigma * sigma));
    o.require(err < 1e-10,
              "normal-pathway |Z - exp(sigma^2/2)| = " + num(err) + " at sigma " + num(sigma));
  }
  const double bs = black_scholes_price(kPaperMarket, OptionKind::Call).price_now;
  const double limit =
      call_price(kPaperMarket, 500.0, TailPolicy::with_p(TailMode::Capped, 0.999999)).price_now;
  o.require(std::fabs(limit - bs) < 0.05,
            "nu=500 price " + num(limit) + " vs BS " + num(bs));
  if (o.pass) o.detail = "|C0(nu=500) - C0(BS)| = " + num(std::fabs(limit - bs));
  return o;
}

// ---- criterion 9: Monte Carlo oracle equivalence ---------------------------

Outcome criterion9() {
  Outcome o;
  McConfig config;
  config.samples = 1000000;
  config.seed = 20240809;
  double worst = 0.0;
  for (TailMode mode : {TailMode::Capped, TailMode::Truncated}) {
    for (double nu : {3.0, 5.0, 40.0}) {
      for (OptionKind kind : {OptionKind::Call, OptionKind::Put}) {
        const auto policy = TailPolicy::with_p(mode, 0.999);
        const auto quote = kind == OptionKind::Call
                               ? call_price(kPaperMarket, nu, policy)
                               : put_price(kPaperMarket, nu, policy);
        const auto est = mc_price(kPaperMarket, nu, policy, kind, config);
        const double z = (est.mean - quote.price_now) / est.std_error;
        worst = std::max(worst, std::fabs(z));
        o.require(std::fabs(z) <= 3.0,
                  "z = " + num(z) + " at mode=" +
                      (mode == TailMode::Capped ? "capped" : "truncated") + " nu=" + num(nu) +
                      " kind=" + (kind == OptionKind::Call ? "call" : "put"));
      }
    }
  }
  if (o.pass) o.detail = "12 configurations at N=1e6, max |z| = " + num(worst);
  return o;
}

// ---- criterion 10: calibration recovery ------------------------------------

Outcome criterion10() {
  Outcome o;
  const double nu = 3.0;
  const double mu = 4e-4;
  const double sigma = 0.0116;
  int passes = 0;
  std::ostringstream failures;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    TVariateStream stream(nu, seed);
    ReturnSeries series;
    series.returns.reserve(20000);
    for (int i = 0; i < 20000; ++i) series.returns.push_back(mu + sigma * stream.next());
    bool ok = true;
    try {
      const StudentTFit fit = fit_t(series);
      ok = std::fabs(fit.nu.value - nu) <= 0.15 * nu &&
           std::fabs(fit.mu.value - mu) <= 3.0 * fit.mu.std_error &&
           std::fabs(fit.sigma.value - sigma) <= 3.0 * fit.sigma.std_error;
      if (!ok)
        failures << " seed " << seed << ": nu=" << fit.nu.value << " mu=" << fit.mu.value
                 << " sigma=" << fit.sigma.value;
    } catch (const std::exception& e) {
      ok = false;
      failures << " seed " << seed << ": " << e.what();
    }
    if (ok) ++passes;
  }
  o.require(passes >= 9, "only " + std::to_string(passes) + "/10 seeds passed:" +
                             failures.str());
  if (o.pass) o.detail = std::to_string(passes) + "/10 seeds recovered the parameters";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Black-Scholes reference price", criterion1},
      {2, "critical values and growth caps, t(5) and normal at sigma_t=0.4", criterion2},
      {3, "critical-value matrix over nu and p", criterion3},
      {4, "capped/truncated diagnostics at nu=3, p=0.9999", criterion4},
      {5, "price-difference anchors at nu=40", criterion5},
      {6, "put-call parity grid", criterion6},
      {7, "martingale property grid", criterion7},
      {8, "log-normal limit", criterion8},
      {9, "Monte Carlo oracle equivalence", criterion9},
      {10, "calibration recovery on synthetic returns", criterion10},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
