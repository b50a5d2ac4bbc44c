// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end for the gosset pricing library. Talks to the
// shared library exclusively through the C API in gosset.h.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gosset.h"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

constexpr double kParityTolerance = 1e-6;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail_usage(const std::string& msg) { throw CliError{kExitUsage, msg}; }

[[noreturn]] void fail_status(gosset_status status) {
  const int code = (status == GOSSET_ERR_NUMERICAL || status == GOSSET_ERR_INTERNAL)
                       ? kExitNumerical
                       : kExitUsage;
  throw CliError{code, gosset_last_error()};
}

void check(gosset_status status) {
  if (status != GOSSET_OK) fail_status(status);
}

// Currency values are printed with six decimals.
double round6(double v) { return std::round(v * 1e6) / 1e6; }

double require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw CliError{kExitNumerical, std::string(what) + " is not finite"};
  return v;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// JSON value for a diagnostic that may legitimately be infinite
// (x_c of the log-normal pathway); JSON itself cannot carry inf.
ordered_json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

// ---- shared market flags --------------------------------------------------

struct MarketFlags {
  double s0 = 50.0;
  double strike = 49.0;
  double rate = 0.03;
  double tenor = 1.0;
  std::optional<double> sigma;
  std::optional<double> sigma_t;

  void attach(CLI::App* cmd) {
    cmd->add_option("--s0", s0, "Spot price S0")->capture_default_str();
    cmd->add_option("--strike", strike, "Strike K_T at expiry")->capture_default_str();
    cmd->add_option("--rate", rate, "Risk-free rate per year")->capture_default_str();
    cmd->add_option("--tenor", tenor, "Years to expiry T")->capture_default_str();
    auto* s = cmd->add_option("--sigma", sigma, "Annualized volatility");
    auto* st = cmd->add_option("--sigma-t", sigma_t,
                               "Horizon volatility sigma*sqrt(T) (default 0.3)");
    s->excludes(st);
    st->excludes(s);
  }

  gosset_market resolve() const {
    double annual;
    if (sigma && sigma_t) fail_usage("--sigma and --sigma-t are mutually exclusive");
    if (!(tenor > 0.0)) fail_usage("--tenor must be > 0");
    if (sigma) {
      annual = *sigma;
    } else {
      const double horizon = sigma_t.value_or(0.3);
      annual = horizon / std::sqrt(tenor);
    }
    return {s0, strike, rate, annual, tenor};
  }
};

struct PolicyFlags {
  std::optional<double> p;
  std::optional<double> x_c;

  void attach(CLI::App* cmd) {
    auto* po = cmd->add_option("--p", p, "Confidence level in (0,1) defining x_c");
    auto* xo = cmd->add_option("--xc", x_c, "Critical value x_c (alternative to --p)");
    po->excludes(xo);
    xo->excludes(po);
  }

  gosset_policy resolve(gosset_tail_mode mode, double nu) const {
    gosset_policy policy;
    if (p && x_c) fail_usage("--p and --xc are mutually exclusive");
    if (x_c) {
      check(gosset_policy_with_xc(mode, *x_c, nu, &policy));
    } else {
      check(gosset_policy_with_p(mode, p.value_or(0.9999), nu, &policy));
    }
    return policy;
  }
};

double parse_nu(const std::string& token) {
  if (token == "inf" || token == "Inf" || token == "INF")
    return std::numeric_limits<double>::infinity();
  try {
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    fail_usage("--nu-list: cannot parse '" + token + "'");
  }
}

// Owned quote handle.
class Quote {
 public:
  Quote(const gosset_market& market, const std::string& mode, double nu,
        const gosset_policy* policy, gosset_option_kind kind) {
    if (mode == "black-scholes") {
      check(gosset_price_black_scholes(&market, kind, &q_));
    } else {
      check(gosset_price(&market, policy, nu, kind, &q_));
    }
  }
  ~Quote() { gosset_quote_free(q_); }
  Quote(const Quote&) = delete;
  Quote& operator=(const Quote&) = delete;

  double price_now() const { return gosset_quote_price_now(q_); }
  double price_at_expiry() const { return gosset_quote_price_at_expiry(q_); }
  double a_t() const { return gosset_quote_a_t(q_); }
  double z() const { return gosset_quote_z(q_); }
  double denominator() const { return gosset_quote_denominator(q_); }
  double x_c() const { return gosset_quote_x_c(q_); }
  double p() const { return gosset_quote_p(q_); }
  double lower_limit() const { return gosset_quote_lower_limit(q_); }

 private:
  gosset_quote* q_ = nullptr;
};

gosset_tail_mode tail_mode_of(const std::string& mode) {
  return mode == "truncated" ? GOSSET_TAIL_TRUNCATED : GOSSET_TAIL_CAPPED;
}

// Runs fn(i) for i in [0, n) on a small pool; results land by index, so the
// output order is deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = std::min<std::size_t>(
      std::max(1u, std::thread::hardware_concurrency()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// ---- price -----------------------------------------------------------------

struct PriceArgs {
  MarketFlags market;
  PolicyFlags policy;
  std::string mode = "capped";
  std::string kind = "call";
  double nu = 3.0;
};

void run_price(const PriceArgs& args) {
  const gosset_market market = args.market.resolve();
  const gosset_option_kind kind = args.kind == "put" ? GOSSET_PUT : GOSSET_CALL;

  std::optional<gosset_policy> policy;
  if (args.mode != "black-scholes")
    policy = args.policy.resolve(tail_mode_of(args.mode), args.nu);

  const Quote quote(market, args.mode, args.nu, policy ? &*policy : nullptr, kind);
  ordered_json out;
  out["model"] = args.mode;
  out["kind"] = args.kind;
  out["c0_or_p0"] = round6(require_finite(quote.price_now(), "price"));
  out["price_at_expiry"] = round6(require_finite(quote.price_at_expiry(), "price"));
  out["a_t"] = round6(require_finite(quote.a_t(), "a_t"));
  out["z"] = require_finite(quote.z(), "z");
  out["denominator"] = require_finite(quote.denominator(), "denominator");
  out["x_c"] = finite_or_null(quote.x_c());
  out["p"] = quote.p();
  out["lower_limit"] = require_finite(quote.lower_limit(), "lower_limit");
  std::cout << out.dump(2) << "\n";
}

// ---- parity ----------------------------------------------------------------

void run_parity(const PriceArgs& args) {
  const gosset_market market = args.market.resolve();
  std::optional<gosset_policy> policy;
  if (args.mode != "black-scholes")
    policy = args.policy.resolve(tail_mode_of(args.mode), args.nu);

  const Quote call(market, args.mode, args.nu, policy ? &*policy : nullptr, GOSSET_CALL);
  const Quote put(market, args.mode, args.nu, policy ? &*policy : nullptr, GOSSET_PUT);
  const double c0 = require_finite(call.price_now(), "call price");
  const double p0 = require_finite(put.price_now(), "put price");
  const double gap = c0 - p0 - (market.s0 - market.strike * std::exp(-market.rate * market.tenor));

  ordered_json out;
  out["model"] = args.mode;
  out["c0"] = round6(c0);
  out["p0"] = round6(p0);
  out["gap"] = gap;
  out["tolerance"] = kParityTolerance;
  out["pass"] = std::fabs(gap) < kParityTolerance;
  std::cout << out.dump(2) << "\n";
}

// ---- mc-check ----------------------------------------------------------------

struct McArgs {
  PriceArgs price;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 12345;
  std::uint64_t batch = 65536;
};

void run_mc_check(const McArgs& args) {
  const gosset_market market = args.price.market.resolve();
  const gosset_option_kind kind = args.price.kind == "put" ? GOSSET_PUT : GOSSET_CALL;

  std::optional<gosset_policy> policy;
  if (args.price.mode != "black-scholes")
    policy = args.price.policy.resolve(tail_mode_of(args.price.mode), args.price.nu);

  const Quote quote(market, args.price.mode, args.price.nu, policy ? &*policy : nullptr,
                    kind);
  gosset_mc_result mc;
  if (policy) {
    check(gosset_mc_price(&market, &*policy, args.price.nu, kind, args.samples, args.seed,
                          args.batch, &mc));
  } else {
    check(gosset_mc_price_black_scholes(&market, kind, args.samples, args.seed, args.batch,
                                        &mc));
  }
  const double quad = require_finite(quote.price_now(), "price");
  const double z = mc.std_error > 0.0 ? (mc.mean - quad) / mc.std_error
                                      : (mc.mean == quad ? 0.0 : std::numeric_limits<double>::max());

  ordered_json out;
  out["model"] = args.price.mode;
  out["kind"] = args.price.kind;
  out["quadrature_price"] = round6(quad);
  out["mc_estimate"] = round6(mc.mean);
  out["std_error"] = mc.std_error;
  out["z_score"] = z;
  out["samples"] = mc.samples;
  out["seed"] = args.seed;
  out["pass"] = std::fabs(z) <= 3.0;
  std::cout << out.dump(2) << "\n";
}

// ---- tables ------------------------------------------------------------------

struct TableArgs {
  int which = 2;
  double sigma_t = 0.4;
  std::vector<std::string> nu_list;
  std::vector<double> p_list;
};

void run_tables(const TableArgs& args) {
  std::string out;
  if (args.which == 2) {
    const double nu = args.nu_list.empty() ? 5.0 : parse_nu(args.nu_list.front());
    const std::vector<double> p_list =
        args.p_list.empty() ? std::vector<double>{0.9, 0.95, 0.99, 0.995, 0.999, 0.9999}
                            : args.p_list;
    out += "p,x_c_t,exp_sigma_xc_t,x_c_normal,exp_sigma_xc_normal\n";
    for (double p : p_list) {
      double xt;
      double xn;
      check(gosset_t_quantile(p, nu, &xt));
      check(gosset_normal_quantile(p, &xn));
      out += fmt(p) + "," + fmt(xt) + "," + fmt(std::exp(args.sigma_t * xt)) + "," +
             fmt(xn) + "," + fmt(std::exp(args.sigma_t * xn)) + "\n";
    }
  } else if (args.which == 3) {
    const std::vector<std::string> nu_list =
        args.nu_list.empty() ? std::vector<std::string>{"3", "4", "6", "40", "inf"}
                             : args.nu_list;
    const std::vector<double> p_list =
        args.p_list.empty() ? std::vector<double>{0.9, 0.95, 0.99, 0.999, 0.9999}
                            : args.p_list;
    out += "nu";
    for (double p : p_list) out += ",p" + fmt(p);
    out += "\n";
    for (const auto& token : nu_list) {
      const double nu = parse_nu(token);
      out += std::isinf(nu) ? "inf" : fmt(nu);
      for (double p : p_list) {
        double x;
        check(gosset_t_quantile(p, nu, &x));
        out += "," + fmt(x);
      }
      out += "\n";
    }
  } else {
    fail_usage("--which must be 2 or 3");
  }
  std::cout << out;
}

// ---- sweep -------------------------------------------------------------------

struct SweepArgs {
  MarketFlags market;
  int figure = 4;
  std::vector<std::string> nu_list;
  std::vector<double> p_list;
  double s0_min = 25.0;
  double s0_max = 75.0;
  double s0_step = 2.5;
};

double call_price_now(const gosset_market& market, const std::string& mode, double nu,
                      double p) {
  if (mode == "black-scholes") {
    const Quote q(market, mode, 0.0, nullptr, GOSSET_CALL);
    return require_finite(q.price_now(), "price");
  }
  const gosset_policy policy = [&] {
    gosset_policy pol;
    check(gosset_policy_with_p(tail_mode_of(mode), p, nu, &pol));
    return pol;
  }();
  const Quote q(market, mode, nu, &policy, GOSSET_CALL);
  return require_finite(q.price_now(), "price");
}

void run_sweep(const SweepArgs& args) {
  const gosset_market market = args.market.resolve();
  std::string header;
  std::vector<std::string> rows;

  if (args.figure == 4 || args.figure == 5) {
    const std::string mode = args.figure == 4 ? "capped" : "truncated";
    const std::vector<double> ps =
        args.p_list.empty() ? std::vector<double>{0.99, 0.999, 0.9999} : args.p_list;
    std::vector<double> nus;
    if (args.nu_list.empty()) {
      nus = {2.5, 3, 3.5, 4, 5, 6, 8, 10, 12, 15, 20, 25, 30, 35, 40};
    } else {
      for (const auto& t : args.nu_list) nus.push_back(parse_nu(t));
    }
    header = "nu";
    for (double p : ps) header += ",diff_p" + fmt(p);
    const double bs = call_price_now(market, "black-scholes", 0.0, 0.0);
    rows.resize(nus.size());
    parallel_for(nus.size(), [&](std::size_t i) {
      std::string row = fmt(nus[i]);
      for (double p : ps)
        row += "," + fmt(call_price_now(market, mode, nus[i], p) - bs);
      rows[i] = row;
    });
  } else if (args.figure == 6 || args.figure == 7) {
    const std::string mode = args.figure == 6 ? "capped" : "truncated";
    std::vector<double> nus;
    if (args.nu_list.empty()) {
      nus = {3, 5, 40};
    } else {
      for (const auto& t : args.nu_list) nus.push_back(parse_nu(t));
    }
    const std::vector<double> ps =
        args.p_list.empty()
            ? std::vector<double>{0.9, 0.95, 0.98, 0.99, 0.995, 0.999, 0.9995, 0.9999,
                                  0.99995, 0.99999}
            : args.p_list;
    header = "p";
    for (double nu : nus) header += ",diff_nu" + fmt(nu);
    const double bs = call_price_now(market, "black-scholes", 0.0, 0.0);
    rows.resize(ps.size());
    parallel_for(ps.size(), [&](std::size_t i) {
      std::string row = fmt(ps[i]);
      for (double nu : nus)
        row += "," + fmt(call_price_now(market, mode, nu, ps[i]) - bs);
      rows[i] = row;
    });
  } else if (args.figure == 8 || args.figure == 9) {
    const std::string mode = args.figure == 8 ? "capped" : "truncated";
    std::vector<double> nus;
    if (args.nu_list.empty()) {
      nus = {3, 5};
    } else {
      for (const auto& t : args.nu_list) nus.push_back(parse_nu(t));
    }
    const double p = args.p_list.empty() ? 0.999 : args.p_list.front();
    if (!(args.s0_step > 0.0) || !(args.s0_min <= args.s0_max))
      fail_usage("invalid --s0-min/--s0-max/--s0-step range");
    std::vector<double> spots;
    for (double s0 = args.s0_min; s0 <= args.s0_max + 1e-9; s0 += args.s0_step)
      spots.push_back(s0);
    header = "s0";
    for (double nu : nus) header += ",call_nu" + fmt(nu) + ",put_nu" + fmt(nu);
    header += ",call_bs,put_bs";
    rows.resize(spots.size());
    parallel_for(spots.size(), [&](std::size_t i) {
      gosset_market m = market;
      m.s0 = spots[i];
      std::string row = fmt(spots[i]);
      for (double nu : nus) {
        gosset_policy policy;
        check(gosset_policy_with_p(tail_mode_of(mode), p, nu, &policy));
        const Quote call(m, mode, nu, &policy, GOSSET_CALL);
        const Quote put(m, mode, nu, &policy, GOSSET_PUT);
        row += "," + fmt(require_finite(call.price_now(), "price")) + "," +
               fmt(require_finite(put.price_now(), "price"));
      }
      const Quote call(m, "black-scholes", 0.0, nullptr, GOSSET_CALL);
      const Quote put(m, "black-scholes", 0.0, nullptr, GOSSET_PUT);
      row += "," + fmt(call.price_now()) + "," + fmt(put.price_now());
      rows[i] = row;
    });
  } else {
    fail_usage("--figure must be between 4 and 9");
  }

  std::string out = header + "\n";
  for (const auto& row : rows) out += row + "\n";
  std::cout << out;
}

// ---- fit ---------------------------------------------------------------------

struct FitArgs {
  std::string input;
  std::vector<double> q_levels{1e-4, 1e-3, 1e-2};
};

void run_fit(const FitArgs& args) {
  gosset_fit* fit = nullptr;
  check(gosset_fit_csv(args.input.c_str(), &fit));

  ordered_json out;
  out["input"] = args.input;
  out["count"] = gosset_fit_count(fit);
  out["sample_mean"] = gosset_fit_sample_mean(fit);
  out["sample_std"] = gosset_fit_sample_std(fit);
  out["normal"] = {{"mu", gosset_fit_normal_mu(fit)},
                   {"mu_se", gosset_fit_normal_mu_se(fit)},
                   {"sigma", gosset_fit_normal_sigma(fit)},
                   {"sigma_se", gosset_fit_normal_sigma_se(fit)}};
  out["student_t"] = {{"mu", gosset_fit_t_mu(fit)},
                      {"mu_se", gosset_fit_t_mu_se(fit)},
                      {"sigma", gosset_fit_t_sigma(fit)},
                      {"sigma_se", gosset_fit_t_sigma_se(fit)},
                      {"nu", gosset_fit_t_nu(fit)},
                      {"nu_se", gosset_fit_t_nu_se(fit)}};
  ordered_json crit = ordered_json::array();
  for (double q : args.q_levels) {
    double xt;
    double xn;
    const gosset_status st = gosset_fit_critical_value(fit, q, 1, &xt);
    const gosset_status sn = gosset_fit_critical_value(fit, q, 0, &xn);
    if (st != GOSSET_OK || sn != GOSSET_OK) {
      gosset_fit_free(fit);
      fail_status(st != GOSSET_OK ? st : sn);
    }
    crit.push_back({{"q", q}, {"normal", xn}, {"student_t", xt}});
  }
  out["critical_values"] = crit;
  gosset_fit_free(fit);
  std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "European option pricing under a log Student's t distribution.\n"
      "Divergent tails are handled by capping the asset value or truncating\n"
      "the density; Black-Scholes is the normal limit."};
  app.require_subcommand(1);

  PriceArgs price_args;
  auto* price = app.add_subcommand(
      "price",
      "Price a single option. JSON keys: model, kind, c0_or_p0, price_at_expiry,\n"
      "a_t, z, denominator, x_c, p, lower_limit");
  price_args.market.attach(price);
  price_args.policy.attach(price);
  price->add_option("--nu", price_args.nu, "Degrees of freedom (ignored for black-scholes)")
      ->capture_default_str();
  price->add_option("--mode", price_args.mode, "capped | truncated | black-scholes")
      ->check(CLI::IsMember({"capped", "truncated", "black-scholes"}))
      ->capture_default_str();
  price->add_option("--kind", price_args.kind, "call | put")
      ->check(CLI::IsMember({"call", "put"}))
      ->capture_default_str();

  PriceArgs parity_args;
  auto* parity = app.add_subcommand(
      "parity",
      "Check put-call parity. JSON keys: model, c0, p0, gap, tolerance, pass");
  parity_args.market.attach(parity);
  parity_args.policy.attach(parity);
  parity->add_option("--nu", parity_args.nu, "Degrees of freedom")->capture_default_str();
  parity->add_option("--mode", parity_args.mode, "capped | truncated | black-scholes")
      ->check(CLI::IsMember({"capped", "truncated", "black-scholes"}))
      ->capture_default_str();

  McArgs mc_args;
  auto* mc = app.add_subcommand(
      "mc-check",
      "Compare quadrature and Monte Carlo prices. JSON keys: model, kind,\n"
      "quadrature_price, mc_estimate, std_error, z_score, samples, seed, pass");
  mc_args.price.market.attach(mc);
  mc_args.price.policy.attach(mc);
  mc->add_option("--nu", mc_args.price.nu, "Degrees of freedom")->capture_default_str();
  mc->add_option("--mode", mc_args.price.mode, "capped | truncated | black-scholes")
      ->check(CLI::IsMember({"capped", "truncated", "black-scholes"}))
      ->capture_default_str();
  mc->add_option("--kind", mc_args.price.kind, "call | put")
      ->check(CLI::IsMember({"call", "put"}))
      ->capture_default_str();
  mc->add_option("--samples", mc_args.samples, "Monte Carlo sample count")
      ->capture_default_str();
  mc->add_option("--seed", mc_args.seed, "RNG seed")->capture_default_str();
  mc->add_option("--batch", mc_args.batch, "Batch size for substream seeding")
      ->capture_default_str();

  TableArgs table_args;
  auto* tables = app.add_subcommand(
      "tables", "Emit critical-value tables as CSV (--which 2 or 3)");
  tables->add_option("--which", table_args.which, "Table id: 2 or 3")->required();
  tables->add_option("--sigma-t", table_args.sigma_t, "Horizon volatility for table 2")
      ->capture_default_str();
  tables->add_option("--nu-list", table_args.nu_list,
                     "Degrees-of-freedom list; accepts 'inf'")
      ->delimiter(',');
  tables->add_option("--p-list", table_args.p_list, "Confidence levels")->delimiter(',');

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand(
      "sweep",
      "Emit price-difference or price-curve data as CSV.\n"
      "Figures: 4/5 sweep nu (capped/truncated), 6/7 sweep p, 8/9 sweep S0");
  sweep_args.market.attach(sweep);
  sweep->add_option("--figure", sweep_args.figure, "Figure id: 4..9")->required();
  sweep->add_option("--nu-list", sweep_args.nu_list,
                    "nu values (abscissa for 4/5, curves for 6..9); accepts 'inf'")
      ->delimiter(',');
  sweep->add_option("--p-list", sweep_args.p_list,
                    "p values (curves for 4/5, abscissa for 6/7, level for 8/9)")
      ->delimiter(',');
  sweep->add_option("--s0-min", sweep_args.s0_min, "Spot sweep start (figures 8/9)")
      ->capture_default_str();
  sweep->add_option("--s0-max", sweep_args.s0_max, "Spot sweep end (figures 8/9)")
      ->capture_default_str();
  sweep->add_option("--s0-step", sweep_args.s0_step, "Spot sweep step (figures 8/9)")
      ->capture_default_str();

  FitArgs fit_args;
  auto* fit = app.add_subcommand(
      "fit",
      "Fit normal and Student t distributions to a CSV return series.\n"
      "JSON keys: input, count, sample_mean, sample_std, normal, student_t,\n"
      "critical_values");
  fit->add_option("--input", fit_args.input, "CSV file (date,close or return layout)")
      ->required();
  fit->add_option("--q-levels", fit_args.q_levels, "Exceedance levels for critical values")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*price) run_price(price_args);
    if (*parity) run_parity(parity_args);
    if (*mc) run_mc_check(mc_args);
    if (*tables) run_tables(table_args);
    if (*sweep) run_sweep(sweep_args);
    if (*fit) run_fit(fit_args);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
