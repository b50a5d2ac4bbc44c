// SPDX-License-Identifier: Apache-2.0
#include "gosset.h"

#include <cmath>
#include <limits>
#include <new>
#include <span>
#include <string>

#include "gosset/calibration.hpp"
#include "gosset/distributions.hpp"
#include "gosset/oracle.hpp"
#include "gosset/pricing.hpp"

struct gosset_quote {
  gosset::Quote q;
};

struct gosset_fit {
  gosset::FitResult r;
};

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

thread_local std::string g_last_error;

gosset_status fail(gosset_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename Fn>
gosset_status wrap(Fn&& fn) {
  try {
    fn();
    return GOSSET_OK;
  } catch (const gosset::domain_error& e) {
    return fail(GOSSET_ERR_DOMAIN, e.what());
  } catch (const gosset::io_error& e) {
    return fail(GOSSET_ERR_IO, e.what());
  } catch (const gosset::numerical_error& e) {
    return fail(GOSSET_ERR_NUMERICAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GOSSET_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GOSSET_ERR_INTERNAL, e.what());
  }
}

gosset_status require(bool ok, const char* what) {
  return ok ? GOSSET_OK : fail(GOSSET_ERR_DOMAIN, what);
}

gosset::MarketParams to_market(const gosset_market& m) {
  return {m.s0, m.strike, m.rate, m.sigma, m.tenor};
}

gosset::TailMode to_mode(gosset_tail_mode mode) {
  switch (mode) {
    case GOSSET_TAIL_CAPPED:
      return gosset::TailMode::Capped;
    case GOSSET_TAIL_TRUNCATED:
      return gosset::TailMode::Truncated;
  }
  throw gosset::domain_error("invalid tail mode");
}

gosset::OptionKind to_kind(gosset_option_kind kind) {
  switch (kind) {
    case GOSSET_CALL:
      return gosset::OptionKind::Call;
    case GOSSET_PUT:
      return gosset::OptionKind::Put;
  }
  throw gosset::domain_error("invalid option kind");
}

gosset::TailPolicy to_policy(const gosset_policy& p) {
  gosset::TailPolicy policy{to_mode(p.mode), p.p, p.x_c};
  if (!(p.p > 0.0 && p.p < 1.0) || !std::isfinite(p.x_c))
    throw gosset::domain_error(
        "policy is not resolved; build it with gosset_policy_with_p or "
        "gosset_policy_with_xc");
  return policy;
}

}  // namespace

extern "C" {

const char* gosset_version(void) { return "0.1.0"; }

const char* gosset_last_error(void) { return g_last_error.c_str(); }

gosset_status gosset_t_pdf(double x, double nu, double* out) {
  if (auto st = require(out != nullptr, "out must not be NULL")) return st;
  return wrap([&] { *out = gosset::t_pdf(x, nu); });
}

gosset_status gosset_t_cdf(double x, double nu, double* out) {
  if (auto st = require(out != nullptr, "out must not be NULL")) return st;
  return wrap([&] { *out = gosset::t_cdf(x, nu); });
}

gosset_status gosset_t_quantile(double p, double nu, double* out) {
  if (auto st = require(out != nullptr, "out must not be NULL")) return st;
  return wrap([&] { *out = gosset::t_quantile(p, nu); });
}

gosset_status gosset_normal_cdf(double x, double* out) {
  if (auto st = require(out != nullptr, "out must not be NULL")) return st;
  return wrap([&] { *out = gosset::normal_cdf(x); });
}

gosset_status gosset_normal_quantile(double p, double* out) {
  if (auto st = require(out != nullptr, "out must not be NULL")) return st;
  return wrap([&] { *out = gosset::normal_quantile(p); });
}

gosset_status gosset_tail_mass_ratio(double nu, double threshold, double* out) {
  if (auto st = require(out != nullptr, "out must not be NULL")) return st;
  return wrap([&] { *out = gosset::tail_mass_ratio(nu, threshold); });
}

gosset_status gosset_policy_with_p(gosset_tail_mode mode, double p, double nu,
                                   gosset_policy* out) {
  if (auto st = require(out != nullptr, "out must not be NULL")) return st;
  return wrap([&] {
    const auto res =
        gosset::resolve_policy(gosset::TailPolicy::with_p(to_mode(mode), p), nu);
    *out = {mode, *res.p, *res.x_c};
  });
}

gosset_status gosset_policy_with_xc(gosset_tail_mode mode, double x_c, double nu,
                                    gosset_policy* out) {
  if (auto st = require(out != nullptr, "out must not be NULL")) return st;
  return wrap([&] {
    const auto res =
        gosset::resolve_policy(gosset::TailPolicy::with_xc(to_mode(mode), x_c), nu);
    *out = {mode, *res.p, *res.x_c};
  });
}

gosset_status gosset_price(const gosset_market* market, const gosset_policy* policy,
                           double nu, gosset_option_kind kind, gosset_quote** out) {
  if (auto st = require(market && policy && out, "market, policy and out must not be NULL"))
    return st;
  *out = nullptr;
  return wrap([&] {
    const auto mkt = to_market(*market);
    const auto pol = to_policy(*policy);
    const auto quote = to_kind(kind) == gosset::OptionKind::Call
                           ? gosset::call_price(mkt, nu, pol)
                           : gosset::put_price(mkt, nu, pol);
    *out = new gosset_quote{quote};
  });
}

gosset_status gosset_price_black_scholes(const gosset_market* market,
                                         gosset_option_kind kind, gosset_quote** out) {
  if (auto st = require(market && out, "market and out must not be NULL")) return st;
  *out = nullptr;
  return wrap([&] {
    *out = new gosset_quote{gosset::black_scholes_price(to_market(*market), to_kind(kind))};
  });
}

double gosset_quote_price_now(const gosset_quote* q) { return q ? q->q.price_now : kNaN; }
double gosset_quote_price_at_expiry(const gosset_quote* q) {
  return q ? q->q.price_at_expiry : kNaN;
}
double gosset_quote_a_t(const gosset_quote* q) { return q ? q->q.scale.a_t : kNaN; }
double gosset_quote_z(const gosset_quote* q) { return q ? q->q.scale.z : kNaN; }
double gosset_quote_denominator(const gosset_quote* q) {
  return q ? q->q.scale.denominator : kNaN;
}
double gosset_quote_x_c(const gosset_quote* q) { return q ? q->q.scale.x_c : kNaN; }
double gosset_quote_p(const gosset_quote* q) { return q ? q->q.scale.p : kNaN; }
double gosset_quote_lower_limit(const gosset_quote* q) { return q ? q->q.lower_limit : kNaN; }
void gosset_quote_free(gosset_quote* q) { delete q; }

gosset_status gosset_expected_asset_value(const gosset_market* market,
                                          const gosset_policy* policy, double nu,
                                          double* out) {
  if (auto st = require(market && policy && out, "market, policy and out must not be NULL"))
    return st;
  return wrap([&] {
    const auto mkt = to_market(*market);
    const auto pol = to_policy(*policy);
    const auto scale = gosset::martingale_scale(mkt, nu, pol);
    *out = gosset::expected_asset_value(scale, mkt, nu, pol);
  });
}

gosset_status gosset_mc_price(const gosset_market* market, const gosset_policy* policy,
                              double nu, gosset_option_kind kind, uint64_t samples,
                              uint64_t seed, uint64_t batch, gosset_mc_result* out) {
  if (auto st = require(market && policy && out, "market, policy and out must not be NULL"))
    return st;
  return wrap([&] {
    gosset::McConfig config;
    config.samples = samples;
    config.seed = seed;
    if (batch != 0) config.batch = batch;
    const auto est =
        gosset::mc_price(to_market(*market), nu, to_policy(*policy), to_kind(kind), config);
    *out = {est.mean, est.std_error, est.samples};
  });
}

gosset_status gosset_mc_price_black_scholes(const gosset_market* market,
                                            gosset_option_kind kind, uint64_t samples,
                                            uint64_t seed, uint64_t batch,
                                            gosset_mc_result* out) {
  if (auto st = require(market && out, "market and out must not be NULL")) return st;
  return wrap([&] {
    gosset::McConfig config;
    config.samples = samples;
    config.seed = seed;
    if (batch != 0) config.batch = batch;
    const auto est = gosset::mc_price_black_scholes(to_market(*market), to_kind(kind), config);
    *out = {est.mean, est.std_error, est.samples};
  });
}

gosset_status gosset_fit_returns(const double* returns, size_t n, gosset_fit** out) {
  if (auto st = require(returns && out, "returns and out must not be NULL")) return st;
  *out = nullptr;
  return wrap([&] {
    gosset::ReturnSeries series{{returns, returns + n}, ""};
    *out = new gosset_fit{gosset::fit_all(series)};
  });
}

gosset_status gosset_fit_prices(const double* prices, size_t n, gosset_fit** out) {
  if (auto st = require(prices && out, "prices and out must not be NULL")) return st;
  *out = nullptr;
  return wrap([&] {
    const auto series = gosset::log_returns(std::span<const double>(prices, n));
    *out = new gosset_fit{gosset::fit_all(series)};
  });
}

gosset_status gosset_fit_csv(const char* path, gosset_fit** out) {
  if (auto st = require(path && out, "path and out must not be NULL")) return st;
  *out = nullptr;
  return wrap([&] {
    const auto series = gosset::read_series_csv(path);
    *out = new gosset_fit{gosset::fit_all(series)};
  });
}

double gosset_fit_normal_mu(const gosset_fit* f) { return f ? f->r.normal.mu.value : kNaN; }
double gosset_fit_normal_mu_se(const gosset_fit* f) {
  return f ? f->r.normal.mu.std_error : kNaN;
}
double gosset_fit_normal_sigma(const gosset_fit* f) {
  return f ? f->r.normal.sigma.value : kNaN;
}
double gosset_fit_normal_sigma_se(const gosset_fit* f) {
  return f ? f->r.normal.sigma.std_error : kNaN;
}
double gosset_fit_t_mu(const gosset_fit* f) { return f ? f->r.student_t.mu.value : kNaN; }
double gosset_fit_t_mu_se(const gosset_fit* f) {
  return f ? f->r.student_t.mu.std_error : kNaN;
}
double gosset_fit_t_sigma(const gosset_fit* f) {
  return f ? f->r.student_t.sigma.value : kNaN;
}
double gosset_fit_t_sigma_se(const gosset_fit* f) {
  return f ? f->r.student_t.sigma.std_error : kNaN;
}
double gosset_fit_t_nu(const gosset_fit* f) { return f ? f->r.student_t.nu.value : kNaN; }
double gosset_fit_t_nu_se(const gosset_fit* f) {
  return f ? f->r.student_t.nu.std_error : kNaN;
}
uint64_t gosset_fit_count(const gosset_fit* f) { return f ? f->r.count : 0; }
double gosset_fit_sample_mean(const gosset_fit* f) { return f ? f->r.sample_mean : kNaN; }
double gosset_fit_sample_std(const gosset_fit* f) { return f ? f->r.sample_std : kNaN; }

gosset_status gosset_fit_critical_value(const gosset_fit* f, double q, int student_t,
                                        double* out) {
  if (auto st = require(f && out, "fit and out must not be NULL")) return st;
  return wrap([&] {
    if (!(q > 0.0 && q < 1.0))
      throw gosset::domain_error("critical value: q must lie in (0, 1)");
    double x;
    if (student_t != 0) {
      x = f->r.student_t.mu.value +
          f->r.student_t.sigma.value * gosset::t_quantile(q, f->r.student_t.nu.value);
    } else {
      x = f->r.normal.mu.value + f->r.normal.sigma.value * gosset::normal_quantile(q);
    }
    *out = std::fabs(x);
  });
}

void gosset_fit_free(gosset_fit* f) { delete f; }

}  // extern "C"
