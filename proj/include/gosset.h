/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the gosset option-pricing library.
 *
 * European calls and puts are priced under a log Student's t asset
 * distribution. The divergent upper tail is handled either by capping the
 * asset value at a_t*exp(sigma_t*x_c) or by truncating the density at x_c
 * and renormalizing; Black-Scholes is recovered in the normal limit.
 *
 * Every fallible function returns a gosset_status; on failure
 * gosset_last_error() describes the problem for the calling thread. Handle
 * types (gosset_quote, gosset_fit) are opaque and must be released with the
 * matching *_free function. All functions are safe to call concurrently.
 */
#ifndef GOSSET_H
#define GOSSET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GOSSET_BUILD)
#define GOSSET_API __declspec(dllexport)
#else
#define GOSSET_API __declspec(dllimport)
#endif
#else
#define GOSSET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gosset_status {
  GOSSET_OK = 0,
  GOSSET_ERR_DOMAIN = 1,    /* invalid argument or precondition */
  GOSSET_ERR_NUMERICAL = 2, /* quadrature or optimizer failure */
  GOSSET_ERR_IO = 3,        /* file or CSV failure */
  GOSSET_ERR_INTERNAL = 4
} gosset_status;

typedef enum gosset_tail_mode {
  GOSSET_TAIL_CAPPED = 0,
  GOSSET_TAIL_TRUNCATED = 1
} gosset_tail_mode;

typedef enum gosset_option_kind { GOSSET_CALL = 0, GOSSET_PUT = 1 } gosset_option_kind;

/* Market inputs. sigma is annualized; the pricing horizon uses
 * sigma_t = sigma*sqrt(tenor). */
typedef struct gosset_market {
  double s0;     /* spot, > 0 */
  double strike; /* strike at expiry, > 0 */
  double rate;   /* risk-free rate per year, continuous compounding */
  double sigma;  /* annualized volatility, > 0 */
  double tenor;  /* years to expiry, > 0 */
} gosset_market;

/* Resolved tail policy: confidence level p and critical value x_c are
 * mutually consistent, x_c = t_quantile(p, nu). Build with one of the
 * gosset_policy_with_* functions. */
typedef struct gosset_policy {
  gosset_tail_mode mode;
  double p;
  double x_c;
} gosset_policy;

typedef struct gosset_mc_result {
  double mean;      /* discounted Monte Carlo price estimate */
  double std_error; /* sample std / sqrt(samples) */
  uint64_t samples;
} gosset_mc_result;

/* Opaque priced option with diagnostics. */
typedef struct gosset_quote gosset_quote;

/* Opaque calibration result (normal and t fits of a return series). */
typedef struct gosset_fit gosset_fit;

GOSSET_API const char* gosset_version(void);

/* Message for the most recent failure on the calling thread. The pointer
 * stays valid until the next failing call on the same thread. */
GOSSET_API const char* gosset_last_error(void);

/* ---- Distribution scalars ---------------------------------------------- */

/* nu may be +infinity in all of these; the t distribution then degenerates
 * to the standard normal. */
GOSSET_API gosset_status gosset_t_pdf(double x, double nu, double* out);
GOSSET_API gosset_status gosset_t_cdf(double x, double nu, double* out);
GOSSET_API gosset_status gosset_t_quantile(double p, double nu, double* out);
GOSSET_API gosset_status gosset_normal_cdf(double x, double* out);
GOSSET_API gosset_status gosset_normal_quantile(double p, double* out);

/* P{xi > threshold} under t(nu) relative to the standard normal tail. */
GOSSET_API gosset_status gosset_tail_mass_ratio(double nu, double threshold, double* out);

/* ---- Tail policy -------------------------------------------------------- */

GOSSET_API gosset_status gosset_policy_with_p(gosset_tail_mode mode, double p, double nu,
                                              gosset_policy* out);
GOSSET_API gosset_status gosset_policy_with_xc(gosset_tail_mode mode, double x_c, double nu,
                                               gosset_policy* out);

/* ---- Pricing ------------------------------------------------------------ */

/* Prices under the log-t model with the policy's tail handling. The returned
 * quote must be released with gosset_quote_free. */
GOSSET_API gosset_status gosset_price(const gosset_market* market,
                                      const gosset_policy* policy, double nu,
                                      gosset_option_kind kind, gosset_quote** out);

GOSSET_API gosset_status gosset_price_black_scholes(const gosset_market* market,
                                                    gosset_option_kind kind,
                                                    gosset_quote** out);

/* Quote accessors. A NULL quote yields NaN. */
GOSSET_API double gosset_quote_price_now(const gosset_quote* q);
GOSSET_API double gosset_quote_price_at_expiry(const gosset_quote* q);
GOSSET_API double gosset_quote_a_t(const gosset_quote* q);
GOSSET_API double gosset_quote_z(const gosset_quote* q);
GOSSET_API double gosset_quote_denominator(const gosset_quote* q);
GOSSET_API double gosset_quote_x_c(const gosset_quote* q);
GOSSET_API double gosset_quote_p(const gosset_quote* q);
GOSSET_API double gosset_quote_lower_limit(const gosset_quote* q);
GOSSET_API void gosset_quote_free(gosset_quote* q);

/* Re-evaluates E{S_T} under the policy distribution by quadrature; equals
 * s0*exp(rate*tenor) up to quadrature error. */
GOSSET_API gosset_status gosset_expected_asset_value(const gosset_market* market,
                                                     const gosset_policy* policy,
                                                     double nu, double* out);

/* ---- Monte Carlo -------------------------------------------------------- */

/* Discounted Monte Carlo price. A fixed (seed, batch) pair reproduces the
 * estimate bit for bit regardless of thread scheduling. batch = 0 selects
 * the default batch size. */
GOSSET_API gosset_status gosset_mc_price(const gosset_market* market,
                                         const gosset_policy* policy, double nu,
                                         gosset_option_kind kind, uint64_t samples,
                                         uint64_t seed, uint64_t batch,
                                         gosset_mc_result* out);

GOSSET_API gosset_status gosset_mc_price_black_scholes(const gosset_market* market,
                                                       gosset_option_kind kind,
                                                       uint64_t samples, uint64_t seed,
                                                       uint64_t batch,
                                                       gosset_mc_result* out);

/* ---- Calibration -------------------------------------------------------- */

/* Fits normal and location-scale t distributions to daily log returns.
 * The handle must be released with gosset_fit_free. */
GOSSET_API gosset_status gosset_fit_returns(const double* returns, size_t n,
                                            gosset_fit** out);

/* As gosset_fit_returns, after converting prices to log returns. */
GOSSET_API gosset_status gosset_fit_prices(const double* prices, size_t n,
                                           gosset_fit** out);

/* Reads a CSV file (header row with either a "return" column or a "close"
 * column) and fits it. */
GOSSET_API gosset_status gosset_fit_csv(const char* path, gosset_fit** out);

/* Fit accessors. A NULL fit yields NaN (0 for the count). */
GOSSET_API double gosset_fit_normal_mu(const gosset_fit* f);
GOSSET_API double gosset_fit_normal_mu_se(const gosset_fit* f);
GOSSET_API double gosset_fit_normal_sigma(const gosset_fit* f);
GOSSET_API double gosset_fit_normal_sigma_se(const gosset_fit* f);
GOSSET_API double gosset_fit_t_mu(const gosset_fit* f);
GOSSET_API double gosset_fit_t_mu_se(const gosset_fit* f);
GOSSET_API double gosset_fit_t_sigma(const gosset_fit* f);
GOSSET_API double gosset_fit_t_sigma_se(const gosset_fit* f);
GOSSET_API double gosset_fit_t_nu(const gosset_fit* f);
GOSSET_API double gosset_fit_t_nu_se(const gosset_fit* f);
GOSSET_API uint64_t gosset_fit_count(const gosset_fit* f);
GOSSET_API double gosset_fit_sample_mean(const gosset_fit* f);
GOSSET_API double gosset_fit_sample_std(const gosset_fit* f);

/* |x_c(q)| under the fitted distribution: |mu + sigma * quantile(q)|, with
 * the t fit when student_t is nonzero, the normal fit otherwise. */
GOSSET_API gosset_status gosset_fit_critical_value(const gosset_fit* f, double q,
                                                   int student_t, double* out);
GOSSET_API void gosset_fit_free(gosset_fit* f);

#ifdef __cplusplus
}
#endif

#endif /* GOSSET_H */
