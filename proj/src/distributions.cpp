// SPDX-License-Identifier: Apache-2.0
#include "gosset/distributions.hpp"

#include <cmath>
#include <limits>

#include "gosset/numerics.hpp"

namespace gosset {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;  // 1/sqrt(2*pi)
constexpr double kSqrt2Pi = 2.5066282746310005024;
constexpr double kLnPi = 1.1447298858494001741;

void require_nu(double nu) {
  if (std::isnan(nu) || !(nu > 0.0)) throw domain_error("shape nu must be > 0");
}

}  // namespace

void TParams::validate() const {
  require_nu(nu);
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw domain_error("scale sigma must be > 0");
  if (!std::isfinite(mu)) throw domain_error("location mu must be finite");
}

void LogTParams::validate() const {
  require_nu(nu);
  if (!(a_t > 0.0) || !std::isfinite(a_t)) throw domain_error("a_t must be > 0");
  if (!(sigma_t > 0.0) || !std::isfinite(sigma_t)) throw domain_error("sigma_t must be > 0");
}

double lambda_nu(double nu) {
  require_nu(nu);
  if (std::isinf(nu)) return kInvSqrt2Pi;
  const double a = 0.5 * nu;
  return std::exp(ln_gamma_shift(a, 0.5) - 0.5 * (kLnPi + std::log(nu)));
}

double t_log_kernel(double xi, double nu) {
  require_nu(nu);
  if (std::isinf(nu)) return -0.5 * xi * xi;
  return -0.5 * (nu + 1.0) * std::log1p(xi * xi / nu);
}

double t_pdf(double xi, double nu) { return lambda_nu(nu) * std::exp(t_log_kernel(xi, nu)); }

double t_cdf(double x, double nu) {
  require_nu(nu);
  if (std::isnan(x)) throw domain_error("t_cdf: x must not be NaN");
  if (std::isinf(nu)) return normal_cdf(x);
  if (x == 0.0) return 0.5;
  const double xb = nu / (nu + x * x);
  const double half_tail = 0.5 * regularized_incomplete_beta(0.5 * nu, 0.5, xb);
  return x < 0.0 ? half_tail : 1.0 - half_tail;
}

double t_sf(double x, double nu) {
  require_nu(nu);
  if (std::isnan(x)) throw domain_error("t_sf: x must not be NaN");
  if (std::isinf(nu)) return normal_sf(x);
  if (x == 0.0) return 0.5;
  const double xb = nu / (nu + x * x);
  const double half_tail = 0.5 * regularized_incomplete_beta(0.5 * nu, 0.5, xb);
  return x > 0.0 ? half_tail : 1.0 - half_tail;
}

double t_quantile(double p, double nu) {
  require_nu(nu);
  if (std::isnan(p) || !(p > 0.0 && p < 1.0))
    throw domain_error("t_quantile: p must lie in (0, 1)");
  if (std::isinf(nu)) return normal_quantile(p);
  if (p == 0.5) return 0.0;

  // Solve t_sf(x, nu) = q on x >= 0, then apply the symmetry sign.
  const bool lower = p < 0.5;
  const double q = lower ? p : 1.0 - p;

  double lo = 0.0;
  double hi = 1.0;
  while (t_sf(hi, nu) > q) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) break;
  }

  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double resid = t_sf(x, nu) - q;
    if (resid > 0.0)
      lo = x;
    else
      hi = x;
    if (std::fabs(resid) <= 1e-13 * q + 5e-18) break;
    const double density = t_pdf(x, nu);
    double next = x + resid / density;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) <= 1e-15 * std::max(1.0, std::fabs(x))) {
      x = next;
      break;
    }
    x = next;
  }
  return lower ? -x : x;
}

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double normal_sf(double x) { return 0.5 * std::erfc(x * M_SQRT1_2); }

double normal_quantile(double p) {
  if (std::isnan(p) || !(p > 0.0 && p < 1.0))
    throw domain_error("normal_quantile: p must lie in (0, 1)");

  // Acklam's rational approximation, then two Halley refinements.
  static constexpr double A[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double B[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double C[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double D[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLow = 0.02425;

  double x;
  if (p < kLow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
        ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
  } else if (p <= 1.0 - kLow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q /
        (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
        ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
  }
  for (int i = 0; i < 2 && std::fabs(x) < 37.0; ++i) {
    const double e = normal_cdf(x) - p;
    const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
  }
  return x;
}

double log_t_pdf(double s, const LogTParams& params) {
  params.validate();
  if (std::isnan(s) || !(s > 0.0)) throw domain_error("log_t_pdf: s must be > 0");
  const double xi = std::log(s / params.a_t) / params.sigma_t;
  return t_pdf(xi, params.nu) / (params.sigma_t * s);
}

double t_variance(double nu) {
  require_nu(nu);
  if (std::isinf(nu)) return 1.0;
  if (!(nu > 2.0)) throw domain_error("t_variance: defined only for nu > 2");
  return nu / (nu - 2.0);
}

}  // namespace gosset
