// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gosset/errors.hpp"

namespace gosset {

/// Location-scale Student t parameters.
struct TParams {
  double nu;     ///< shape (degrees of freedom), > 0
  double mu;     ///< location
  double sigma;  ///< scale, > 0

  void validate() const;
};

/// Parameters of the log-t asset-value density S = a_t * exp(sigma_t * xi).
struct LogTParams {
  double a_t;      ///< asset scale factor, > 0
  double sigma_t;  ///< horizon volatility, > 0
  double nu;       ///< shape, > 0

  void validate() const;
};

/// Normalization constant of the standardized t density,
/// Gamma((nu+1)/2) / (Gamma(nu/2) * sqrt(pi*nu)). nu = +inf yields the
/// normal constant 1/sqrt(2*pi).
double lambda_nu(double nu);

/// Log of the unnormalized standardized t density, -(nu+1)/2 * ln(1 + xi^2/nu).
/// nu = +inf yields -xi^2/2.
double t_log_kernel(double xi, double nu);

/// Standardized Student t density.
double t_pdf(double xi, double nu);

/// P{xi <= x} for a standardized Student t variable.
double t_cdf(double x, double nu);

/// Upper tail P{xi > x}; accurate for small tail masses.
double t_sf(double x, double nu);

/// Inverse of t_cdf on (0, 1).
double t_quantile(double p, double nu);

double normal_pdf(double x);
double normal_cdf(double x);
double normal_sf(double x);
double normal_quantile(double p);

/// Density of the asset value S under the log-t model (includes the
/// 1/(sigma_t * S) Jacobian).
double log_t_pdf(double s, const LogTParams& params);

/// Variance nu/(nu-2) of the standardized t distribution, defined for nu > 2.
double t_variance(double nu);

}  // namespace gosset
