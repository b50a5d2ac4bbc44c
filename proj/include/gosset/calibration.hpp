// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gosset/distributions.hpp"
#include "gosset/errors.hpp"

namespace gosset {

/// Daily log returns with a display label.
struct ReturnSeries {
  std::vector<double> returns;
  std::string label;
};

struct ParamEstimate {
  double value;
  double std_error;
};

struct NormalFit {
  ParamEstimate mu;
  ParamEstimate sigma;
};

struct StudentTFit {
  ParamEstimate mu;
  ParamEstimate sigma;
  ParamEstimate nu;
};

struct CriticalValueRow {
  double q;
  double normal_abs;     ///< |mu + sigma * Phi^-1(q)| under the normal fit
  double student_t_abs;  ///< |mu + sigma * t_quantile(q, nu)| under the t fit
};

struct FitResult {
  NormalFit normal;
  StudentTFit student_t;
  std::size_t count;
  double sample_mean;
  double sample_std;
  std::vector<CriticalValueRow> critical_values;
};

/// Thrown when the likelihood optimizer fails; carries the last iterate.
class fit_error : public numerical_error {
 public:
  fit_error(const std::string& what, TParams last)
      : numerical_error(what), last_iterate(last) {}

  TParams last_iterate;
};

/// r_i = ln(P_{i+1} / P_i); requires at least two positive prices.
ReturnSeries log_returns(std::span<const double> prices, std::string label = {});

/// Sample-based maximum-likelihood normal fit. The standard error of mu is
/// s/sqrt(N).
NormalFit fit_normal(const ReturnSeries& series);

/// Maximum-likelihood location-scale t fit; nu is optimized in log space over
/// [0.5, 200]. Standard errors come from the observed information (inverse
/// Hessian of the negative log likelihood at the optimum).
StudentTFit fit_t(const ReturnSeries& series);

/// Negative log likelihood of the location-scale t model on the series.
double t_negative_log_likelihood(const ReturnSeries& series, const TParams& params);

/// Both fits plus descriptive statistics and critical values at the given
/// exceedance levels (default 1e-4, 1e-3, 1e-2).
FitResult fit_all(const ReturnSeries& series, std::span<const double> q_levels = {});

/// Critical values |x_c(q)| under both fitted distributions.
std::vector<CriticalValueRow> critical_report(const FitResult& fit,
                                              std::span<const double> q_levels);

/// P{xi > threshold} under the t distribution relative to the normal.
double tail_mass_ratio(double nu, double threshold);

/// Reads a return series from CSV. Layout is detected from the header row:
/// a "return" column is used directly, otherwise a "close" column is
/// converted through log_returns.
ReturnSeries read_series_csv(const std::string& path);

}  // namespace gosset
