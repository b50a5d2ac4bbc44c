// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "gosset/errors.hpp"

namespace gosset {

/// Integration domain. Either endpoint may be infinite; a degenerate
/// (zero-width) domain integrates to zero.
struct Interval {
  double lower;
  double upper;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  std::size_t max_evaluations = 200000;
};

/// Thrown when the evaluation budget is exhausted before the requested
/// tolerance is met, or when the integrand returns a non-finite value.
/// Carries the best estimate available at the point of failure.
class quadrature_error : public numerical_error {
 public:
  quadrature_error(const std::string& what, QuadratureResult best)
      : numerical_error(what), best_estimate(best) {}

  QuadratureResult best_estimate;
};

/// Natural log of the gamma function for x > 0.
double ln_gamma(double x);

/// ln_gamma(a + s) - ln_gamma(a) for a > 0 and s in [0, 1], computed without
/// the cancellation that the direct difference suffers at large a.
double ln_gamma_shift(double a, double s);

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

/// Adaptive Gauss-Kronrod (7-15) quadrature. Semi-infinite endpoints are
/// mapped onto [0, 1) via x = a + t/(1-t); a doubly infinite domain is split
/// at zero. The returned estimate satisfies
/// abs_error_estimate <= max(abs_tol, rel_tol * |value|).
QuadratureResult integrate(const std::function<double(double)>& f, Interval domain,
                           const QuadratureOptions& opts = {});

}  // namespace gosset
