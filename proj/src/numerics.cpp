// SPDX-License-Identifier: Apache-2.0
#include "gosset/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace gosset {

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};
constexpr double kHalfLn2Pi = 0.9189385332046727418;  // ln(2*pi)/2

double lanczos_sum(double x) {
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  return acc;
}

// Tail of the Stirling series for ln_gamma, valid for x >= 10.
double stirling_tail(double x) {
  static constexpr std::array<double, 8> kCoef = {
      1.0 / 12.0,   -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
  };
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double power = inv;
  double sum = 0.0;
  for (double c : kCoef) {
    sum += c * power;
    power *= inv2;
  }
  return sum;
}

}  // namespace

double ln_gamma(double x) {
  if (std::isnan(x) || !(x > 0.0)) throw domain_error("ln_gamma: x must be > 0");
  if (std::isinf(x)) return x;
  if (x < 0.5) return ln_gamma(x + 1.0) - std::log(x);
  const double t = x + kLanczosG - 0.5;
  return kHalfLn2Pi + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

double ln_gamma_shift(double a, double s) {
  if (!(a > 0.0)) throw domain_error("ln_gamma_shift: a must be > 0");
  if (!(s >= 0.0 && s <= 1.0)) throw domain_error("ln_gamma_shift: s must lie in [0, 1]");
  if (std::isinf(a)) return std::numeric_limits<double>::quiet_NaN();
  if (a < 10.0) return ln_gamma(a + s) - ln_gamma(a);
  double r = s * std::log(a);
  r += (a + s - 0.5) * std::log1p(s / a) - s;
  r += stirling_tail(a + s) - stirling_tail(a);
  return r;
}

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 10000;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h;
  }
  throw numerical_error("regularized_incomplete_beta: continued fraction did not converge");
}

double ln_beta(double a, double b) {
  const double mn = std::min(a, b);
  const double mx = std::max(a, b);
  if (mn <= 1.0 && mx >= 10.0) return ln_gamma(mn) - ln_gamma_shift(mx, mn);
  return ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b);
}

// Regularized upper incomplete gamma Q(s, x) by continued fraction,
// intended for x > s + 1.
double gamma_q_upper(double s, double x) {
  const double ln_pre = -x + s * std::log(x) - ln_gamma(s);
  double b = x + 1.0 - s;
  double c = 1e300;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 2000; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::fabs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= 1e-15) return std::exp(ln_pre) * h;
  }
  throw numerical_error("incomplete gamma continued fraction did not converge");
}

// I_y(p, q) by the ascending series
//   I_y(p, q) = y^p (1-y)^q / (p B(p, q)) * 2F1(p+q, 1; p+1; y),
// intended for small p with large q, where the continued fraction stalls.
// Terms grow before they decay, so the partial sum is rescaled on the fly.
double ibeta_series_small_first(double p, double q, double y) {
  constexpr double kRescale = 1e280;
  const double ln_prefix =
      p * std::log(y) + q * std::log1p(-y) - std::log(p) - ln_beta(p, q);
  const double k_grow = y * (p + q) / std::max(1.0 - y, 1e-16);
  const std::size_t max_iter = static_cast<std::size_t>(k_grow) + 2000000;
  double sum = 1.0;
  double term = 1.0;
  double log_scale = 0.0;
  for (std::size_t k = 0; k < max_iter; ++k) {
    term *= y * (p + q + k) / (p + 1.0 + k);
    sum += term;
    if (static_cast<double>(k) > k_grow && term < 1e-17 * sum) {
      return std::exp(ln_prefix + std::log(sum) + log_scale);
    }
    if (sum > kRescale) {
      sum /= kRescale;
      term /= kRescale;
      log_scale += std::log(kRescale);
    }
  }
  throw numerical_error("regularized_incomplete_beta: series did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw domain_error("regularized_incomplete_beta: a and b must be > 0");
  if (std::isnan(x) || x < 0.0 || x > 1.0)
    throw domain_error("regularized_incomplete_beta: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  // Very unbalanced shapes defeat the continued fraction; switch to the
  // ascending series on the short side. When the short-side mass is
  // essentially 1 the complement would cancel, so the far tail is computed
  // by its incomplete-gamma limit instead:
  //   P{Beta(p, q) > y} ~ Gamma(p+q)/(Gamma(q) (q-1)^p) * Q(p, -(q-1)ln(1-y)).
  const auto far_tail = [](double p, double q, double y) {
    const double lambda = -(q - 1.0) * std::log1p(-y);
    return std::exp(ln_gamma_shift(q, p) - p * std::log(q - 1.0)) *
           gamma_q_upper(p, lambda);
  };
  if (a > 3000.0 && b <= 1.0 && 1.0 - x < 0.5) {
    const double y = 1.0 - x;
    const double s = ibeta_series_small_first(b, a, y);
    if (s < 1.0 - 1e-8) return 1.0 - s;
    return far_tail(b, a, y);
  }
  if (b > 3000.0 && a <= 1.0 && x < 0.5) {
    const double s = ibeta_series_small_first(a, b, x);
    if (s < 1.0 - 1e-8) return s;
    return 1.0 - far_tail(a, b, x);
  }

  const double ln_bt = a * std::log(x) + b * std::log1p(-x) - ln_beta(a, b);
  const double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cf(a, b, x) / a;
  return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

namespace {

// 15-point Kronrod nodes (positive half) with the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0,
};
constexpr std::array<double, 8> kWgk = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278,
};
constexpr std::array<double, 4> kWg = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694,
};

struct Piece {
  std::function<double(double)> g;
  double a;
  double b;
};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  std::size_t piece;

  bool operator<(const Segment& o) const { return error < o.error; }
};

struct NonFiniteEval {
  double x;
};

Segment gk15(const std::function<double(double)>& g, double a, double b,
             std::size_t piece, std::size_t& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  auto eval = [&](double x) {
    ++evals;
    const double v = g(x);
    if (!std::isfinite(v)) throw NonFiniteEval{x};
    return v;
  };

  double fv1[7];
  double fv2[7];
  const double fc = eval(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::fabs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    fv1[j] = eval(c - dx);
    fv2[j] = eval(c + dx);
    const double s = fv1[j] + fv2[j];
    resk += kWgk[j] * s;
    resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

  const double value = resk * h;
  resabs *= h;
  resasc *= h;
  double err = std::fabs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / eps50)
    err = std::max(err, eps50 * resabs);
  return {a, b, value, err, piece};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, Interval domain,
                           const QuadratureOptions& opts) {
  if (std::isnan(domain.lower) || std::isnan(domain.upper))
    throw domain_error("integrate: domain endpoints must not be NaN");
  if (!(domain.lower <= domain.upper))
    throw domain_error("integrate: domain.lower must not exceed domain.upper");
  if (!(opts.rel_tol > 0.0) || !(opts.abs_tol > 0.0))
    throw domain_error("integrate: tolerances must be positive");

  std::size_t evals = 0;
  if (domain.lower == domain.upper) {
    if (std::isfinite(domain.lower)) {
      const double v = f(domain.lower);
      ++evals;
      if (!std::isfinite(v))
        throw quadrature_error("integrate: integrand is not finite", {0.0, 0.0, evals});
    }
    return {0.0, 0.0, std::max<std::size_t>(evals, 1)};
  }

  const bool lo_inf = std::isinf(domain.lower);
  const bool hi_inf = std::isinf(domain.upper);
  std::vector<Piece> pieces;
  auto upper_map = [&f](double a) {
    return [&f, a](double t) {
      const double om = 1.0 - t;
      if (om <= 0.0) return 0.0;
      const double x = a + t / om;
      if (!std::isfinite(x)) return 0.0;
      return f(x) / (om * om);
    };
  };
  auto lower_map = [&f](double b) {
    return [&f, b](double t) {
      const double om = 1.0 - t;
      if (om <= 0.0) return 0.0;
      const double x = b - t / om;
      if (!std::isfinite(x)) return 0.0;
      return f(x) / (om * om);
    };
  };
  // Semi-infinite maps are anchored at zero when the finite endpoint lies on
  // the other side of it; the finite part is integrated directly. Mapping
  // from a remote endpoint would squeeze the integrand's mass into a sliver
  // of the unit interval that the first rule evaluations could step over.
  if (!lo_inf && !hi_inf) {
    pieces.push_back({[&f](double x) { return f(x); }, domain.lower, domain.upper});
  } else if (!lo_inf && hi_inf) {
    if (domain.lower < 0.0)
      pieces.push_back({[&f](double x) { return f(x); }, domain.lower, 0.0});
    pieces.push_back({upper_map(std::max(domain.lower, 0.0)), 0.0, 1.0});
  } else if (lo_inf && !hi_inf) {
    if (domain.upper > 0.0)
      pieces.push_back({[&f](double x) { return f(x); }, 0.0, domain.upper});
    pieces.push_back({lower_map(std::min(domain.upper, 0.0)), 0.0, 1.0});
  } else {
    pieces.push_back({lower_map(0.0), 0.0, 1.0});
    pieces.push_back({upper_map(0.0), 0.0, 1.0});
  }

  double total_value = 0.0;
  double total_error = 0.0;
  std::priority_queue<Segment> heap;
  auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::fabs(total_value)); };

  try {
    constexpr int kInitialSplits = 4;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const double width = (pieces[i].b - pieces[i].a) / kInitialSplits;
      for (int k = 0; k < kInitialSplits; ++k) {
        const double a = pieces[i].a + k * width;
        const double b = (k + 1 == kInitialSplits) ? pieces[i].b : a + width;
        Segment s = gk15(pieces[i].g, a, b, i, evals);
        total_value += s.value;
        total_error += s.error;
        heap.push(s);
      }
    }
    while (total_error > tolerance() && !heap.empty() &&
           evals + 30 <= opts.max_evaluations) {
      const Segment s = heap.top();
      heap.pop();
      if (s.error == 0.0) break;
      const double m = 0.5 * (s.a + s.b);
      if (!(m > s.a && m < s.b)) continue;  // cannot split further
      const Segment s1 = gk15(pieces[s.piece].g, s.a, m, s.piece, evals);
      const Segment s2 = gk15(pieces[s.piece].g, m, s.b, s.piece, evals);
      total_value += s1.value + s2.value - s.value;
      total_error += s1.error + s2.error - s.error;
      heap.push(s1);
      heap.push(s2);
    }
  } catch (const NonFiniteEval& e) {
    throw quadrature_error(
        "integrate: integrand returned a non-finite value near x = " + std::to_string(e.x),
        {total_value, total_error, evals});
  }

  if (total_error <= tolerance()) return {total_value, total_error, evals};
  throw quadrature_error("integrate: tolerance not met within the evaluation budget",
                         {total_value, total_error, evals});
}

}  // namespace gosset
