// SPDX-License-Identifier: Apache-2.0
#include "gosset/calibration.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace gosset {

namespace {

constexpr double kNuMin = 0.5;
constexpr double kNuMax = 200.0;
constexpr std::array<double, 3> kDefaultQLevels = {1e-4, 1e-3, 1e-2};

struct Moments {
  std::size_t n;
  double mean;
  double m2;  // sum of squared deviations
  double sample_std;
  double excess_kurtosis;
};

Moments moments(const std::vector<double>& r) {
  const std::size_t n = r.size();
  double mean = 0.0;
  for (double x : r) mean += x;
  mean /= static_cast<double>(n);
  double m2 = 0.0;
  double m4 = 0.0;
  for (double x : r) {
    const double d = x - mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  const double var = m2 / static_cast<double>(n);
  const double kurt = var > 0.0 ? m4 / (static_cast<double>(n) * var * var) - 3.0 : 0.0;
  const double s = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0;
  return {n, mean, m2, s, kurt};
}

void validate_for_fit(const ReturnSeries& series) {
  if (series.returns.size() < 30)
    throw domain_error("fit: at least 30 returns are required");
  for (double x : series.returns)
    if (!std::isfinite(x)) throw domain_error("fit: returns must be finite");
  const Moments m = moments(series.returns);
  // Constant series produce a variance at the rounding floor, not exactly 0.
  if (!(m.m2 > 0.0) || m.sample_std <= 1e-13 * std::fabs(m.mean))
    throw domain_error("fit: degenerate series (zero variance)");
}

using Vec3 = std::array<double, 3>;

struct SimplexResult {
  Vec3 x;
  double f;
  bool converged;
};

// Nelder-Mead simplex minimization for the 3-parameter likelihoods.
SimplexResult nelder_mead(const std::function<double(const Vec3&)>& fn, Vec3 x0,
                          Vec3 step, int max_iter, double ftol_rel) {
  struct Vertex {
    Vec3 x;
    double f;
  };
  std::array<Vertex, 4> v;
  v[0] = {x0, fn(x0)};
  for (int i = 0; i < 3; ++i) {
    Vec3 x = x0;
    x[i] += step[i];
    v[i + 1] = {x, fn(x)};
  }
  auto order = [&] {
    std::sort(v.begin(), v.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  order();

  bool converged = false;
  for (int iter = 0; iter < max_iter; ++iter) {
    if (v[3].f - v[0].f <= ftol_rel * (std::fabs(v[0].f) + 1e-300)) {
      converged = true;
      break;
    }
    Vec3 centroid{};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) centroid[k] += v[i].x[k] / 3.0;
    auto blend = [&](double coef) {
      Vec3 x;
      for (int k = 0; k < 3; ++k) x[k] = centroid[k] + coef * (v[3].x[k] - centroid[k]);
      return x;
    };
    const Vec3 xr = blend(-1.0);
    const double fr = fn(xr);
    if (fr < v[0].f) {
      const Vec3 xe = blend(-2.0);
      const double fe = fn(xe);
      v[3] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < v[2].f) {
      v[3] = {xr, fr};
    } else {
      const Vec3 xc = blend(fr < v[3].f ? -0.5 : 0.5);
      const double fc = fn(xc);
      if (fc < std::min(fr, v[3].f)) {
        v[3] = {xc, fc};
      } else {
        for (int i = 1; i < 4; ++i) {
          for (int k = 0; k < 3; ++k) v[i].x[k] = v[0].x[k] + 0.5 * (v[i].x[k] - v[0].x[k]);
          v[i].f = fn(v[i].x);
        }
      }
    }
    order();
  }
  return {v[0].x, v[0].f, converged};
}

double nll(const std::vector<double>& r, double mu, double sigma, double nu) {
  const double n = static_cast<double>(r.size());
  const double half = 0.5 * (nu + 1.0);
  double acc = 0.0;
  for (double x : r) {
    const double z = (x - mu) / sigma;
    acc += std::log1p(z * z / nu);
  }
  return -(n * (std::log(lambda_nu(nu)) - std::log(sigma)) - half * acc);
}

// Symmetric 3x3 inverse via cofactors.
bool invert3(const std::array<std::array<double, 3>, 3>& h,
             std::array<std::array<double, 3>, 3>& out) {
  const double c00 = h[1][1] * h[2][2] - h[1][2] * h[2][1];
  const double c01 = h[1][2] * h[2][0] - h[1][0] * h[2][2];
  const double c02 = h[1][0] * h[2][1] - h[1][1] * h[2][0];
  const double det = h[0][0] * c00 + h[0][1] * c01 + h[0][2] * c02;
  if (det == 0.0 || !std::isfinite(det)) return false;
  out[0][0] = c00 / det;
  out[0][1] = (h[0][2] * h[2][1] - h[0][1] * h[2][2]) / det;
  out[0][2] = (h[0][1] * h[1][2] - h[0][2] * h[1][1]) / det;
  out[1][0] = c01 / det;
  out[1][1] = (h[0][0] * h[2][2] - h[0][2] * h[2][0]) / det;
  out[1][2] = (h[0][2] * h[1][0] - h[0][0] * h[1][2]) / det;
  out[2][0] = c02 / det;
  out[2][1] = (h[0][1] * h[2][0] - h[0][0] * h[2][1]) / det;
  out[2][2] = (h[0][0] * h[1][1] - h[0][1] * h[1][0]) / det;
  return true;
}

std::string trim(std::string s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_number(const std::string& cell, std::size_t line_no) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = first + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw io_error("CSV: cannot parse number '" + cell + "' on line " +
                   std::to_string(line_no));
  return v;
}

}  // namespace

ReturnSeries log_returns(std::span<const double> prices, std::string label) {
  if (prices.size() < 2) throw domain_error("log_returns: at least two prices required");
  ReturnSeries series;
  series.label = std::move(label);
  series.returns.reserve(prices.size() - 1);
  for (std::size_t i = 0; i + 1 < prices.size(); ++i) {
    if (!(prices[i] > 0.0) || !(prices[i + 1] > 0.0) || !std::isfinite(prices[i]) ||
        !std::isfinite(prices[i + 1]))
      throw domain_error("log_returns: prices must be positive and finite");
    series.returns.push_back(std::log(prices[i + 1] / prices[i]));
  }
  return series;
}

NormalFit fit_normal(const ReturnSeries& series) {
  validate_for_fit(series);
  const Moments m = moments(series.returns);
  const double n = static_cast<double>(m.n);
  const double sigma = std::sqrt(m.m2 / n);
  return {{m.mean, m.sample_std / std::sqrt(n)}, {sigma, sigma / std::sqrt(2.0 * n)}};
}

double t_negative_log_likelihood(const ReturnSeries& series, const TParams& params) {
  params.validate();
  if (series.returns.empty()) throw domain_error("likelihood of an empty series");
  return nll(series.returns, params.mu, params.sigma, params.nu);
}

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

// Central-difference Hessian of fn at c with per-coordinate steps h.
Mat3 hessian(const std::function<double(const Vec3&)>& fn, const Vec3& c,
             const std::array<double, 3>& h) {
  auto at = [&](int i, double di, int j, double dj) {
    Vec3 x = c;
    x[i] += di;
    if (j >= 0) x[j] += dj;
    return fn(x);
  };
  const double f0 = fn(c);
  Mat3 hess{};
  for (int i = 0; i < 3; ++i)
    hess[i][i] = (at(i, h[i], -1, 0.0) - 2.0 * f0 + at(i, -h[i], -1, 0.0)) / (h[i] * h[i]);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const double v = (at(i, h[i], j, h[j]) - at(i, h[i], j, -h[j]) -
                        at(i, -h[i], j, h[j]) + at(i, -h[i], j, -h[j])) /
                       (4.0 * h[i] * h[j]);
      hess[i][j] = hess[j][i] = v;
    }
  return hess;
}

Vec3 gradient(const std::function<double(const Vec3&)>& fn, const Vec3& c,
              const std::array<double, 3>& h) {
  Vec3 g{};
  for (int i = 0; i < 3; ++i) {
    Vec3 hi = c;
    Vec3 lo = c;
    hi[i] += h[i];
    lo[i] -= h[i];
    g[i] = (fn(hi) - fn(lo)) / (2.0 * h[i]);
  }
  return g;
}

}  // namespace

StudentTFit fit_t(const ReturnSeries& series) {
  validate_for_fit(series);
  const auto& r = series.returns;
  const Moments m = moments(r);

  // Moment-based starting point: invert the excess-kurtosis relation for nu,
  // deflate the sample std to the t scale.
  double nu0 = m.excess_kurtosis > 0.5
                   ? std::clamp(4.0 + 6.0 / m.excess_kurtosis, 2.2, 100.0)
                   : 50.0;
  const double sigma0 = m.sample_std * std::sqrt(std::max(nu0 - 2.0, 0.25) / nu0);

  const double ln_nu_min = std::log(kNuMin);
  const double ln_nu_max = std::log(kNuMax);
  const double ln_sigma0 = std::log(sigma0);
  auto objective = [&](const Vec3& th) {
    if (th[2] < ln_nu_min || th[2] > ln_nu_max)
      return 1e100 * (1.0 + std::fabs(th[2]));
    if (std::fabs(th[1] - ln_sigma0) > 30.0) return 1e100 * (1.0 + std::fabs(th[1]));
    return nll(r, th[0], std::exp(th[1]), std::exp(th[2]));
  };

  Vec3 x0{m.mean, ln_sigma0, std::log(nu0)};
  SimplexResult best = nelder_mead(objective, x0, {0.1 * m.sample_std, 0.2, 0.4}, 4000, 1e-13);
  best = nelder_mead(objective, best.x, {0.01 * m.sample_std, 0.02, 0.04}, 4000, 1e-13);

  double mu_hat = best.x[0];
  double sigma_hat = std::exp(best.x[1]);
  double nu_hat = std::exp(best.x[2]);
  if (!best.converged)
    throw fit_error("fit_t: optimizer did not converge; last iterate mu=" +
                        std::to_string(mu_hat) + " sigma=" + std::to_string(sigma_hat) +
                        " nu=" + std::to_string(nu_hat),
                    {nu_hat, mu_hat, sigma_hat});

  // Work in the natural parameters (mu, sigma, nu) from here on.
  auto fn = [&](const Vec3& x) { return nll(r, x[0], x[1], x[2]); };
  Vec3 c{mu_hat, sigma_hat, nu_hat};

  // A few Newton steps sharpen the simplex optimum well below the
  // equivariance tolerance.
  double f_best = fn(c);
  for (int iter = 0; iter < 3; ++iter) {
    const std::array<double, 3> hg = {1e-5 * c[1], 1e-5 * c[1], 1e-5 * c[2]};
    const std::array<double, 3> hh = {5e-4 * c[1], 5e-4 * c[1], 5e-4 * c[2]};
    const Vec3 g = gradient(fn, c, hg);
    Mat3 inv{};
    if (!invert3(hessian(fn, c, hh), inv)) break;
    Vec3 next = c;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) next[i] -= inv[i][j] * g[j];
    if (!(next[1] > 0.0) || !(next[2] >= kNuMin) || !(next[2] <= kNuMax)) break;
    const double f_next = fn(next);
    if (!(f_next <= f_best + 1e-9)) break;
    c = next;
    f_best = f_next;
  }
  mu_hat = c[0];
  sigma_hat = c[1];
  nu_hat = c[2];

  // Standard errors from the observed information.
  const std::array<double, 3> h = {5e-4 * sigma_hat, 5e-4 * sigma_hat, 5e-4 * nu_hat};
  Mat3 cov{};
  if (!invert3(hessian(fn, c, h), cov) || cov[0][0] <= 0.0 || cov[1][1] <= 0.0 ||
      cov[2][2] <= 0.0)
    throw fit_error("fit_t: observed information is not positive definite",
                    {nu_hat, mu_hat, sigma_hat});

  return {{mu_hat, std::sqrt(cov[0][0])},
          {sigma_hat, std::sqrt(cov[1][1])},
          {nu_hat, std::sqrt(cov[2][2])}};
}

std::vector<CriticalValueRow> critical_report(const FitResult& fit,
                                              std::span<const double> q_levels) {
  std::vector<CriticalValueRow> rows;
  rows.reserve(q_levels.size());
  for (double q : q_levels) {
    if (!(q > 0.0 && q < 1.0)) throw domain_error("critical_report: q must lie in (0, 1)");
    const double xn = fit.normal.mu.value + fit.normal.sigma.value * normal_quantile(q);
    const double xt = fit.student_t.mu.value +
                      fit.student_t.sigma.value * t_quantile(q, fit.student_t.nu.value);
    rows.push_back({q, std::fabs(xn), std::fabs(xt)});
  }
  return rows;
}

FitResult fit_all(const ReturnSeries& series, std::span<const double> q_levels) {
  FitResult result;
  result.normal = fit_normal(series);
  result.student_t = fit_t(series);
  const Moments m = moments(series.returns);
  result.count = m.n;
  result.sample_mean = m.mean;
  result.sample_std = m.sample_std;
  const std::span<const double> levels =
      q_levels.empty() ? std::span<const double>(kDefaultQLevels) : q_levels;
  result.critical_values = critical_report(result, levels);
  return result;
}

double tail_mass_ratio(double nu, double threshold) {
  if (!(threshold > 0.0)) throw domain_error("tail_mass_ratio: threshold must be > 0");
  return t_sf(threshold, nu) / normal_sf(threshold);
}

ReturnSeries read_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw io_error("'" + path + "' is empty");
  if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF)
    line.erase(0, 3);  // UTF-8 BOM

  auto header = split_csv_line(line);
  for (auto& h : header) {
    std::transform(h.begin(), h.end(), h.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  }
  const auto find_col = [&](const std::string& name) -> int {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    return -1;
  };
  const int return_col = find_col("return");
  const int close_col = find_col("close");
  if (return_col < 0 && close_col < 0)
    throw io_error("'" + path + "': header must contain a 'return' or 'close' column");
  const int col = return_col >= 0 ? return_col : close_col;

  std::vector<double> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_csv_line(line);
    if (static_cast<int>(cells.size()) <= col)
      throw io_error("CSV: too few columns on line " + std::to_string(line_no));
    values.push_back(parse_number(cells[col], line_no));
  }
  const std::string label = std::filesystem::path(path).stem().string();
  if (return_col >= 0) {
    for (double v : values)
      if (!std::isfinite(v)) throw io_error("'" + path + "': non-finite return value");
    return {std::move(values), label};
  }
  if (values.size() < 2) throw io_error("'" + path + "': need at least two prices");
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw io_error("'" + path + "': prices must be positive");
  return log_returns(values, label);
}

}  // namespace gosset
