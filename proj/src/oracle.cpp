// SPDX-License-Identifier: Apache-2.0
#include "gosset/oracle.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "gosset/distributions.hpp"

namespace gosset {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform draw on the open interval (0, 1) with 53-bit resolution.
double u01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

struct BatchTotals {
  double payoff = 0.0;
  double payoff_sq = 0.0;
};

McEstimate accumulate_batches(std::uint64_t samples, std::uint64_t batch_size,
                              const std::function<BatchTotals(std::uint64_t, std::uint64_t)>& run) {
  const std::uint64_t batch = std::max<std::uint64_t>(batch_size, 1);
  const std::uint64_t n_batches = (samples + batch - 1) / batch;
  std::vector<BatchTotals> parts(n_batches);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(hw, n_batches));
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t b = next.fetch_add(1); b < n_batches; b = next.fetch_add(1)) {
      const std::uint64_t count = (b + 1 == n_batches) ? samples - b * batch : batch;
      parts[b] = run(b, count);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Merge in batch order so the result does not depend on scheduling.
  KahanSum total;
  KahanSum total_sq;
  for (const BatchTotals& p : parts) {
    total.add(p.payoff);
    total_sq.add(p.payoff_sq);
  }
  const double n = static_cast<double>(samples);
  const double mean = total.sum / n;
  double var = 0.0;
  if (samples > 1) var = std::max(0.0, (total_sq.sum / n - mean * mean) * n / (n - 1.0));
  return {mean, std::sqrt(var / n), samples};
}

}  // namespace

TVariateStream::TVariateStream(double nu, std::uint64_t seed) : nu_(nu), rng_(seed) {
  if (!(nu > 0.0)) throw domain_error("TVariateStream: nu must be > 0");
}

double TVariateStream::next() { return t_quantile(u01(rng_), nu_); }

XiSampler::XiSampler(double nu, const TailPolicy& policy, std::uint64_t seed)
    : nu_(nu), rng_(seed) {
  const TailPolicy res = resolve_policy(policy, nu);
  mode_ = res.mode;
  p_ = *res.p;
  x_c_ = *res.x_c;
}

double XiSampler::next() {
  const double u = u01(rng_);
  if (mode_ == TailMode::Capped) {
    // u >= p lands in the clamped tail; below it min(quantile, x_c) = quantile.
    return u >= p_ ? x_c_ : t_quantile(u, nu_);
  }
  return t_quantile(u * p_, nu_);
}

McEstimate mc_price(const MarketParams& market, double nu, const TailPolicy& policy,
                    OptionKind kind, const McConfig& config) {
  market.validate();
  if (config.samples < 1) throw domain_error("mc_price: samples must be >= 1");
  const TailPolicy res = resolve_policy(policy, nu);
  const MartingaleScale scale = martingale_scale(market, nu, res);

  const double sigma_t = market.sigma_t();
  const double ln_a = std::log(scale.a_t);
  const double strike = market.strike;
  const double disc = std::exp(-market.rate * market.tenor);
  const bool call = kind == OptionKind::Call;

  auto run = [&](std::uint64_t b, std::uint64_t count) {
    XiSampler sampler(nu, res, splitmix64(config.seed ^ ((b + 1) * 0x9E3779B97F4A7C15ull)));
    KahanSum pay;
    KahanSum pay_sq;
    for (std::uint64_t i = 0; i < count; ++i) {
      const double s_t = std::exp(ln_a + sigma_t * sampler.next());
      const double payoff = call ? std::max(s_t - strike, 0.0) : std::max(strike - s_t, 0.0);
      const double v = disc * payoff;
      pay.add(v);
      pay_sq.add(v * v);
    }
    return BatchTotals{pay.sum, pay_sq.sum};
  };
  return accumulate_batches(config.samples, config.batch, run);
}

McEstimate mc_price_black_scholes(const MarketParams& market, OptionKind kind,
                                  const McConfig& config) {
  market.validate();
  if (config.samples < 1) throw domain_error("mc_price: samples must be >= 1");
  const double sigma_t = market.sigma_t();
  const double ln_a =
      std::log(market.s0) + market.rate * market.tenor - 0.5 * sigma_t * sigma_t;
  const double strike = market.strike;
  const double disc = std::exp(-market.rate * market.tenor);
  const bool call = kind == OptionKind::Call;

  auto run = [&](std::uint64_t b, std::uint64_t count) {
    std::mt19937_64 rng(splitmix64(config.seed ^ ((b + 1) * 0x9E3779B97F4A7C15ull)));
    KahanSum pay;
    KahanSum pay_sq;
    for (std::uint64_t i = 0; i < count; ++i) {
      const double s_t = std::exp(ln_a + sigma_t * normal_quantile(u01(rng)));
      const double payoff = call ? std::max(s_t - strike, 0.0) : std::max(strike - s_t, 0.0);
      const double v = disc * payoff;
      pay.add(v);
      pay_sq.add(v * v);
    }
    return BatchTotals{pay.sum, pay_sq.sum};
  };
  return accumulate_batches(config.samples, config.batch, run);
}

}  // namespace gosset
