// Test-only reference implementations, kept independent of the library
// code paths they check: brute-force enumeration, closed-form tails, and
// textbook formulas.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace oracles {

// Deterministic uniform source for generated test instances.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }
  int uniform_int(int lo, int hi) {
    int v = lo + static_cast<int>(uniform() * (hi - lo + 1));
    return v > hi ? hi : v;
  }
  bool bernoulli(double p) { return uniform() < p; }
};

// Textbook Pearson correlation, two-pass.
inline double pearson(std::span<const double> x, std::span<const double> y) {
  const size_t n = x.size();
  double mx = 0;
  double my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0;
  double sxx = 0;
  double syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Student-t CDF for df = 2, closed form.
inline double t_cdf_df2(double t) {
  return 0.5 + t / (2.0 * std::sqrt(t * t + 2.0));
}

inline double normal_upper_tail(double z) {
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

struct MwuReference {
  double u_statistic;  // min(U1, U2)
  double p_exact;      // P(min(U1, U2) <= observed) over all rank splits
};

// Exhaustive enumeration of every group-1 rank subset. Requires untied
// pooled values.
inline MwuReference mwu_enumeration(std::span<const double> g1,
                                    std::span<const double> g0) {
  const int n1 = static_cast<int>(g1.size());
  const int n0 = static_cast<int>(g0.size());
  const int n = n1 + n0;
  std::vector<double> pooled(g1.begin(), g1.end());
  pooled.insert(pooled.end(), g0.begin(), g0.end());
  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw std::logic_error("mwu_enumeration: tied values");

  auto rank_of = [&](double v) {
    return static_cast<double>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin() + 1);
  };
  double r1 = 0;
  for (double v : g1) r1 += rank_of(v);
  const double nn = static_cast<double>(n1) * n0;
  const double u1 = r1 - n1 * (n1 + 1) / 2.0;
  const double u_obs = std::min(u1, nn - u1);

  std::vector<int> pickmask(n, 0);
  std::fill(pickmask.begin(), pickmask.begin() + n1, 1);
  std::sort(pickmask.begin(), pickmask.end(), std::greater<int>());
  long long total = 0;
  long long at_or_below = 0;
  do {
    double rsum = 0;
    for (int i = 0; i < n; ++i)
      if (pickmask[i]) rsum += i + 1;
    const double uu1 = rsum - n1 * (n1 + 1) / 2.0;
    const double uu = std::min(uu1, nn - uu1);
    ++total;
    if (uu <= u_obs) ++at_or_below;
  } while (std::prev_permutation(pickmask.begin(), pickmask.end()));

  return {u_obs, static_cast<double>(at_or_below) / static_cast<double>(total)};
}

// Monte Carlo permutation estimate of P(min(U1,U2) <= observed) for
// untied samples: reshuffles the group assignment of the pooled ranks.
inline double mwu_permutation_p(std::span<const double> g1,
                                std::span<const double> g0, int resamples,
                                std::uint64_t seed) {
  const int n1 = static_cast<int>(g1.size());
  const int n0 = static_cast<int>(g0.size());
  const int n = n1 + n0;
  std::vector<double> pooled(g1.begin(), g1.end());
  pooled.insert(pooled.end(), g0.begin(), g0.end());
  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  auto rank_of = [&](double v) {
    return static_cast<double>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin() + 1);
  };
  double r1 = 0;
  for (double v : g1) r1 += rank_of(v);
  const double nn = static_cast<double>(n1) * n0;
  const double u1 = r1 - n1 * (n1 + 1) / 2.0;
  const double u_obs = std::min(u1, nn - u1);

  std::vector<int> ranks(n);
  for (int i = 0; i < n; ++i) ranks[i] = i + 1;
  Rng rng(seed);
  long long hits = 0;
  for (int rep = 0; rep < resamples; ++rep) {
    // partial Fisher-Yates: only the first n1 slots matter
    for (int i = 0; i < n1; ++i) {
      const int j = rng.uniform_int(i, n - 1);
      std::swap(ranks[i], ranks[j]);
    }
    double rsum = 0;
    for (int i = 0; i < n1; ++i) rsum += ranks[i];
    const double uu1 = rsum - n1 * (n1 + 1) / 2.0;
    const double uu = std::min(uu1, nn - uu1);
    if (uu <= u_obs) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(resamples);
}

}  // namespace oracles
