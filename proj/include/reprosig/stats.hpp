// Statistics kernel: point-biserial correlation, Mann-Whitney U,
// chi-squared contingency test, and the special functions behind their
// two-sided p-values. Everything is implemented here directly; the
// incomplete gamma/beta functions use the classic series and continued
// fraction expansions (modified Lentz iteration), targeting absolute
// error below 1e-10.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reprosig/common.hpp"

namespace reprosig {

struct TestResult {
  double statistic = 0;
  std::optional<double> df;
  double p_value = 1;
  int n_group1 = 0;
  int n_group0 = 0;
  std::string method_note;
};

namespace detail {

inline constexpr double kFpMin = 1e-300;
inline constexpr double kConvEps = 1e-16;

inline double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 2000; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kConvEps)
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  throw Error("incomplete gamma series did not converge");
}

inline double gamma_q_continued_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 2000; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kConvEps)
      return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  throw Error("incomplete gamma continued fraction did not converge");
}

inline double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 1000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 3e-16) return h;
  }
  throw Error("incomplete beta continued fraction did not converge");
}

}  // namespace detail

/// Regularized lower incomplete gamma P(a, x).
inline double reg_incomplete_gamma_p(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0))
    throw Error("reg_incomplete_gamma: requires a > 0 and x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return detail::gamma_p_series(a, x);
  return 1.0 - detail::gamma_q_continued_fraction(a, x);
}

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
inline double reg_incomplete_gamma_q(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0))
    throw Error("reg_incomplete_gamma: requires a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
  return detail::gamma_q_continued_fraction(a, x);
}

/// Regularized incomplete beta I_x(a, b).
inline double reg_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0) || !(x <= 1.0))
    throw Error("reg_incomplete_beta: requires a, b > 0 and x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) -
                             std::lgamma(b) + a * std::log(x) +
                             b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0))
    return bt * detail::beta_continued_fraction(a, b, x) / a;
  return 1.0 - bt * detail::beta_continued_fraction(b, a, 1.0 - x) / b;
}

/// Upper tail of Student's t with df degrees of freedom.
inline double student_t_sf(double t, double df) {
  if (!(df > 0.0)) throw Error("student_t_sf: requires df > 0");
  if (std::isinf(t)) return t > 0 ? 0.0 : 1.0;
  const double x = df / (df + t * t);
  const double half = 0.5 * reg_incomplete_beta(df / 2.0, 0.5, x);
  return t >= 0.0 ? half : 1.0 - half;
}

/// Standard normal upper tail.
inline double std_normal_sf(double z) {
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

/// Point-biserial correlation of values against a 0/1 dichotomy, with a
/// two-sided p-value from the t distribution on n-2 degrees of freedom.
/// Identical to the Pearson correlation of values against the labels.
inline TestResult point_biserial(std::span<const double> values,
                                 std::span<const int> labels) {
  if (values.size() != labels.size())
    throw Error("point_biserial: values and labels differ in length");
  const int n = static_cast<int>(values.size());
  if (n < 3) throw Error("point_biserial: need at least 3 observations");

  long long n1 = 0;
  long long n0 = 0;
  double sum1 = 0;
  double sum0 = 0;
  for (int i = 0; i < n; ++i) {
    if (labels[i] == 1) {
      ++n1;
      sum1 += values[i];
    } else if (labels[i] == 0) {
      ++n0;
      sum0 += values[i];
    } else {
      throw Error("point_biserial: labels must be 0 or 1");
    }
  }
  if (n1 == 0 || n0 == 0)
    throw Error("degenerate dichotomy: both label classes required");

  const double mean = (sum1 + sum0) / n;
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / n);
  if (sd == 0.0) throw Error("constant feature: values have zero variance");

  const double m1 = sum1 / static_cast<double>(n1);
  const double m0 = sum0 / static_cast<double>(n0);
  double r = (m1 - m0) / sd *
             std::sqrt(static_cast<double>(n1) * static_cast<double>(n0) /
                       (static_cast<double>(n) * static_cast<double>(n)));
  r = std::clamp(r, -1.0, 1.0);

  const double df = n - 2;
  double p;
  if (1.0 - r * r <= 0.0) {
    p = 0.0;
  } else {
    const double t = r * std::sqrt(df / (1.0 - r * r));
    p = std::min(1.0, 2.0 * student_t_sf(std::fabs(t), df));
  }

  TestResult out;
  out.statistic = r;
  out.df = df;
  out.p_value = p;
  out.n_group1 = static_cast<int>(n1);
  out.n_group0 = static_cast<int>(n0);
  out.method_note = "two-sided t on r, df=n-2";
  return out;
}

namespace detail {

// P(min(U1, U2) <= u) by counting rank subsets: the number of
// n1-subsets of {1..n} whose rank sum stays at or below the threshold,
// doubled by the symmetry of the U distribution. Valid for untied ranks.
inline double mwu_exact_p(int n1, int n0, double u_observed) {
  const long long u = std::llround(u_observed);
  const long long products = static_cast<long long>(n1) * n0;
  if (2 * u >= products) return 1.0;
  const int n = n1 + n0;
  const long long smax = u + static_cast<long long>(n1) * (n1 + 1) / 2;
  std::vector<std::vector<double>> dp(
      n1 + 1, std::vector<double>(static_cast<size_t>(smax) + 1, 0.0));
  dp[0][0] = 1.0;
  for (int r = 1; r <= n; ++r) {
    for (int k = std::min(n1, r); k >= 1; --k) {
      for (long long s = smax; s >= r; --s) {
        dp[k][static_cast<size_t>(s)] += dp[k - 1][static_cast<size_t>(s - r)];
      }
    }
  }
  double at_or_below = 0.0;
  for (long long s = 0; s <= smax; ++s)
    at_or_below += dp[n1][static_cast<size_t>(s)];
  double total = 1.0;
  for (int i = 1; i <= n1; ++i)
    total = total * (n - n1 + i) / i;
  return std::min(1.0, 2.0 * at_or_below / total);
}

}  // namespace detail

/// Mann-Whitney U with midranks. The statistic is min(U1, U2). The
/// two-sided p-value comes from exhaustive enumeration of rank subsets
/// when both groups have at most 8 untied observations, and otherwise
/// from the tie-corrected normal approximation with continuity
/// correction 0.5.
inline TestResult mann_whitney_u(std::span<const double> group1,
                                 std::span<const double> group0) {
  if (group1.empty() || group0.empty())
    throw Error("mann_whitney_u: empty group");
  const int n1 = static_cast<int>(group1.size());
  const int n0 = static_cast<int>(group0.size());
  const int n = n1 + n0;

  std::vector<std::pair<double, int>> pooled;
  pooled.reserve(n);
  for (double v : group1) pooled.emplace_back(v, 1);
  for (double v : group0) pooled.emplace_back(v, 0);
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  double rank_sum1 = 0;
  double tie_term = 0;
  bool has_ties = false;
  size_t i = 0;
  while (i < pooled.size()) {
    size_t j = i + 1;
    while (j < pooled.size() && pooled[j].first == pooled[i].first) ++j;
    const double midrank = (static_cast<double>(i) + static_cast<double>(j) + 1.0) / 2.0;
    const double t = static_cast<double>(j - i);
    if (j - i > 1) {
      has_ties = true;
      tie_term += t * t * t - t;
    }
    for (size_t k = i; k < j; ++k)
      if (pooled[k].second == 1) rank_sum1 += midrank;
    i = j;
  }

  const double products = static_cast<double>(n1) * n0;
  const double u1 = rank_sum1 - static_cast<double>(n1) * (n1 + 1) / 2.0;
  const double u2 = products - u1;
  const double u = std::min(u1, u2);

  TestResult out;
  out.statistic = u;
  out.n_group1 = n1;
  out.n_group0 = n0;

  if (n1 <= 8 && n0 <= 8 && !has_ties) {
    out.p_value = detail::mwu_exact_p(n1, n0, u);
    out.method_note = "exact enumeration";
    return out;
  }

  const double mu = products / 2.0;
  const double variance =
      (products / 12.0) *
      ((n + 1.0) - tie_term / (static_cast<double>(n) * (n - 1.0)));
  if (variance <= 0.0) throw Error("all values tied");
  const double z = std::max(0.0, (mu - u - 0.5) / std::sqrt(variance));
  out.p_value = std::min(1.0, 2.0 * std_normal_sf(z));
  out.method_note =
      has_ties ? "normal approximation, tie-corrected" : "normal approximation";
  return out;
}

/// 2xK table of counts; rows[0] holds the label-0 row, rows[1] label 1.
struct ContingencyTable {
  std::array<std::vector<long long>, 2> rows;

  size_t n_categories() const { return rows[0].size(); }
};

/// Pearson chi-squared test of independence for a 2xK table. Yates'
/// continuity correction (|O-E| reduced by 0.5, floored at zero) applies
/// only to 2x2 tables and only when requested.
inline TestResult chi_squared(const ContingencyTable& table, bool yates) {
  const auto& r0 = table.rows[0];
  const auto& r1 = table.rows[1];
  if (r0.size() != r1.size()) throw Error("chi_squared: ragged table");
  const size_t k = r0.size();
  if (k < 2) throw Error("chi_squared: need at least 2 categories");

  long long row0 = 0;
  long long row1 = 0;
  std::vector<long long> col(k, 0);
  for (size_t j = 0; j < k; ++j) {
    if (r0[j] < 0 || r1[j] < 0) throw Error("chi_squared: negative cell");
    row0 += r0[j];
    row1 += r1[j];
    col[j] = r0[j] + r1[j];
  }
  if (row0 == 0 || row1 == 0) throw Error("empty margin: zero row sum");
  for (long long c : col)
    if (c == 0) throw Error("empty margin: zero column sum");

  const double total = static_cast<double>(row0 + row1);
  const double correction = (yates && k == 2) ? 0.5 : 0.0;
  double chi2 = 0;
  for (size_t j = 0; j < k; ++j) {
    const double e0 = static_cast<double>(row0) * col[j] / total;
    const double e1 = static_cast<double>(row1) * col[j] / total;
    const double d0 = std::max(0.0, std::fabs(r0[j] - e0) - correction);
    const double d1 = std::max(0.0, std::fabs(r1[j] - e1) - correction);
    chi2 += d0 * d0 / e0 + d1 * d1 / e1;
  }
  const double df = static_cast<double>(k - 1);

  TestResult out;
  out.statistic = chi2;
  out.df = df;
  out.p_value = reg_incomplete_gamma_q(df / 2.0, chi2 / 2.0);
  out.n_group1 = static_cast<int>(row1);
  out.n_group0 = static_cast<int>(row0);
  out.method_note = correction > 0 ? "chi-squared, Yates corrected"
                                   : "chi-squared, uncorrected";
  return out;
}

}  // namespace reprosig
