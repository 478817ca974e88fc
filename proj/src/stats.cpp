// Copyright 2026 The rbwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rbwalk/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rbwalk/errors.hpp"
#include "rbwalk/special_functions.hpp"

namespace rbwalk {

void NeumaierSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    compensation_ += (sum_ - t) + x;
  else
    compensation_ += (x - t) + sum_;
  sum_ = t;
}

double compensated_sum(std::span<const double> xs) {
  NeumaierSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

double compensated_mean(std::span<const double> xs) {
  detail::require(!xs.empty(), "mean of an empty sample");
  return compensated_sum(xs) / static_cast<double>(xs.size());
}

SampleMoments sample_moments(std::span<const double> xs) {
  detail::require(xs.size() >= 2, "sample moments need at least two samples");
  SampleMoments m;
  m.count = xs.size();
  const double n = static_cast<double>(xs.size());
  m.mean = compensated_mean(xs);
  NeumaierSum s2, s3;
  for (double x : xs) {
    const double d = x - m.mean;
    s2.add(d * d);
    s3.add(d * d * d);
  }
  const double m2 = s2.value() / n;
  const double m3 = s3.value() / n;
  m.variance = s2.value() / (n - 1.0);
  m.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
  m.standard_error = std::sqrt(m.variance / n);
  return m;
}

double quantile(std::vector<double> xs, double q) {
  detail::require(!xs.empty(), "quantile of an empty sample");
  detail::require(q >= 0.0 && q <= 1.0, "quantile level must lie in [0, 1]");
  std::sort(xs.begin(), xs.end());
  const double pos = q * static_cast<double>(xs.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, xs.size() - 1);
  return xs[lo] + (pos - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.18) {
    // Jacobi-theta form, accurate for small lambda.
    const double y = std::exp(-std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda));
    double sum = 0.0;
    for (int k = 1; k <= 31; k += 2) sum += std::pow(y, k * k);
    const double cdf = std::sqrt(2.0 * std::numbers::pi) / lambda * sum;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 ? 2.0 : -2.0) * term;
    if (term < 1e-300) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

namespace {

double stephens_p_value(double d, double n_eff) {
  const double root = std::sqrt(n_eff);
  return kolmogorov_survival((root + 0.12 + 0.11 / root) * d);
}

}  // namespace

KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf) {
  detail::require(!samples.empty(), "KS test needs samples");
  std::vector<double> xs(samples.begin(), samples.end());
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return {d, stephens_p_value(d, n)};
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  detail::require(!a.empty() && !b.empty(), "KS test needs samples");
  std::vector<double> xa(a.begin(), a.end()), xb(b.begin(), b.end());
  std::sort(xa.begin(), xa.end());
  std::sort(xb.begin(), xb.end());
  const double na = static_cast<double>(xa.size());
  const double nb = static_cast<double>(xb.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < xa.size() && j < xb.size()) {
    const double x = std::min(xa[i], xb[j]);
    while (i < xa.size() && xa[i] == x) ++i;
    while (j < xb.size() && xb[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return {d, stephens_p_value(d, na * nb / (na + nb))};
}

ChiSquareResult chi_square_test(std::span<const double> observed, std::span<const double> expected,
                                int fitted_parameters, double min_expected) {
  detail::require(observed.size() == expected.size() && !observed.empty(),
                  "chi-square needs matching, non-empty observed and expected counts");
  std::vector<double> obs, exp;
  double o = 0.0, e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    o += observed[i];
    e += expected[i];
    if (e >= min_expected) {
      obs.push_back(o);
      exp.push_back(e);
      o = e = 0.0;
    }
  }
  if (e > 0.0 || o > 0.0) {
    if (exp.empty()) {
      obs.push_back(o);
      exp.push_back(e);
    } else {
      obs.back() += o;
      exp.back() += e;
    }
  }
  ChiSquareResult r;
  r.bins_used = static_cast<int>(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) r.statistic += (obs[i] - exp[i]) * (obs[i] - exp[i]) / exp[i];
  r.degrees_of_freedom = r.bins_used - 1 - fitted_parameters;
  detail::require(r.degrees_of_freedom >= 1, "chi-square has no degrees of freedom left");
  r.p_value = gamma_q(0.5 * r.degrees_of_freedom, 0.5 * r.statistic);
  return r;
}

int Histogram::mode_bin() const {
  return static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

std::vector<double> Histogram::density() const {
  double total = 0.0;
  for (double c : counts) total += c;
  std::vector<double> d(counts.size(), 0.0);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double w = edges[i + 1] - edges[i];
    if (total > 0.0 && w > 0.0) d[i] = counts[i] / (total * w);
  }
  return d;
}

Histogram histogram(std::span<const double> xs, double lo, double hi, int bins) {
  detail::require(bins >= 1, "histogram needs at least one bin");
  detail::require(hi > lo, "histogram range must be non-empty");
  Histogram h;
  h.rule = "fixed";
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  const double width = (hi - lo) / bins;
  for (int i = 0; i <= bins; ++i) h.edges[i] = lo + width * i;
  h.edges.back() = hi;
  h.counts.assign(static_cast<std::size_t>(bins), 0.0);
  for (double x : xs) {
    if (x < lo || x > hi) continue;
    int b = static_cast<int>((x - lo) / width);
    b = std::clamp(b, 0, bins - 1);
    h.counts[b] += 1.0;
  }
  return h;
}

Histogram freedman_diaconis_histogram(std::span<const double> xs) {
  detail::require(!xs.empty(), "histogram of an empty sample");
  const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
  const double lo = *mn, hi = *mx;
  std::vector<double> v(xs.begin(), xs.end());
  const double iqr = quantile(v, 0.75) - quantile(v, 0.25);
  const double width = 2.0 * iqr / std::cbrt(static_cast<double>(xs.size()));
  Histogram h;
  if (hi <= lo || width <= 0.0) {
    const double pad = std::max(std::abs(lo) * 1e-9, 1e-12);
    h = histogram(xs, lo - pad, lo + pad, 1);
  } else {
    const int bins = std::max(1, static_cast<int>(std::ceil((hi - lo) / width)));
    h = histogram(xs, lo, hi, bins);
  }
  h.rule = "freedman-diaconis";
  return h;
}

}  // namespace rbwalk
