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

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace rbwalk {

/// Neumaier-compensated running sum.
class NeumaierSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double compensated_sum(std::span<const double> xs);
double compensated_mean(std::span<const double> xs);

struct SampleMoments {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;        // unbiased (divides by count - 1)
  double skewness = 0.0;        // g1 = m3 / m2^{3/2}
  double standard_error = 0.0;  // sqrt(variance / count)
};

/// Requires at least two samples.
SampleMoments sample_moments(std::span<const double> xs);

/// Linear-interpolated quantile of a sample, q in [0, 1].
double quantile(std::vector<double> xs, double q);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Survival function of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_survival(double lambda);

/// One-sample Kolmogorov-Smirnov test against a continuous CDF. The p-value
/// uses the asymptotic Kolmogorov law with Stephens' small-sample correction
/// lambda = (sqrt(n) + 0.12 + 0.11 / sqrt(n)) D.
KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov test with the same asymptotic p-value.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
  int bins_used = 0;
};

/// Pearson chi-square of observed counts against expected counts. Adjacent
/// bins are merged left to right until each merged bin expects at least
/// `min_expected` counts; any remainder folds into the last merged bin.
/// Degrees of freedom are bins_used - 1 - fitted_parameters.
ChiSquareResult chi_square_test(std::span<const double> observed, std::span<const double> expected,
                                int fitted_parameters = 0, double min_expected = 5.0);

struct Histogram {
  std::vector<double> edges;  // size bins + 1
  std::vector<double> counts;
  std::string_view rule;

  int bins() const { return static_cast<int>(counts.size()); }
  double width() const { return edges.size() > 1 ? edges[1] - edges[0] : 0.0; }
  /// Index of the fullest bin (first one on ties).
  int mode_bin() const;
  double center(int bin) const { return 0.5 * (edges[bin] + edges[bin + 1]); }
  /// counts / (total * width)
  std::vector<double> density() const;
};

/// Equal-width histogram on [lo, hi]; the right edge is inclusive.
Histogram histogram(std::span<const double> xs, double lo, double hi, int bins);

/// Freedman-Diaconis bin width 2 IQR n^{-1/3} over the sample range. Falls
/// back to a single bin when the sample is constant.
Histogram freedman_diaconis_histogram(std::span<const double> xs);

}  // namespace rbwalk
