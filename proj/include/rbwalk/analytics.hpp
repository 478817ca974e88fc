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

#include <variant>
#include <vector>

#include "rbwalk/noise.hpp"

namespace rbwalk {

/// Gamma law for the infidelity variable nu(F) = offset - F, that is
/// offset - <F> ~ Gamma(shape, scale).
struct GammaLaw {
  double shape = 1.0;   // alpha
  double scale = 1.0;   // beta
  double offset = 1.0;  // Delta

  /// Density of the noise-averaged fidelity at F; zero for F > offset.
  double pdf(double F) const;
  /// P(<F> <= F).
  double cdf(double F) const;
};

struct RegimeMoments {
  double expectation = 0.0;
  double mode = 0.0;
  double variance = 0.0;
  double skew = 0.0;
};

namespace regime {

/// Uncorrelated noise averaged over n realizations per sequence.
struct Markovian {
  int J = 1;
  double sigma = 0.0;
  int n = 1;
};

/// Quasi-static noise in the large-n limit.
struct Dc {
  int J = 1;
  double sigma = 0.0;
};

/// Block-correlated noise with block length M dividing J. M = 1 has no gamma
/// law of its own and is delegated to the Markovian law, which needs n.
/// `large_m` selects the variant with M in place of M - 1.
struct Block {
  int J = 1;
  double sigma = 0.0;
  int M = 1;
  int n = 0;
  bool large_m = false;
};

}  // namespace regime

using Regime = std::variant<regime::Markovian, regime::Dc, regime::Block>;

/// x^{alpha-1} e^{-x/beta} / (Gamma(alpha) beta^alpha), evaluated in log space.
double gamma_pdf(double x, double shape, double scale);
double log_gamma_pdf(double x, double shape, double scale);

GammaLaw fidelity_law(const Regime& r);

/// E = Delta - alpha beta, Mode = Delta - (alpha - 1) beta, V = alpha beta^2,
/// S = -2 / sqrt(alpha).
RegimeMoments law_moments(const GammaLaw& law);

/// Closed-form moments per regime. For block noise this is
/// E = 1 - J sigma^2, V = 2/3 J (M-1) sigma^4, S = -2 sqrt(2(M-1)/(3J)), which
/// stays finite at M = 1 (V = S = 0). Markovian with n = 0 means n -> infinity.
RegimeMoments regime_moments(const Regime& r);

/// alpha = E^2 / V, beta = V / E, Delta = 1 with E = J C(0) and
/// V = (4/3) sum_{k=1}^{J-1} (J - k) C(k)^2. Throws InvalidArgument when V = 0
/// (uncorrelated noise), which must use the Markovian law instead.
GammaLaw generic_gamma_params(const AutocorrelationFn& c, int J);

/// C(k) = sum_lines 2 w cos(omega k tau_g) for k = 0..J-1.
AutocorrelationFn psd_to_autocorrelation(const std::vector<SpectralLine>& lines, double gate_time, int J);

/// Density of <F> for DC noise averaged over n realizations: the product of
/// |V|^2 ~ Gamma(3/2, 2J/3) and <delta^2>_n ~ Gamma(n/2, 2 sigma^2 / n),
///   f(z) = kappa^{(n+3)/4} (z/4)^{(n-1)/4} K_{(n-3)/2}(sqrt(kappa z)) / (sqrt(pi) Gamma(n/2)),
/// with z = 1 - F and kappa = 3n / (J sigma^2). Zero for F >= 1.
double dc_finite_n_pdf(double F, int J, double sigma, int n);

/// Failure probability of the +-G relative confidence band for the mean of
/// k noise-averaged fidelities with gamma shape alpha:
///   Q(k alpha, k alpha (1 + G_L)) + P(k alpha, k alpha (1 - G_U)).
/// Depends on alpha only, not on the scale.
double confidence_failure(double shape, double g_lower, double g_upper, long long k);
double log_confidence_failure(double shape, double g_lower, double g_upper, long long k);

/// Smallest k with confidence_failure < epsilon (exponential then binary
/// search; the failure probability is decreasing in k).
long long k_min(double shape, double g_lower, double g_upper, double epsilon);
long long k_min(const Regime& r, double g_lower, double g_upper, double epsilon);

}  // namespace rbwalk
