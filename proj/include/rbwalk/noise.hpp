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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "rbwalk/rng.hpp"

namespace rbwalk {

namespace noise {

/// Per-gate i.i.d. N(0, sigma^2) angles.
struct Markovian {
  double sigma = 0.0;
};

/// One N(0, sigma^2) angle frozen over the whole sequence.
struct Dc {
  double sigma = 0.0;
};

/// Independent N(0, sigma^2) angles held constant over blocks of `length`
/// gates. The final block is truncated when length does not divide J.
struct Block {
  double sigma = 0.0;
  int length = 1;
};

/// Superposition of phase-randomized cosines
///   delta_j = alpha omega0 sum_q q F(q) cos(q omega0 j tau_g + psi_q),
/// which is the real form of (alpha omega0 / 2) sum_q q F(q) [e^{i(...)} + c.c.].
struct FourierPsd {
  std::vector<double> weights;  // F(q) for q = 1..Q
  double omega0 = 1.0;          // mode spacing, rad/s
  double amplitude = 1.0;       // alpha
  double gate_time = 1.0;       // tau_g, s

  /// Weights F(q) = q^{p/2 - 1} for q = 1..modes.
  static FourierPsd power_law(double exponent, int modes, double omega0, double amplitude, double gate_time);
  int modes() const { return static_cast<int>(weights.size()); }
};

}  // namespace noise

using NoiseModel = std::variant<noise::Markovian, noise::Dc, noise::Block, noise::FourierPsd>;

/// Throws InvalidArgument if the model parameters are out of range.
void validate(const NoiseModel& model);

/// Short lowercase name: markovian, dc, block, fourier.
std::string model_name(const NoiseModel& model);

/// Zero-noise check: sigma == 0 or amplitude == 0 or all weights zero.
bool is_silent(const NoiseModel& model);

/// Length-J rotation-angle series for one noise realization (radians).
struct NoiseRealization {
  std::vector<double> values;
  int length() const { return static_cast<int>(values.size()); }
};

/// Three independent per-axis series (x, y, z) for universal errors.
struct UniversalRealization {
  std::array<NoiseRealization, 3> axes;
  int length() const { return axes[2].length(); }
};

/// Autocorrelation C(k) for k = 0..J-1 with optional standard errors.
struct AutocorrelationFn {
  std::vector<double> values;
  std::vector<double> standard_errors;  // empty for analytic functions
  int size() const { return static_cast<int>(values.size()); }
};

/// Reusable sampler. For Fourier models the cos/sin tables of
/// q omega0 j tau_g are computed once so each realization costs O(QJ)
/// multiply-adds and Q uniform draws.
class NoiseSampler {
 public:
  NoiseSampler(NoiseModel model, int J);

  NoiseRealization sample(Stream& rng) const;
  void sample_into(Stream& rng, std::vector<double>& out) const;

  const NoiseModel& model() const { return model_; }
  int length() const { return J_; }

 private:
  NoiseModel model_;
  int J_;
  std::vector<double> cos_table_;  // [q][j], row-major
  std::vector<double> sin_table_;
  std::vector<double> mode_amplitude_;  // alpha omega0 q F(q)
};

NoiseRealization sample_realization(const NoiseModel& model, int J, Stream& rng);

/// Exact model autocorrelation at lags 0..J-1.
AutocorrelationFn analytic_autocorrelation(const NoiseModel& model, int J);

/// Lag-k estimator averaged over time origins and realizations. Each
/// realization contributes mean_t(delta_t delta_{t+k}); the reported standard
/// error is the spread of those per-realization means over sqrt(count).
/// Not mean-subtracted: a nonzero realization mean biases C(k) by mean^2.
AutocorrelationFn empirical_autocorrelation(const std::vector<NoiseRealization>& realizations);

/// q |-> q^{p/2 - 1}.
double power_law_weight(double exponent, int q);
std::vector<double> power_law_weights(double exponent, int modes);

/// Returns a copy of `psd` whose amplitude makes C(0) equal `target_variance`.
noise::FourierPsd calibrate_amplitude(noise::FourierPsd psd, double target_variance);

/// One spectral line: a two-sided Dirac pair of weight `weight` at +-omega.
struct SpectralLine {
  double omega = 0.0;
  double weight = 0.0;
};

/// Dirac-comb spectrum of a Fourier model, normalized so that
/// C(tau) = sum 2 w cos(omega tau) reproduces analytic_autocorrelation.
std::vector<SpectralLine> comb_spectrum(const noise::FourierPsd& psd);

/// Band-limited reconstruction of the comb PSD from the autocorrelation
/// restricted to lags |tau| <= half_width:
///   (half_width alpha^2 omega0^2 / (2 sqrt(2 pi))) sum_q (q F(q))^2
///     [sinc(half_width (omega - omega_q)) + sinc(half_width (omega + omega_q))]
/// with sinc(x) = sin(x) / x. Diagnostic only.
double band_limited_psd(const noise::FourierPsd& psd, double omega, double half_width);

/// CSV with header j=1,...,j=J and one realization per row.
void write_realizations_csv(std::ostream& out, const std::vector<NoiseRealization>& realizations);
std::vector<NoiseRealization> read_realizations_csv(std::istream& in);

}  // namespace rbwalk
