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

#include "rbwalk/noise.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "rbwalk/errors.hpp"
#include "rbwalk/io.hpp"
#include "rbwalk/stats.hpp"

namespace rbwalk {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

namespace noise {

FourierPsd FourierPsd::power_law(double exponent, int modes, double omega0, double amplitude, double gate_time) {
  detail::require(modes >= 1, "power-law comb needs at least one mode");
  return FourierPsd{power_law_weights(exponent, modes), omega0, amplitude, gate_time};
}

}  // namespace noise

void validate(const NoiseModel& model) {
  std::visit(Overloaded{
                 [](const noise::Markovian& m) {
                   detail::require(std::isfinite(m.sigma) && m.sigma >= 0.0, "sigma must be finite and >= 0");
                 },
                 [](const noise::Dc& m) {
                   detail::require(std::isfinite(m.sigma) && m.sigma >= 0.0, "sigma must be finite and >= 0");
                 },
                 [](const noise::Block& m) {
                   detail::require(std::isfinite(m.sigma) && m.sigma >= 0.0, "sigma must be finite and >= 0");
                   detail::require(m.length >= 1, "block length must be >= 1");
                 },
                 [](const noise::FourierPsd& m) {
                   detail::require(!m.weights.empty(), "Fourier comb needs at least one mode");
                   detail::require(m.omega0 > 0.0 && std::isfinite(m.omega0), "omega0 must be positive");
                   detail::require(m.gate_time > 0.0 && std::isfinite(m.gate_time), "gate time must be positive");
                   detail::require(std::isfinite(m.amplitude), "amplitude must be finite");
                   for (double w : m.weights) detail::require(std::isfinite(w), "comb weights must be finite");
                 },
             },
             model);
}

std::string model_name(const NoiseModel& model) {
  static constexpr std::array<const char*, 4> kNames = {"markovian", "dc", "block", "fourier"};
  return kNames[model.index()];
}

bool is_silent(const NoiseModel& model) {
  return std::visit(Overloaded{
                        [](const noise::FourierPsd& m) {
                          return m.amplitude == 0.0 ||
                                 std::all_of(m.weights.begin(), m.weights.end(), [](double w) { return w == 0.0; });
                        },
                        [](const auto& m) { return m.sigma == 0.0; },
                    },
                    model);
}

NoiseSampler::NoiseSampler(NoiseModel model, int J) : model_(std::move(model)), J_(J) {
  detail::require(J >= 1, "noise realizations need J >= 1");
  validate(model_);
  if (const auto* f = std::get_if<noise::FourierPsd>(&model_)) {
    const int Q = f->modes();
    cos_table_.resize(static_cast<std::size_t>(Q) * J);
    sin_table_.resize(cos_table_.size());
    mode_amplitude_.resize(static_cast<std::size_t>(Q));
    for (int q = 1; q <= Q; ++q) {
      mode_amplitude_[q - 1] = f->amplitude * f->omega0 * q * f->weights[q - 1];
      for (int j = 1; j <= J; ++j) {
        const double phase = q * f->omega0 * j * f->gate_time;
        cos_table_[static_cast<std::size_t>(q - 1) * J + (j - 1)] = std::cos(phase);
        sin_table_[static_cast<std::size_t>(q - 1) * J + (j - 1)] = std::sin(phase);
      }
    }
  }
}

void NoiseSampler::sample_into(Stream& rng, std::vector<double>& out) const {
  out.assign(static_cast<std::size_t>(J_), 0.0);
  std::visit(Overloaded{
                 [&](const noise::Markovian& m) {
                   for (double& v : out) v = m.sigma * rng.normal();
                 },
                 [&](const noise::Dc& m) { std::fill(out.begin(), out.end(), m.sigma * rng.normal()); },
                 [&](const noise::Block& m) {
                   for (int start = 0; start < J_; start += m.length) {
                     const double v = m.sigma * rng.normal();
                     const int stop = std::min(J_, start + m.length);
                     std::fill(out.begin() + start, out.begin() + stop, v);
                   }
                 },
                 [&](const noise::FourierPsd& f) {
                   // cos(wt + psi) = cos(wt) cos(psi) - sin(wt) sin(psi)
                   for (int q = 0; q < f.modes(); ++q) {
                     const double psi = 2.0 * std::numbers::pi * rng.uniform();
                     const double a = mode_amplitude_[q] * std::cos(psi);
                     const double b = -mode_amplitude_[q] * std::sin(psi);
                     const double* c = &cos_table_[static_cast<std::size_t>(q) * J_];
                     const double* s = &sin_table_[static_cast<std::size_t>(q) * J_];
                     for (int j = 0; j < J_; ++j) out[j] += a * c[j] + b * s[j];
                   }
                 },
             },
             model_);
}

NoiseRealization NoiseSampler::sample(Stream& rng) const {
  NoiseRealization r;
  sample_into(rng, r.values);
  return r;
}

NoiseRealization sample_realization(const NoiseModel& model, int J, Stream& rng) {
  return NoiseSampler(model, J).sample(rng);
}

AutocorrelationFn analytic_autocorrelation(const NoiseModel& model, int J) {
  detail::require(J >= 1, "autocorrelation needs J >= 1");
  validate(model);
  AutocorrelationFn c;
  c.values.assign(static_cast<std::size_t>(J), 0.0);
  std::visit(Overloaded{
                 [&](const noise::Markovian& m) { c.values[0] = m.sigma * m.sigma; },
                 [&](const noise::Dc& m) { std::fill(c.values.begin(), c.values.end(), m.sigma * m.sigma); },
                 [&](const noise::Block& m) {
                   for (int k = 0; k < J; ++k)
                     c.values[k] = m.sigma * m.sigma * std::max(0.0, double(m.length - k) / m.length);
                 },
                 [&](const noise::FourierPsd& f) {
                   for (const SpectralLine& line : comb_spectrum(f))
                     for (int k = 0; k < J; ++k) c.values[k] += 2.0 * line.weight * std::cos(line.omega * k * f.gate_time);
                 },
             },
             model);
  return c;
}

AutocorrelationFn empirical_autocorrelation(const std::vector<NoiseRealization>& realizations) {
  detail::require(realizations.size() >= 2, "empirical autocorrelation needs at least two realizations");
  const int J = realizations.front().length();
  detail::require(J >= 1, "realizations must be non-empty");
  for (const auto& r : realizations)
    detail::require(r.length() == J, "realizations must all have the same length");
  const double count = static_cast<double>(realizations.size());
  AutocorrelationFn c;
  c.values.assign(static_cast<std::size_t>(J), 0.0);
  c.standard_errors.assign(static_cast<std::size_t>(J), 0.0);
  std::vector<double> per(realizations.size());
  for (int k = 0; k < J; ++k) {
    for (std::size_t r = 0; r < realizations.size(); ++r) {
      const auto& v = realizations[r].values;
      NeumaierSum s;
      for (int t = 0; t + k < J; ++t) s.add(v[t] * v[t + k]);
      per[r] = s.value() / (J - k);
    }
    NeumaierSum mean;
    for (double p : per) mean.add(p);
    const double m = mean.value() / count;
    NeumaierSum ss;
    for (double p : per) ss.add((p - m) * (p - m));
    c.values[k] = m;
    c.standard_errors[k] = std::sqrt(ss.value() / (count - 1.0) / count);
  }
  return c;
}

double power_law_weight(double exponent, int q) {
  detail::require(q >= 1, "mode index must be >= 1");
  return std::pow(static_cast<double>(q), exponent / 2.0 - 1.0);
}

std::vector<double> power_law_weights(double exponent, int modes) {
  std::vector<double> w(static_cast<std::size_t>(std::max(modes, 0)));
  for (int q = 1; q <= modes; ++q) w[q - 1] = power_law_weight(exponent, q);
  return w;
}

noise::FourierPsd calibrate_amplitude(noise::FourierPsd psd, double target_variance) {
  detail::require(target_variance >= 0.0, "target variance must be >= 0");
  psd.amplitude = 1.0;
  validate(psd);
  double power = 0.0;
  for (int q = 1; q <= psd.modes(); ++q) power += (q * psd.weights[q - 1]) * (q * psd.weights[q - 1]);
  detail::require(power > 0.0, "comb has no power to calibrate");
  psd.amplitude = std::sqrt(2.0 * target_variance / (psd.omega0 * psd.omega0 * power));
  return psd;
}

std::vector<SpectralLine> comb_spectrum(const noise::FourierPsd& psd) {
  std::vector<SpectralLine> lines;
  const double scale = psd.amplitude * psd.amplitude * psd.omega0 * psd.omega0 / 4.0;
  for (int q = 1; q <= psd.modes(); ++q) {
    const double qf = q * psd.weights[q - 1];
    lines.push_back({q * psd.omega0, scale * qf * qf});
  }
  return lines;
}

double band_limited_psd(const noise::FourierPsd& psd, double omega, double half_width) {
  auto sinc = [](double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; };
  double sum = 0.0;
  for (int q = 1; q <= psd.modes(); ++q) {
    const double qf = q * psd.weights[q - 1];
    const double wq = q * psd.omega0;
    sum += qf * qf * (sinc(half_width * (omega - wq)) + sinc(half_width * (omega + wq)));
  }
  return half_width * psd.amplitude * psd.amplitude * psd.omega0 * psd.omega0 / (2.0 * std::sqrt(2.0 * std::numbers::pi)) *
         sum;
}

void write_realizations_csv(std::ostream& out, const std::vector<NoiseRealization>& realizations) {
  const int J = realizations.empty() ? 0 : realizations.front().length();
  std::vector<std::string> header;
  for (int j = 1; j <= J; ++j) header.push_back("j=" + std::to_string(j));
  write_csv_row(out, header);
  for (const auto& r : realizations) {
    detail::require(r.length() == J, "realizations must all have the same length");
    write_csv_row(out, r.values);
  }
}

std::vector<NoiseRealization> read_realizations_csv(std::istream& in) {
  const CsvTable table = read_csv(in);
  for (std::size_t j = 0; j < table.header.size(); ++j)
    detail::require(table.header[j] == "j=" + std::to_string(j + 1), "realization CSV header must be j=1..j=J");
  std::vector<NoiseRealization> out;
  for (const auto& row : table.rows) out.push_back(NoiseRealization{row});
  return out;
}

}  // namespace rbwalk
