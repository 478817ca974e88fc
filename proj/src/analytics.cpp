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

#include "rbwalk/analytics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "rbwalk/errors.hpp"
#include "rbwalk/special_functions.hpp"

namespace rbwalk {
namespace {

void check_common(int J, double sigma) {
  detail::require(J >= 1, "J must be >= 1");
  detail::require(sigma > 0.0 && std::isfinite(sigma), "sigma must be finite and > 0 for a fidelity law");
}

void check_block(const regime::Block& b) {
  check_common(b.J, b.sigma);
  detail::require(b.M >= 1, "block length M must be >= 1");
  detail::require(b.M <= b.J, "block length M must not exceed J");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

double log_gamma_pdf(double x, double shape, double scale) {
  detail::require(shape > 0.0 && scale > 0.0, "gamma density needs shape > 0 and scale > 0");
  detail::require(x >= 0.0, "gamma density is supported on x >= 0");
  if (x == 0.0) {
    if (shape < 1.0) return std::numeric_limits<double>::infinity();
    if (shape > 1.0) return -std::numeric_limits<double>::infinity();
    return -std::log(scale);
  }
  return (shape - 1.0) * std::log(x) - x / scale - log_gamma(shape) - shape * std::log(scale);
}

double gamma_pdf(double x, double shape, double scale) { return std::exp(log_gamma_pdf(x, shape, scale)); }

double GammaLaw::pdf(double F) const {
  if (F > offset) return 0.0;
  return gamma_pdf(offset - F, shape, scale);
}

double GammaLaw::cdf(double F) const {
  if (F >= offset) return 1.0;
  return gamma_q(shape, (offset - F) / scale);
}

GammaLaw fidelity_law(const Regime& r) {
  return std::visit(
      Overloaded{
          [](const regime::Markovian& m) {
            check_common(m.J, m.sigma);
            detail::require(m.n >= 1, "Markovian law needs n >= 1 noise realizations");
            const double s2 = m.sigma * m.sigma;
            return GammaLaw{1.5 * m.n, 2.0 / 3.0 * m.J * s2 / m.n, 1.0 + 2.0 / 3.0 * m.J * m.J * s2 * s2};
          },
          [](const regime::Dc& d) {
            check_common(d.J, d.sigma);
            return GammaLaw{1.5, 2.0 / 3.0 * d.J * d.sigma * d.sigma, 1.0};
          },
          [](const regime::Block& b) {
            check_block(b);
            if (b.M == 1 && !b.large_m) {
              detail::require(b.n >= 1, "block length 1 uses the Markovian law, which needs n >= 1");
              return fidelity_law(regime::Markovian{b.J, b.sigma, b.n});
            }
            const double m = b.large_m ? b.M : b.M - 1.0;
            return GammaLaw{1.5 * b.J / m, 2.0 / 3.0 * m * b.sigma * b.sigma, 1.0};
          },
      },
      r);
}

RegimeMoments law_moments(const GammaLaw& law) {
  return RegimeMoments{law.offset - law.shape * law.scale, law.offset - (law.shape - 1.0) * law.scale,
                       law.shape * law.scale * law.scale, -2.0 / std::sqrt(law.shape)};
}

RegimeMoments regime_moments(const Regime& r) {
  if (const auto* m = std::get_if<regime::Markovian>(&r); m && m->n == 0) {
    check_common(m->J, m->sigma);
    const double s2 = m->sigma * m->sigma;
    const double e = 1.0 - m->J * s2 + 2.0 / 3.0 * m->J * m->J * s2 * s2;
    return RegimeMoments{e, e, 0.0, 0.0};
  }
  if (const auto* b = std::get_if<regime::Block>(&r)) {
    check_block(*b);
    const double s2 = b->sigma * b->sigma;
    const double m = b->large_m ? b->M : b->M - 1.0;
    return RegimeMoments{1.0 - b->J * s2, 1.0 - b->J * s2 * (1.0 - 2.0 / 3.0 * m / b->J),
                         2.0 / 3.0 * b->J * m * s2 * s2, -2.0 * std::sqrt(2.0 * m / (3.0 * b->J))};
  }
  return law_moments(fidelity_law(r));
}

GammaLaw generic_gamma_params(const AutocorrelationFn& c, int J) {
  detail::require(J >= 1, "J must be >= 1");
  detail::require(c.size() >= J, "autocorrelation must cover lags 0..J-1");
  detail::require(c.values[0] > 0.0, "autocorrelation needs C(0) > 0");
  const double e = J * c.values[0];
  double v = 0.0;
  for (int k = 1; k < J; ++k) v += (J - k) * c.values[k] * c.values[k];
  v *= 4.0 / 3.0;
  if (!(v > 0.0))
    throw InvalidArgument(
        "generic gamma law has zero variance (uncorrelated noise); use the Markovian law, which carries the "
        "n dependence");
  return GammaLaw{e * e / v, v / e, 1.0};
}

AutocorrelationFn psd_to_autocorrelation(const std::vector<SpectralLine>& lines, double gate_time, int J) {
  detail::require(J >= 1, "J must be >= 1");
  detail::require(gate_time > 0.0, "gate time must be positive");
  AutocorrelationFn c;
  c.values.assign(static_cast<std::size_t>(J), 0.0);
  for (const auto& line : lines) {
    detail::require(line.weight >= 0.0, "comb weights must be nonnegative");
    for (int k = 0; k < J; ++k) c.values[k] += 2.0 * line.weight * std::cos(line.omega * k * gate_time);
  }
  return c;
}

double dc_finite_n_pdf(double F, int J, double sigma, int n) {
  check_common(J, sigma);
  detail::require(n >= 1, "n must be >= 1");
  const double z = 1.0 - F;
  if (!(z > 0.0)) return 0.0;
  const double kappa = 3.0 * n / (J * sigma * sigma);
  const double log_f = (n + 3.0) / 4.0 * std::log(kappa) + (n - 1.0) / 4.0 * std::log(z / 4.0) +
                       log_bessel_k((n - 3.0) / 2.0, std::sqrt(kappa * z)) - 0.5 * std::log(std::numbers::pi) -
                       log_gamma(n / 2.0);
  return std::exp(log_f);
}

namespace {

void check_confidence(double shape, double g_lower, double g_upper, long long k) {
  detail::require(shape > 0.0 && std::isfinite(shape), "shape must be finite and > 0");
  detail::require(g_lower > 0.0, "G_L must be > 0");
  detail::require(g_upper > 0.0 && g_upper < 1.0, "G_U must lie in (0, 1)");
  detail::require(k >= 1, "k must be >= 1");
}

}  // namespace

double log_confidence_failure(double shape, double g_lower, double g_upper, long long k) {
  check_confidence(shape, g_lower, g_upper, k);
  const double a = static_cast<double>(k) * shape;
  const double upper = log_gamma_q(a, a * (1.0 + g_lower));
  const double lower = log_gamma_p(a, a * (1.0 - g_upper));
  const double hi = std::max(upper, lower);
  if (std::isinf(hi)) return hi;
  return hi + std::log1p(std::exp(std::min(upper, lower) - hi));
}

double confidence_failure(double shape, double g_lower, double g_upper, long long k) {
  check_confidence(shape, g_lower, g_upper, k);
  const double a = static_cast<double>(k) * shape;
  return gamma_q(a, a * (1.0 + g_lower)) + gamma_p(a, a * (1.0 - g_upper));
}

long long k_min(double shape, double g_lower, double g_upper, double epsilon) {
  detail::require(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
  const double log_eps = std::log(epsilon);
  auto ok = [&](long long k) { return log_confidence_failure(shape, g_lower, g_upper, k) < log_eps; };
  if (ok(1)) return 1;
  long long bad = 1;
  long long good = 2;
  while (!ok(good)) {
    bad = good;
    detail::require(good < (1LL << 40), "k_min search exceeded 2^40 sequences");
    good *= 2;
  }
  while (good - bad > 1) {
    const long long mid = bad + (good - bad) / 2;
    (ok(mid) ? good : bad) = mid;
  }
  return good;
}

long long k_min(const Regime& r, double g_lower, double g_upper, double epsilon) {
  return k_min(fidelity_law(r).shape, g_lower, g_upper, epsilon);
}

}  // namespace rbwalk
