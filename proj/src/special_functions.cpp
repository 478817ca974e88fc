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

#include "rbwalk/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "rbwalk/errors.hpp"

namespace rbwalk {
namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 1'000'000;
constexpr double kEulerGamma = 0.57721566490153286061;

// ln Gamma(a) - [(a - 1/2) ln a - a + ln(2 pi) / 2], asymptotic series.
// Truncation error is below 1e-17 for a >= 10.
double stirling_correction(double a) {
  const double r = 1.0 / a;
  const double r2 = r * r;
  return r * (1.0 / 12.0 +
              r2 * (-1.0 / 360.0 +
                    r2 * (1.0 / 1260.0 +
                          r2 * (-1.0 / 1680.0 + r2 * (1.0 / 1188.0 + r2 * (-691.0 / 360360.0 + r2 * (1.0 / 156.0)))))));
}

// log(1 + t) - t without cancellation for small |t|, via t = 2r / (1 - r).
double log1pmx(double t) {
  if (std::abs(t) >= 0.5) return std::log1p(t) - t;
  const double r = t / (2.0 + t);
  const double r2 = r * r;
  double term = r2;
  double series = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double add = term / (2 * k + 1);
    series += add;
    if (std::abs(add) <= kEps * std::abs(series)) break;
    term *= r2;
  }
  // log1p(t) = 2r(1 + series), t = 2r + 2r^2 / (1 - r)
  return 2.0 * r * series - 2.0 * r2 / (1.0 - r);
}

// ln(x^a e^{-x} / Gamma(a)), accurate for large a near x = a.
double log_prefix(double a, double x) {
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (a < 10.0) return a * std::log(x) - x - log_gamma(a);
  const double t = (x - a) / a;
  const double core = std::abs(t) < 0.5 ? log1pmx(t) : std::log(x / a) - t;
  return a * core + 0.5 * std::log(a / (2.0 * std::numbers::pi)) - stirling_correction(a);
}

// ln P via the power series; valid for x < a + 1.
double log_p_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int n = 0; n < kMaxIterations; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kEps) return std::log(sum) + log_prefix(a, x);
  }
  throw NumericalError("incomplete gamma series did not converge");
}

// ln Q via the Lentz continued fraction; valid for x >= a + 1.
double log_q_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return std::log(h) + log_prefix(a, x);
  }
  throw NumericalError("incomplete gamma continued fraction did not converge");
}

void check_gamma_args(double a, double x) {
  detail::require(a > 0.0 && std::isfinite(a), "incomplete gamma requires finite a > 0");
  detail::require(x >= 0.0 && !std::isnan(x), "incomplete gamma requires x >= 0");
}

// K_mu and K_{mu+1} / K_mu for |mu| <= 1/2, returned as (ln K_mu, ratio).
struct KPair {
  double log_k;
  double ratio;
};

KPair temme_series(double mu, double x) {
  const double x2 = 0.5 * x;
  const double pimu = std::numbers::pi * mu;
  const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
  double d = -std::log(x2);
  double e = mu * d;
  const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
  const double gampl = 1.0 / std::tgamma(1.0 + mu);  // 1 / Gamma(1 + mu)
  const double gammi = 1.0 / std::tgamma(1.0 - mu);  // 1 / Gamma(1 - mu)
  double gam1;
  if (std::abs(mu) < 1e-3) {
    const double m2 = mu * mu;
    gam1 = -(kEulerGamma + m2 * (-0.0420026350340952 + m2 * -0.0421977345555443));
  } else {
    gam1 = (gammi - gampl) / (2.0 * mu);
  }
  const double gam2 = 0.5 * (gammi + gampl);
  double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
  double sum = ff;
  e = std::exp(e);
  double p = 0.5 * e / gampl;
  double q = 0.5 / (e * gammi);
  double c = 1.0;
  d = x2 * x2;
  double sum1 = p;
  for (int i = 1; i < kMaxIterations; ++i) {
    ff = (i * ff + p + q) / (i * i - mu * mu);
    c *= d / i;
    p /= (i - mu);
    q /= (i + mu);
    const double del = c * ff;
    sum += del;
    sum1 += c * (p - i * ff);
    if (std::abs(del) < std::abs(sum) * kEps) return {std::log(sum), sum1 * (2.0 / x) / sum};
  }
  throw NumericalError("Bessel K series did not converge");
}

KPair steed_fraction(double mu, double x) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < kMaxIterations; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) {
      h *= a1;
      const double log_k = 0.5 * std::log(std::numbers::pi / (2.0 * x)) - x - std::log(s);
      return {log_k, (mu + x + 0.5 - h) / x};
    }
  }
  throw NumericalError("Bessel K continued fraction did not converge");
}

}  // namespace

double log_gamma(double x) {
  detail::require(x > 0.0 && std::isfinite(x), "log_gamma requires finite x > 0");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double log_gamma_p(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return log_p_series(a, x);
  return std::log1p(-std::exp(log_q_fraction(a, x)));
}

double log_gamma_q(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return -std::numeric_limits<double>::infinity();
  if (x < a + 1.0) return std::log1p(-std::exp(log_p_series(a, x)));
  return log_q_fraction(a, x);
}

double gamma_p(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) return std::exp(log_p_series(a, x));
  return -std::expm1(log_q_fraction(a, x));
}

double gamma_q(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return -std::expm1(log_p_series(a, x));
  return std::exp(log_q_fraction(a, x));
}

double log_bessel_k(double nu, double x) {
  detail::require(x > 0.0 && std::isfinite(x), "Bessel K requires finite x > 0");
  detail::require(std::isfinite(nu), "Bessel K requires finite order");
  nu = std::abs(nu);
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  const KPair start = x < 2.0 ? temme_series(mu, x) : steed_fraction(mu, x);
  if (nl == 0) return start.log_k;
  // Forward recurrence on ratios r_i = K_{mu+i+1} / K_{mu+i}, stable for K.
  double log_k = start.log_k + std::log(start.ratio);
  double r = start.ratio;
  for (int i = 1; i < nl; ++i) {
    r = 2.0 * (mu + i) / x + 1.0 / r;
    log_k += std::log(r);
  }
  return log_k;
}

double bessel_k(double nu, double x) { return std::exp(log_bessel_k(nu, x)); }

}  // namespace rbwalk
