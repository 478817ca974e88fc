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

namespace rbwalk {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// ln P(a, x) and ln Q(a, x), finite even where the value underflows.
double log_gamma_p(double a, double x);
double log_gamma_q(double a, double x);

/// ln K_nu(x), modified Bessel function of the second kind, x > 0. The sign
/// of nu is irrelevant since K_{-nu} = K_nu.
double log_bessel_k(double nu, double x);
double bessel_k(double nu, double x);

}  // namespace rbwalk
