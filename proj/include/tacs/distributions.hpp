// Copyright 2026 The tacs Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TACS_DISTRIBUTIONS_HPP_
#define TACS_DISTRIBUTIONS_HPP_

namespace tacs::stats {

// Continued-fraction controls for the regularized incomplete beta function.
inline constexpr double kBetaRelativeTolerance = 1e-12;
inline constexpr int kBetaMaxIterations = 300;

// I_x(a, b) for a, b > 0 and x in [0, 1]. Evaluated by the modified Lentz
// continued fraction, switching to 1 - I_{1-x}(b, a) past the convergence
// crossover. Throws DegenerateError if the fraction has not converged after
// kBetaMaxIterations.
double RegularizedIncompleteBeta(double x, double a, double b);

// P(T > t) for Student's t with `df` degrees of freedom, via
// P(T > |t|) = I_{df/(df+t^2)}(df/2, 1/2) / 2.
double StudentTSurvival(double t, double df);

// P(|T| > |t|), clamped to [0, 1].
double TwoSidedTPValue(double t, double df);

// P(F > f) for the F(df1, df2) distribution, via
// I_{df2/(df2+df1 f)}(df2/2, df1/2). Requires f >= 0.
double FSurvival(double f, double df1, double df2);

double NormalCdf(double x);

// Inverse standard normal CDF for p in (0, 1); throws std::invalid_argument
// otherwise. Acklam's rational approximation (relative error ~1.2e-9)
// followed by one Halley step against NormalCdf.
double NormalQuantile(double p);

}  // namespace tacs::stats

#endif  // TACS_DISTRIBUTIONS_HPP_
