// Copyright 2026 The ecavg Authors
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

namespace ecavg::numth {

inline constexpr double kLogIntegralTolerance = 1e-12;

/// Offset logarithmic integral: the integral of 1/log t over [2, x], by
/// adaptive Simpson quadrature to absolute error 1e-12. Throws DomainError for
/// x < 2.
double log_integral(double x);

}  // namespace ecavg::numth
