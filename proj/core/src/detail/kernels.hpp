/*
 * Copyright 2026 The su2qfi Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>

// Entire functions that appear as time kernels in the su(2) generators. Each
// has a removable singularity at x = 0, so small arguments use the Taylor
// series and larger ones the direct trigonometric form.
namespace su2qfi::detail {

inline constexpr double kSeriesCutoff = 0.5;
inline constexpr int kSeriesTerms = 14;

/// sin(x) / x
inline double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

/// (sin x - x) / x^3, -> -1/6.
inline double sin_minus_x_over_x3(double x) {
  if (std::abs(x) < kSeriesCutoff) {
    const double x2 = x * x;
    double term = -1.0 / 6.0;  // n = 1
    double sum = term;
    for (int n = 2; n < kSeriesTerms; ++n) {
      term *= -x2 / ((2.0 * n) * (2.0 * n + 1.0));
      sum += term;
    }
    return sum;
  }
  return (std::sin(x) - x) / (x * x * x);
}

/// (1 - cos x) / x^2, -> 1/2.
inline double one_minus_cos_over_x2(double x) {
  const double s = sinc(0.5 * x);
  return 0.5 * s * s;
}

/// (sin x - x cos x) / x^3, -> 1/3.
inline double sin_minus_xcos_over_x3(double x) {
  if (std::abs(x) < kSeriesCutoff) {
    const double x2 = x * x;
    // (-1)^{n+1} 2n x^{2n-2} / (2n+1)!
    double power_over_fact = 1.0 / 6.0;  // x^0 / 3!
    double sum = 2.0 * power_over_fact;
    for (int n = 2; n < kSeriesTerms; ++n) {
      power_over_fact *= -x2 / ((2.0 * n) * (2.0 * n + 1.0));
      sum += 2.0 * n * power_over_fact;
    }
    return sum;
  }
  return (std::sin(x) - x * std::cos(x)) / (x * x * x);
}

/// (1 - cos x - x sin x) / x^2, -> -1/2.
inline double one_minus_cos_minus_xsin_over_x2(double x) {
  if (std::abs(x) < kSeriesCutoff) {
    const double x2 = x * x;
    // (-1)^m (2m - 1) x^{2m-2} / (2m)!
    double power_over_fact = -0.5;  // m = 1, signed
    double sum = power_over_fact;
    for (int m = 2; m < kSeriesTerms; ++m) {
      power_over_fact *= -x2 / ((2.0 * m - 1.0) * (2.0 * m));
      sum += (2.0 * m - 1.0) * power_over_fact;
    }
    return sum;
  }
  return (1.0 - std::cos(x) - x * std::sin(x)) / (x * x);
}

/// (2 + x^2 - 2x sin x - 2 cos x) / x^4, -> 1/4.
inline double driven_frequency_kernel(double x) {
  if (std::abs(x) < kSeriesCutoff) {
    const double x2 = x * x;
    // 2 (-1)^m (2m - 1) x^{2m-4} / (2m)!
    double power_over_fact = 1.0 / 24.0;  // m = 2, signed
    double sum = 2.0 * 3.0 * power_over_fact;
    for (int m = 3; m < kSeriesTerms + 1; ++m) {
      power_over_fact *= -x2 / ((2.0 * m - 1.0) * (2.0 * m));
      sum += 2.0 * (2.0 * m - 1.0) * power_over_fact;
    }
    return sum;
  }
  const double x2 = x * x;
  return (2.0 + x2 - 2.0 * x * std::sin(x) - 2.0 * std::cos(x)) / (x2 * x2);
}

}  // namespace su2qfi::detail
