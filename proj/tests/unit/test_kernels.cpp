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

#include <doctest.h>

#include <cmath>
#include <initializer_list>

#include "detail/kernels.hpp"

using namespace su2qfi::detail;

namespace {

// Direct forms in long double, accurate away from x = 0.
long double direct_sin_minus_x(long double x) { return (std::sin(x) - x) / (x * x * x); }
long double direct_sin_minus_xcos(long double x) { return (std::sin(x) - x * std::cos(x)) / (x * x * x); }
long double direct_one_minus_cos_minus_xsin(long double x) {
  return (1.0L - std::cos(x) - x * std::sin(x)) / (x * x);
}
long double direct_driven(long double x) {
  return (2.0L + x * x - 2.0L * x * std::sin(x) - 2.0L * std::cos(x)) / (x * x * x * x);
}

}  // namespace

TEST_CASE("kernels agree with direct forms on both sides of the series cutoff") {
  for (const double x : {0.05, 0.2, 0.49, 0.51, 1.0, 3.0, 10.0, -0.3, -2.0}) {
    CAPTURE(x);
    const double tol = std::abs(x) < 0.1 ? 1e-9 : 1e-12;
    CHECK(sin_minus_x_over_x3(x) == doctest::Approx(static_cast<double>(direct_sin_minus_x(x))).epsilon(tol));
    CHECK(sin_minus_xcos_over_x3(x) ==
          doctest::Approx(static_cast<double>(direct_sin_minus_xcos(x))).epsilon(tol));
    CHECK(one_minus_cos_minus_xsin_over_x2(x) ==
          doctest::Approx(static_cast<double>(direct_one_minus_cos_minus_xsin(x))).epsilon(tol));
    CHECK(driven_frequency_kernel(x) == doctest::Approx(static_cast<double>(direct_driven(x))).epsilon(1e-8));
    CHECK(one_minus_cos_over_x2(x) ==
          doctest::Approx(static_cast<double>((1.0L - std::cos((long double)x)) / ((long double)x * x))).epsilon(tol));
  }
}

TEST_CASE("kernels have the right limits at zero") {
  CHECK(sin_minus_x_over_x3(0.0) == doctest::Approx(-1.0 / 6.0));
  CHECK(sin_minus_xcos_over_x3(0.0) == doctest::Approx(1.0 / 3.0));
  CHECK(one_minus_cos_minus_xsin_over_x2(0.0) == doctest::Approx(-0.5));
  CHECK(driven_frequency_kernel(0.0) == doctest::Approx(0.25));
  CHECK(one_minus_cos_over_x2(0.0) == doctest::Approx(0.5));
  CHECK(sinc(0.0) == 1.0);
}
