// Copyright 2026 The qedsim Authors
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

#pragma once

// Unitaries printed to three decimals for the one-cavity benchmark
// exp(-i sx (x) (b + b^dag)) at unit time, in the raw (descending number)
// frame: the exact exponential U and its ten-slice Trotter product V.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace golden {

using Entry = std::complex<double>;
using Matrix8 = std::array<std::array<Entry, 8>, 8>;

inline constexpr Entry j(double v) { return {0.0, v}; }

inline const Matrix8 kU = {{
    {0.023, 0, -0.714, 0, 0, j(-0.632), 0, j(0.301)},
    {0, -0.56, 0, -0.412, j(-0.632), 0, j(-0.342), 0},
    {-0.714, 0, 0.023, 0, 0, j(-0.342), 0, j(-0.61)},
    {0, -0.412, 0, 0.606, j(0.301), 0, j(-0.61), 0},
    {0, j(-0.632), 0, j(0.301), 0.023, 0, -0.714, 0},
    {j(-0.632), 0, j(-0.342), 0, 0, -0.56, 0, -0.412},
    {0, j(-0.342), 0, j(-0.61), -0.714, 0, 0.023, 0},
    {j(0.301), 0, j(-0.61), 0, 0, -0.412, 0, 0.606},
}};

inline const Matrix8 kV10 = {{
    {0.021, 0, -0.668, 0, 0, j(-0.682), 0, j(0.298)},
    {0, -0.556, 0, -0.456, j(-0.581), 0, j(-0.382), 0},
    {-0.757, 0, 0.023, 0, 0, j(-0.3), 0, j(-0.58)},
    {0, -0.37, 0, 0.606, j(0.298), 0, j(-0.638), 0},
    {0, j(-0.682), 0, j(0.298), 0.021, 0, -0.668, 0},
    {j(-0.581), 0, j(-0.382), 0, 0, -0.556, 0, -0.456},
    {0, j(-0.3), 0, j(-0.58), -0.757, 0, 0.023, 0},
    {j(0.298), 0, j(-0.638), 0, 0, -0.37, 0, 0.606},
}};

/** Largest entrywise deviation of an 8x8 matrix-like `m` from `ref`. */
template <class M>
double max_deviation(const M& m, const Matrix8& ref) {
  double worst = 0.0;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) worst = std::max(worst, std::abs(m(r, c) - ref[r][c]));
  }
  return worst;
}

}  // namespace golden
