// Copyright 2026 The rfpnsim authors
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

#include "rfpnsim/random.hpp"

#include <cmath>

namespace rfpnsim {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

double RandomStream::gaussian() {
  // 1 - u is in (0, 1], so the log never sees zero.
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(kTwoPi * u2);
}

std::complex<double> RandomStream::complex_gaussian() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log1p(-u1));
  // Both Box-Muller outputs feed one complex sample; the 1/sqrt(2) makes
  // E|z|^2 = 1.
  return {r * std::cos(kTwoPi * u2) * M_SQRT1_2,
          r * std::sin(kTwoPi * u2) * M_SQRT1_2};
}

double RandomStream::laplacian(double scale) {
  const double u = uniform();
  if (scale == 0.0) {
    return 0.0;
  }
  // Inverse CDF on t in [-1/2, 1/2); clamp the log argument away from zero
  // for the one-in-2^53 edge draw.
  const double t = u - 0.5;
  const double arg = std::max(1.0 - 2.0 * std::abs(t), 0x1.0p-53);
  const double mag = -scale * std::log(arg);
  return t < 0.0 ? -mag : mag;
}

}  // namespace rfpnsim
