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

#ifndef RFPNSIM_RANDOM_HPP
#define RFPNSIM_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace rfpnsim {

/// Deterministic random stream used throughout the simulator.
///
/// All samplers are hand-rolled on top of the raw 64-bit engine output so
/// that a given seed produces the same sequence on every platform; the
/// standard <random> distributions do not give that guarantee.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (two engine draws, no cached spare).
  double gaussian();

  /// Circularly-symmetric complex normal with unit variance, CN(0,1).
  std::complex<double> complex_gaussian();

  /// Zero-mean Laplacian with the given scale b (std = sqrt(2)*b).
  /// A scale of zero degenerates to a point mass at 0 while still
  /// consuming one draw, keeping the stream layout independent of scale.
  double laplacian(double scale);

 private:
  std::mt19937_64 engine_;
};

}  // namespace rfpnsim

#endif  // RFPNSIM_RANDOM_HPP
