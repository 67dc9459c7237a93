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

#ifndef RFPNSIM_CHANNEL_HPP
#define RFPNSIM_CHANNEL_HPP

#include <armadillo>
#include <cstddef>
#include <vector>

#include "rfpnsim/random.hpp"

namespace rfpnsim {

enum class ArrayKind { kUniformLinear, kUniformPlanar };

/// Antenna array layout. Spacing is expressed in carrier wavelengths, so
/// the carrier frequency never appears explicitly anywhere else.
struct ArrayGeometry {
  ArrayKind kind = ArrayKind::kUniformLinear;
  std::size_t elements_x = 1;
  std::size_t elements_y = 1;  // 1 for linear arrays
  double spacing = 0.5;

  std::size_t element_count() const { return elements_x * elements_y; }
  void validate() const;  // throws std::invalid_argument

  static ArrayGeometry linear(std::size_t n, double spacing = 0.5) {
    return {ArrayKind::kUniformLinear, n, 1, spacing};
  }
  static ArrayGeometry planar(std::size_t nx, std::size_t ny,
                              double spacing = 0.5) {
    return {ArrayKind::kUniformPlanar, nx, ny, spacing};
  }
};

/// One propagation ray: complex gain plus departure/arrival angles.
struct Ray {
  std::complex<double> gain;
  double aod_azimuth = 0.0;
  double aod_elevation = 0.0;
  double aoa_azimuth = 0.0;
  double aoa_elevation = 0.0;
};

struct PathSet {
  std::vector<Ray> paths;
};

/// Downlink channel matrix together with the rays that generated it.
/// h_downlink has shape Nr x Nt (receive antennas by transmit antennas).
struct ChannelRealization {
  arma::cx_mat h_downlink;
  PathSet source_paths;
};

/// Partitioned SVD of the channel as seen from the transmitter.
///
/// v holds the Nt x Nt unitary factor whose leading columns span the
/// channel's signal subspace on the transmit side; precoding with v1
/// diagonalizes the downlink channel onto the leading singular values.
struct ChannelSvd {
  arma::cx_mat v;       // Nt x Nt
  arma::vec sigma;      // min(Nt, Nr) values, descending
  arma::cx_mat v1;      // Nt x Ns
  arma::vec sigma1;     // Ns leading values
};

/// Unit-norm array response toward (azimuth, elevation), both in radians.
///
/// Linear:  a_n = exp(j*2*pi*spacing*n*sin(az)) / sqrt(N)
/// Planar:  a_{m,n} = exp(j*2*pi*spacing*(m*sin(az)*sin(el) + n*cos(el)))
///          / sqrt(M*N), flattened with index m*elements_y + n.
arma::cx_vec steering_vector(const ArrayGeometry& geometry, double azimuth,
                             double elevation);

/// Draws a single-cluster ray set: one uniformly distributed cluster mean
/// per angle dimension shared by all rays, plus per-ray Laplacian
/// deviations whose standard deviation equals angular_spread (radians).
/// Gains are i.i.d. CN(0,1). Deterministic in (arguments, stream state).
PathSet sample_paths(std::size_t l_count, double angular_spread,
                     RandomStream& rng);

/// Narrow-band clustered channel: h = sqrt(Nt*Nr/L) * sum_l gain_l *
/// a_rx(aoa) * a_tx(aod)^H, of shape Nr x Nt.
ChannelRealization assemble_channel(const PathSet& paths,
                                    const ArrayGeometry& tx,
                                    const ArrayGeometry& rx);

/// Full SVD of h_downlink with the leading-ns partition used by every
/// precoder design. Throws std::invalid_argument if ns is out of range.
ChannelSvd svd_partition(const ChannelRealization& channel, std::size_t ns);

/// Wraps an angle into [-pi, pi).
double wrap_to_pi(double angle);

}  // namespace rfpnsim

#endif  // RFPNSIM_CHANNEL_HPP
