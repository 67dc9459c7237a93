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

#include "rfpnsim/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace rfpnsim {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kHalfPi = 0.5 * kPi;

// Folds an elevation back into [-pi/2, pi/2] by reflecting over the poles.
double fold_elevation(double el) {
  el = wrap_to_pi(el);
  if (el > kHalfPi) {
    el = kPi - el;
  } else if (el < -kHalfPi) {
    el = -kPi - el;
  }
  return el;
}
}  // namespace

double wrap_to_pi(double angle) {
  double y = std::fmod(angle + kPi, kTwoPi);
  if (y < 0.0) {
    y += kTwoPi;
  }
  return y - kPi;
}

void ArrayGeometry::validate() const {
  if (elements_x == 0 || elements_y == 0) {
    throw std::invalid_argument("array geometry: element counts must be >= 1");
  }
  if (kind == ArrayKind::kUniformLinear && elements_y != 1) {
    throw std::invalid_argument("array geometry: linear arrays need elements_y == 1");
  }
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw std::invalid_argument("array geometry: spacing must be positive and finite");
  }
}

arma::cx_vec steering_vector(const ArrayGeometry& geometry, double azimuth,
                             double elevation) {
  geometry.validate();
  if (!std::isfinite(azimuth) || !std::isfinite(elevation)) {
    throw std::invalid_argument("steering_vector: non-finite angle");
  }

  const std::size_t n_total = geometry.element_count();
  arma::cx_vec a(n_total);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n_total));

  if (geometry.kind == ArrayKind::kUniformLinear) {
    const double step = kTwoPi * geometry.spacing * std::sin(azimuth);
    for (std::size_t n = 0; n < n_total; ++n) {
      a(n) = std::polar(norm, step * static_cast<double>(n));
    }
  } else {
    const double u = std::sin(azimuth) * std::sin(elevation);
    const double w = std::cos(elevation);
    const double k = kTwoPi * geometry.spacing;
    for (std::size_t m = 0; m < geometry.elements_x; ++m) {
      for (std::size_t n = 0; n < geometry.elements_y; ++n) {
        const double phase = k * (static_cast<double>(m) * u +
                                  static_cast<double>(n) * w);
        a(m * geometry.elements_y + n) = std::polar(norm, phase);
      }
    }
  }
  return a;
}

PathSet sample_paths(std::size_t l_count, double angular_spread,
                     RandomStream& rng) {
  if (l_count == 0) {
    throw std::invalid_argument("sample_paths: l_count must be >= 1");
  }
  if (!(angular_spread >= 0.0) || !std::isfinite(angular_spread)) {
    throw std::invalid_argument("sample_paths: angular_spread must be >= 0");
  }

  // Laplacian scale chosen so the per-ray deviation std equals the spread.
  const double scale = angular_spread / std::sqrt(2.0);

  // One cluster mean per angle dimension, shared by every ray.
  const double mean_aod_az = rng.uniform(-kPi, kPi);
  const double mean_aod_el = rng.uniform(-kHalfPi, kHalfPi);
  const double mean_aoa_az = rng.uniform(-kPi, kPi);
  const double mean_aoa_el = rng.uniform(-kHalfPi, kHalfPi);

  PathSet out;
  out.paths.reserve(l_count);
  for (std::size_t l = 0; l < l_count; ++l) {
    Ray ray;
    ray.gain = rng.complex_gaussian();
    ray.aod_azimuth = wrap_to_pi(mean_aod_az + rng.laplacian(scale));
    ray.aod_elevation = fold_elevation(mean_aod_el + rng.laplacian(scale));
    ray.aoa_azimuth = wrap_to_pi(mean_aoa_az + rng.laplacian(scale));
    ray.aoa_elevation = fold_elevation(mean_aoa_el + rng.laplacian(scale));
    out.paths.push_back(ray);
  }
  return out;
}

ChannelRealization assemble_channel(const PathSet& paths,
                                    const ArrayGeometry& tx,
                                    const ArrayGeometry& rx) {
  tx.validate();
  rx.validate();
  if (paths.paths.empty()) {
    throw std::invalid_argument("assemble_channel: empty path set");
  }

  const std::size_t nt = tx.element_count();
  const std::size_t nr = rx.element_count();
  const double l_count = static_cast<double>(paths.paths.size());
  const double gain_scale = std::sqrt(static_cast<double>(nt) *
                                      static_cast<double>(nr) / l_count);

  arma::cx_mat h(nr, nt, arma::fill::zeros);
  for (const Ray& ray : paths.paths) {
    const arma::cx_vec a_t =
        steering_vector(tx, ray.aod_azimuth, ray.aod_elevation);
    const arma::cx_vec a_r =
        steering_vector(rx, ray.aoa_azimuth, ray.aoa_elevation);
    h += ray.gain * (a_r * a_t.t());
  }
  h *= gain_scale;

  return ChannelRealization{std::move(h), paths};
}

ChannelSvd svd_partition(const ChannelRealization& channel, std::size_t ns) {
  const std::size_t nr = channel.h_downlink.n_rows;
  const std::size_t nt = channel.h_downlink.n_cols;
  if (ns < 1 || ns > std::min(nt, nr)) {
    throw std::invalid_argument("svd_partition: ns out of range");
  }

  arma::cx_mat u;
  arma::vec s;
  arma::cx_mat v;
  if (!arma::svd(u, s, v, channel.h_downlink, "std")) {
    throw std::runtime_error("svd_partition: SVD failed to converge");
  }

  ChannelSvd out;
  out.v = std::move(v);
  out.sigma = std::move(s);
  out.v1 = out.v.cols(0, ns - 1);
  out.sigma1 = out.sigma.head(ns);
  return out;
}

}  // namespace rfpnsim
