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

#include "rfpnsim/rfpn.hpp"

#include <cmath>
#include <stdexcept>

#include "rfpnsim/errors.hpp"

namespace rfpnsim {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

void require(bool condition, const char* message) {
  if (!condition) {
    throw std::invalid_argument(message);
  }
}
}  // namespace

void NetworkLosses::validate() const {
  if (!(l_s >= 1.0) || !(l_ps >= 1.0) || !(l_c >= 1.0)) {
    throw std::invalid_argument("network losses must be >= 1 (linear power ratio)");
  }
}

double NetworkLosses::from_db(double loss_db) {
  if (!(loss_db >= 0.0) || !std::isfinite(loss_db)) {
    throw std::invalid_argument("component loss in dB must be finite and >= 0");
  }
  return std::pow(10.0, loss_db / 10.0);
}

double snap_phase(double phase, int resolution_bits) {
  if (resolution_bits == PhaseConfig::kUnlimitedResolution) {
    return phase;
  }
  const double step = kTwoPi / std::pow(2.0, resolution_bits);
  return step * std::round(phase / step);
}

arma::sp_cx_mat build_divider(const RfpnVariant& variant, std::size_t nt,
                              std::size_t ntrx, const NetworkLosses& losses) {
  losses.validate();
  require(ntrx >= 1 && nt >= ntrx, "build_divider: need nt >= ntrx >= 1");

  if (variant.kind == RfpnKind::kFullyConnected) {
    // [I_Ntrx kron 1_Nt]: chain k feeds the Nt lines of block k.
    const double w = std::sqrt(1.0 / (losses.l_s * static_cast<double>(nt)));
    arma::umat locations(2, nt * ntrx);
    arma::cx_vec values(nt * ntrx);
    for (std::size_t k = 0; k < ntrx; ++k) {
      for (std::size_t i = 0; i < nt; ++i) {
        const std::size_t cursor = k * nt + i;
        locations(0, cursor) = k * nt + i;
        locations(1, cursor) = k;
        values(cursor) = w;
      }
    }
    return arma::sp_cx_mat(locations, values, nt * ntrx, ntrx);
  }
  if (variant.kind == RfpnKind::kSubArray) {
    require(nt % ntrx == 0, "build_divider: sub-array needs ntrx | nt");
    const std::size_t block = nt / ntrx;
    const double w = std::sqrt(1.0 / (losses.l_s * static_cast<double>(block)));
    arma::umat locations(2, nt);
    arma::cx_vec values(nt);
    for (std::size_t i = 0; i < nt; ++i) {
      locations(0, i) = i;
      locations(1, i) = i / block;
      values(i) = w;
    }
    return arma::sp_cx_mat(locations, values, nt, ntrx);
  }
  throw std::invalid_argument("build_divider: DFT variant has no divider model");
}

arma::sp_cx_mat build_phase_shifters(const PhaseConfig& config,
                                     const NetworkLosses& losses) {
  losses.validate();
  require(!config.phases.empty(), "build_phase_shifters: empty phase vector");

  const double amp = std::sqrt(1.0 / losses.l_ps);
  const std::size_t n = config.phases.size();
  arma::sp_cx_mat f_ps(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double phi = snap_phase(config.phases[k], config.resolution_bits);
    f_ps(k, k) = std::polar(amp, phi);
  }
  return f_ps;
}

arma::sp_cx_mat build_combiner(std::size_t nt, std::size_t ntrx,
                               const NetworkLosses& losses) {
  losses.validate();
  require(nt >= 1 && ntrx >= 1, "build_combiner: need nt, ntrx >= 1");

  // [1_Ntrx^T kron I_Nt]: antenna i collects line i of every block.
  const double w = std::sqrt(1.0 / (losses.l_c * static_cast<double>(ntrx)));
  arma::sp_cx_mat f_c(nt, nt * ntrx);
  for (std::size_t k = 0; k < ntrx; ++k) {
    for (std::size_t i = 0; i < nt; ++i) {
      f_c(i, k * nt + i) = w;
    }
  }
  return f_c;
}

RfpnMatrices assemble_network(const RfpnVariant& variant,
                              const PhaseConfig& phases, std::size_t nt,
                              std::size_t ntrx, const NetworkLosses& losses) {
  RfpnMatrices out;
  out.variant = variant;
  out.nt = nt;
  out.ntrx = ntrx;

  if (variant.kind == RfpnKind::kFullyConnected) {
    require(phases.phases.size() == nt * ntrx,
            "assemble_network: fully-connected phase vector must have Nt*Ntrx entries");
    out.f_d = build_divider(variant, nt, ntrx, losses);
    out.f_ps = build_phase_shifters(phases, losses);
    out.f_c = build_combiner(nt, ntrx, losses);
    out.f_net = arma::cx_mat(out.f_c * out.f_ps * out.f_d);
    return out;
  }
  if (variant.kind == RfpnKind::kSubArray) {
    require(phases.phases.size() == nt,
            "assemble_network: sub-array phase vector must have Nt entries");
    out.f_d = build_divider(variant, nt, ntrx, losses);
    out.f_ps = build_phase_shifters(phases, losses);
    out.f_c = arma::speye<arma::sp_cx_mat>(nt, nt);  // no combiners
    out.f_net = arma::cx_mat(out.f_ps * out.f_d);
    return out;
  }
  throw std::invalid_argument("assemble_network: use dft_network() for the DFT variant");
}

PhaseConfig fit_phases_to_target(const arma::cx_mat& f_target,
                                 const RfpnVariant& variant,
                                 int resolution_bits) {
  require(f_target.is_finite(), "fit_phases_to_target: non-finite target");
  const std::size_t nt = f_target.n_rows;
  const std::size_t ntrx = f_target.n_cols;

  PhaseConfig config;
  config.resolution_bits = resolution_bits;

  auto arg_or_zero = [](std::complex<double> z) {
    return std::abs(z) == 0.0 ? 0.0 : std::arg(z);
  };

  if (variant.kind == RfpnKind::kFullyConnected) {
    config.phases.resize(nt * ntrx);
    for (std::size_t k = 0; k < ntrx; ++k) {
      for (std::size_t i = 0; i < nt; ++i) {
        config.phases[k * nt + i] =
            snap_phase(arg_or_zero(f_target(i, k)), resolution_bits);
      }
    }
    return config;
  }
  if (variant.kind == RfpnKind::kSubArray) {
    require(ntrx >= 1 && nt % ntrx == 0,
            "fit_phases_to_target: sub-array needs ntrx | nt");
    const std::size_t block = nt / ntrx;
    config.phases.resize(nt);
    for (std::size_t i = 0; i < nt; ++i) {
      const std::size_t owner = i / block;
      config.phases[i] =
          snap_phase(arg_or_zero(f_target(i, owner)), resolution_bits);
    }
    return config;
  }
  throw std::invalid_argument("fit_phases_to_target: DFT networks have fixed phases");
}

QuantizationSystem build_quantization_operator(std::size_t nt,
                                               std::size_t ntrx,
                                               const NetworkLosses& losses,
                                               std::uint64_t max_entries) {
  require(nt >= 1 && ntrx >= 1, "build_quantization_operator: need nt, ntrx >= 1");
  const std::uint64_t dim = static_cast<std::uint64_t>(nt) * ntrx;
  if (dim * dim > max_entries) {
    throw std::invalid_argument(
        "build_quantization_operator: Nt^2*Ntrx^2 exceeds the sparse-storage budget");
  }

  const arma::sp_cx_mat f_d =
      build_divider(RfpnVariant::fully_connected(), nt, ntrx, losses);
  const arma::sp_cx_mat f_c = build_combiner(nt, ntrx, losses);

  // P = F_D^T kron F_C, assembled entry-by-entry from the two sparsity
  // patterns so structural zeros stay exact. Row (q, i) of P pairs row q
  // of F_D^T (= column q of F_D) with row i of F_C; vec() is column-major.
  const std::uint64_t n_rows = dim;              // Ntrx * Nt
  const std::uint64_t n_cols = dim * dim;        // Ntrx^2 * Nt^2
  const std::uint64_t nnz = dim * dim;           // Nt*Ntrx per row

  arma::umat locations(2, nnz);
  arma::cx_vec values(nnz);
  std::uint64_t cursor = 0;
  for (std::size_t q = 0; q < ntrx; ++q) {
    for (auto it_d = f_d.begin_col(q); it_d != f_d.end_col(q); ++it_d) {
      const std::uint64_t col_block = it_d.row();  // column index into Sigma_PS
      for (arma::sp_cx_mat::const_iterator it_c = f_c.begin();
           it_c != f_c.end(); ++it_c) {
        const std::uint64_t row = q * nt + it_c.row();
        const std::uint64_t col = col_block * dim + it_c.col();
        locations(0, cursor) = row;
        locations(1, cursor) = col;
        values(cursor) = (*it_d) * (*it_c);
        ++cursor;
      }
    }
  }
  locations.resize(2, cursor);
  values.resize(cursor);

  QuantizationSystem out;
  out.p_operator = arma::sp_cx_mat(locations, values, n_rows, n_cols);
  out.sigma_support.reserve(dim);
  for (std::uint64_t p = 0; p < dim; ++p) {
    out.sigma_support.push_back(p * (dim + 1));
  }
  return out;
}

arma::cx_vec phase_vector(std::size_t nt, std::size_t ntrx,
                          const PhaseConfig& config,
                          const NetworkLosses& losses) {
  require(config.phases.size() == nt * ntrx,
          "phase_vector: phase count must equal Nt*Ntrx");
  losses.validate();

  const std::uint64_t dim = static_cast<std::uint64_t>(nt) * ntrx;
  const double amp = std::sqrt(1.0 / losses.l_ps);
  arma::cx_vec sigma(dim * dim, arma::fill::zeros);
  for (std::uint64_t p = 0; p < dim; ++p) {
    const double phi = snap_phase(config.phases[p], config.resolution_bits);
    sigma(p * (dim + 1)) = std::polar(amp, phi);
  }
  return sigma;
}

double quantization_error(const arma::cx_mat& f_target,
                          const RfpnMatrices& matrices) {
  if (f_target.n_rows != matrices.f_net.n_rows ||
      f_target.n_cols != matrices.f_net.n_cols) {
    throw std::invalid_argument("quantization_error: shape mismatch");
  }
  return arma::norm(f_target - matrices.f_net, "fro");
}

RfpnMatrices dft_network(std::size_t nt, std::size_t ntrx,
                         const std::vector<std::size_t>& column_indices) {
  require(ntrx >= 1 && nt >= ntrx, "dft_network: need nt >= ntrx >= 1");
  require(column_indices.size() == ntrx,
          "dft_network: need exactly Ntrx column indices");
  std::vector<bool> seen(nt, false);
  for (std::size_t c : column_indices) {
    require(c < nt, "dft_network: column index out of range");
    require(!seen[c], "dft_network: duplicate column index");
    seen[c] = true;
  }

  const double norm = 1.0 / std::sqrt(static_cast<double>(nt));
  arma::cx_mat f_net(nt, ntrx);
  for (std::size_t m = 0; m < ntrx; ++m) {
    const double step = -kTwoPi * static_cast<double>(column_indices[m]) /
                        static_cast<double>(nt);
    for (std::size_t n = 0; n < nt; ++n) {
      f_net(n, m) = std::polar(norm, step * static_cast<double>(n));
    }
  }

  RfpnMatrices out;
  out.variant = RfpnVariant::dft(column_indices);
  out.nt = nt;
  out.ntrx = ntrx;
  // Port-level model: the coupler cascade is not decomposed into stages.
  out.f_d = arma::sp_cx_mat(f_net);
  out.f_ps = arma::speye<arma::sp_cx_mat>(nt, nt);
  out.f_c = arma::speye<arma::sp_cx_mat>(nt, nt);
  out.f_net = std::move(f_net);
  return out;
}

arma::cx_mat projection_matrix(const arma::cx_mat& f_net) {
  arma::cx_mat u;
  arma::vec s;
  arma::cx_mat v;
  if (!arma::svd_econ(u, s, v, f_net)) {
    throw std::runtime_error("projection_matrix: SVD failed to converge");
  }
  if (s.n_elem == 0 || !(s.min() > 1e-10 * s.max())) {
    throw SingularNetworkError("projection_matrix: network matrix is rank deficient");
  }
  // F (F^*F)^{-1} F^* equals U U^* on the economy factor.
  const arma::cx_mat u_basis = u.cols(0, f_net.n_cols - 1);
  return u_basis * u_basis.t();
}

}  // namespace rfpnsim
