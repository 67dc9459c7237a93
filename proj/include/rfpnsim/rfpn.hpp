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

#ifndef RFPNSIM_RFPN_HPP
#define RFPNSIM_RFPN_HPP

#include <armadillo>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rfpnsim {

/// Per-component insertion losses as linear power ratios (1 = lossless).
struct NetworkLosses {
  double l_s = 1.0;   // power dividers (substrate + implementation)
  double l_ps = 1.0;  // phase shifters
  double l_c = 1.0;   // power combiners

  void validate() const;  // throws std::invalid_argument if any < 1

  /// Converts a non-negative per-component loss in dB to the linear ratio.
  static double from_db(double loss_db);
};

enum class RfpnKind { kFullyConnected, kSubArray, kDftColumns };

/// Network topology selector. kDftColumns carries the selected column
/// indices of the Nt-point DFT matrix (a Butler-style beamforming network).
struct RfpnVariant {
  RfpnKind kind = RfpnKind::kFullyConnected;
  std::vector<std::size_t> dft_columns;  // used only by kDftColumns

  static RfpnVariant fully_connected() { return {RfpnKind::kFullyConnected, {}}; }
  static RfpnVariant sub_array() { return {RfpnKind::kSubArray, {}}; }
  static RfpnVariant dft(std::vector<std::size_t> columns) {
    return {RfpnKind::kDftColumns, std::move(columns)};
  }
};

/// Phase-shifter settings. resolution_bits == kUnlimitedResolution means
/// continuous phases; otherwise every phase sits on the 2*pi/2^b grid.
struct PhaseConfig {
  static constexpr int kUnlimitedResolution = 0;

  std::vector<double> phases;  // Nt*Ntrx entries (fully connected), Nt (sub-array)
  int resolution_bits = kUnlimitedResolution;

  bool unlimited() const { return resolution_bits == kUnlimitedResolution; }
};

/// Snaps a phase to the nearest multiple of 2*pi/2^bits; identity when
/// bits == PhaseConfig::kUnlimitedResolution.
double snap_phase(double phase, int resolution_bits);

/// The microwave network as divider, phase-shifter and combiner stages
/// plus their product, the realizable analog precoder (Nt x Ntrx).
///
/// f_c is an identity placeholder for the sub-array variant (it has no
/// combiners); for the DFT variant the network is modeled at the port
/// level, so f_d carries the whole response and f_ps, f_c are identity.
struct RfpnMatrices {
  RfpnVariant variant;
  std::size_t nt = 0;
  std::size_t ntrx = 0;
  arma::sp_cx_mat f_d;
  arma::sp_cx_mat f_ps;
  arma::sp_cx_mat f_c;
  arma::cx_mat f_net;
};

/// Sparse representation of the port-domain quantization system: the fat
/// operator mapping the long phase vector onto vec(F_C F_PS F_D).
struct QuantizationSystem {
  arma::sp_cx_mat p_operator;             // (Ntrx*Nt) x (Ntrx^2*Nt^2)
  std::vector<std::uint64_t> sigma_support;  // Nt*Ntrx diagonal positions
};

/// Divider matrix.
///   fully connected: sqrt(1/(L_s*Nt)) * [I_Ntrx kron 1_Nt], (Nt*Ntrx) x Ntrx
///   sub-array:       sqrt(Ntrx/(L_s*Nt)) block-diagonal of 1_{Nt/Ntrx}, Nt x Ntrx
/// The sub-array form requires Ntrx to divide Nt.
arma::sp_cx_mat build_divider(const RfpnVariant& variant, std::size_t nt,
                              std::size_t ntrx, const NetworkLosses& losses);

/// Diagonal phase-shifter matrix sqrt(1/L_ps) * diag(exp(j*phi_k)), with
/// phases snapped to the resolution grid of the config.
arma::sp_cx_mat build_phase_shifters(const PhaseConfig& config,
                                     const NetworkLosses& losses);

/// Combiner matrix sqrt(1/(L_c*Ntrx)) * [1_Ntrx^T kron I_Nt], Nt x (Nt*Ntrx).
arma::sp_cx_mat build_combiner(std::size_t nt, std::size_t ntrx,
                               const NetworkLosses& losses);

/// Assembles the full network for the fully-connected or sub-array
/// variants. Use dft_network() for the DFT variant.
RfpnMatrices assemble_network(const RfpnVariant& variant,
                              const PhaseConfig& phases, std::size_t nt,
                              std::size_t ntrx, const NetworkLosses& losses);

/// Fits the network phases to a target analog precoder by per-entry (or
/// per-antenna, for sub-arrays) argument extraction, then snaps to the
/// resolution grid. Entries with zero modulus get phase 0.
PhaseConfig fit_phases_to_target(const arma::cx_mat& f_target,
                                 const RfpnVariant& variant,
                                 int resolution_bits);

/// Builds the sparse quantization operator P for the fully-connected
/// network. Refuses configurations whose operator column count Nt^2*Ntrx^2
/// exceeds max_entries (the sparse-storage budget).
QuantizationSystem build_quantization_operator(
    std::size_t nt, std::size_t ntrx, const NetworkLosses& losses,
    std::uint64_t max_entries = (1ull << 26));

/// Expands a phase config into the long sparse phase vector the
/// quantization operator acts on (dense storage, mostly zeros).
arma::cx_vec phase_vector(std::size_t nt, std::size_t ntrx,
                          const PhaseConfig& config,
                          const NetworkLosses& losses);

/// Frobenius distance between a target analog precoder and the network
/// product, || f_target - f_net ||_F.
double quantization_error(const arma::cx_mat& f_target,
                          const RfpnMatrices& matrices);

/// Butler-style network whose columns are the selected DFT columns:
/// f_net(n, m) = exp(-j*2*pi*n*c_m/Nt) / sqrt(Nt).
RfpnMatrices dft_network(std::size_t nt, std::size_t ntrx,
                         const std::vector<std::size_t>& column_indices);

/// Orthogonal projector onto the column space of the analog network,
/// F (F^* F)^{-1} F^*. Throws SingularNetworkError when the smallest
/// singular value falls below 1e-10 of the largest.
arma::cx_mat projection_matrix(const arma::cx_mat& f_net);

}  // namespace rfpnsim

#endif  // RFPNSIM_RFPN_HPP
