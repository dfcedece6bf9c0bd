// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "gaussfactor/gauss.hpp"

namespace gaussfactor::wavepacket {

inline constexpr double kDefaultDeltaM = 10.0;
inline constexpr double kDefaultHalfWindow = 0.25;
inline constexpr std::uint32_t kDefaultSamples = 101;
inline constexpr double kDefaultSymTol = 0.05;

/// Gaussian wave packet with the encoded integer N = T / T_cl.
struct WavePacketSpec {
  std::uint64_t number;  // encoded integer
  double delta_m;        // Gaussian width of the weight function
  std::uint32_t m_max;   // truncation half-width, >= 5 * delta_m

  WavePacketSpec(std::uint64_t number, double delta_m, std::uint32_t m_max);

  /// Default truncation at ceil(5 * delta_m): tail mass below 1e-6.
  static WavePacketSpec make(std::uint64_t number, double delta_m = kDefaultDeltaM);
};

/// Normalized weights W_m ~ exp(-m^2 / (2 delta_m^2)) for |m| <= m_max.
std::vector<std::pair<std::int64_t, double>> weights(const WavePacketSpec& spec);

/// S_N(tau) = sum_m W_m exp(-2 pi i (m + m^2/N) tau). The integer part of
/// tau is folded into the phase by exact modular arithmetic, so revivals at
/// integer tau and the period-N recurrence hold to machine precision.
Complex autocorrelation(const WavePacketSpec& spec, double tau);

/// |S|^2 sampled around a candidate integer.
struct RiddleTrace {
  std::uint64_t center_ell = 0;
  std::vector<double> offsets;  // symmetric about 0
  std::vector<double> values;   // |S(ell + offset)|^2
};

RiddleTrace riddle_trace(const WavePacketSpec& spec, std::uint64_t ell,
                         double half_window = kDefaultHalfWindow,
                         std::uint32_t samples = kDefaultSamples);

struct CandidateVerdict {
  std::uint64_t ell = 0;
  bool flagged = false;
  double peak_score = 0.0;  // central |S|^2
  double asymmetry = 0.0;   // max lobe asymmetry relative to the center
};

/// Flags ell iff the central sample is the strict maximum of its trace and
/// the central lobe (out to the first flanking local minimum on each side)
/// is symmetric within sym_tol. Beyond the lobe, neighbouring revival humps
/// interfere and carry no symmetry information about the peak itself.
std::vector<CandidateVerdict> detect_factor_candidates(
    const WavePacketSpec& spec, const std::vector<std::uint64_t>& candidates,
    double half_window = kDefaultHalfWindow,
    std::uint32_t samples = kDefaultSamples, double sym_tol = kDefaultSymTol);

}  // namespace gaussfactor::wavepacket
