// SPDX-License-Identifier: Apache-2.0

#include "gaussfactor/wavepacket.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gaussfactor::wavepacket {

namespace {

using WeightList = std::vector<std::pair<std::int64_t, double>>;

// Phase cycles of one term, (m + m^2/N) tau, reduced mod 1. Splitting tau
// into integer and fractional parts lets the integer contribution
// m^2 floor(tau) mod N be taken exactly, so S(tau + N) = S(tau) and the
// revivals at integer tau hold to machine precision.
Complex eval(const WavePacketSpec& spec, const WeightList& w, double tau) {
  const std::uint64_t number = spec.number;
  const double ti = std::floor(tau);
  const double tf = tau - ti;
  double ti_rem = std::fmod(ti, static_cast<double>(number));
  if (ti_rem < 0.0) ti_rem += static_cast<double>(number);
  const auto ti_m = static_cast<std::uint64_t>(ti_rem);
  double re = 0.0;
  double im = 0.0;
  for (const auto& [m, wm] : w) {
    const auto m2 = static_cast<std::uint64_t>(m * m);
    const std::uint64_t whole =
        numtheory::detail::mulmod(m2 % number, ti_m, number);
    const double cycles =
        static_cast<double>(whole) / static_cast<double>(number) +
        (static_cast<double>(m) +
         static_cast<double>(m2) / static_cast<double>(number)) *
            tf;
    const double phi = -2.0 * std::numbers::pi * std::fmod(cycles, 1.0);
    re += wm * std::cos(phi);
    im += wm * std::sin(phi);
  }
  return {re, im};
}

}  // namespace

WavePacketSpec::WavePacketSpec(std::uint64_t number, double delta_m,
                               std::uint32_t m_max)
    : number(number), delta_m(delta_m), m_max(m_max) {
  if (number == 0)
    throw std::domain_error("WavePacketSpec: number must be positive");
  if (!(delta_m > 0.0))
    throw std::domain_error("WavePacketSpec: delta_m must be positive");
  if (m_max < 1 || static_cast<double>(m_max) < 5.0 * delta_m)
    throw std::domain_error(
        "WavePacketSpec: m_max must cover at least five Gaussian widths");
}

WavePacketSpec WavePacketSpec::make(std::uint64_t number, double delta_m) {
  if (!(delta_m > 0.0) || delta_m > 2e6)
    throw std::domain_error("WavePacketSpec: delta_m out of range");
  const auto span = static_cast<std::uint32_t>(std::ceil(5.0 * delta_m));
  return {number, delta_m, span};
}

WeightList weights(const WavePacketSpec& spec) {
  const auto mm = static_cast<std::int64_t>(spec.m_max);
  WeightList out;
  out.reserve(static_cast<std::size_t>(2 * mm + 1));
  double total = 0.0;
  const double two_var = 2.0 * spec.delta_m * spec.delta_m;
  for (std::int64_t m = -mm; m <= mm; ++m) {
    const double w = std::exp(-static_cast<double>(m * m) / two_var);
    out.emplace_back(m, w);
    total += w;
  }
  for (auto& [m, w] : out) w /= total;
  return out;
}

Complex autocorrelation(const WavePacketSpec& spec, double tau) {
  return eval(spec, weights(spec), tau);
}

RiddleTrace riddle_trace(const WavePacketSpec& spec, std::uint64_t ell,
                         double half_window, std::uint32_t samples) {
  if (ell == 0) throw std::domain_error("riddle_trace: candidate must be positive");
  if (!(half_window > 0.0))
    throw std::domain_error("riddle_trace: half_window must be positive");
  if (samples == 0 || samples % 2 == 0)
    throw std::domain_error("riddle_trace: samples must be odd");
  const WeightList w = weights(spec);
  RiddleTrace trace;
  trace.center_ell = ell;
  trace.offsets.reserve(samples);
  trace.values.reserve(samples);
  const auto c = static_cast<std::int64_t>(samples / 2);
  for (std::uint32_t i = 0; i < samples; ++i) {
    // offset(i) = -offset(samples-1-i) exactly
    const double dt =
        samples == 1 ? 0.0
                     : half_window *
                           static_cast<double>(static_cast<std::int64_t>(i) - c) /
                           static_cast<double>(c);
    const Complex s = eval(spec, w, static_cast<double>(ell) + dt);
    trace.offsets.push_back(dt);
    trace.values.push_back(std::norm(s));
  }
  return trace;
}

std::vector<CandidateVerdict> detect_factor_candidates(
    const WavePacketSpec& spec, const std::vector<std::uint64_t>& candidates,
    double half_window, std::uint32_t samples, double sym_tol) {
  if (candidates.empty())
    throw std::domain_error("detect_factor_candidates: candidate list is empty");
  std::vector<CandidateVerdict> out;
  out.reserve(candidates.size());
  for (const std::uint64_t ell : candidates) {
    const RiddleTrace trace = riddle_trace(spec, ell, half_window, samples);
    const std::size_t c = trace.values.size() / 2;
    const double center = trace.values[c];

    bool strict_max = center > 0.0;
    for (std::size_t k = 0; k < trace.values.size() && strict_max; ++k)
      if (k != c && trace.values[k] >= center) strict_max = false;

    // Walk out to the first flanking local minimum on each side; only the
    // central lobe is judged for symmetry.
    std::size_t lobe = c;
    for (std::size_t k = 1; c + k + 1 < trace.values.size(); ++k)
      if (trace.values[c + k + 1] > trace.values[c + k]) {
        lobe = k;
        break;
      }
    for (std::size_t k = 1; k < lobe && k + 1 <= c; ++k)
      if (trace.values[c - k - 1] > trace.values[c - k]) {
        lobe = k;
        break;
      }

    double asym = 0.0;
    if (center <= 0.0) {
      asym = std::numeric_limits<double>::infinity();
    } else {
      for (std::size_t k = 1; k <= lobe && c + k < trace.values.size(); ++k)
        asym = std::max(
            asym, std::abs(trace.values[c + k] - trace.values[c - k]) / center);
    }
    out.push_back({ell, strict_max && asym <= sym_tol, center, asym});
  }
  return out;
}

}  // namespace gaussfactor::wavepacket
