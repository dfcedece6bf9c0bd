// SPDX-License-Identifier: Apache-2.0

#include "gaussfactor/rotor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace gaussfactor::rotor {

namespace {

constexpr double kRealityTol = 1e-9;
// Between the coprime value mod2*M = 1 and the smallest factor value >= 3.
constexpr double kScanFlagThreshold = 1.5;

Classification classify_numeric(const Complex& s, bool unity) {
  if (unity) return Classification::Unity;
  if (std::abs(s.imag()) <= kRealityTol) return Classification::PurelyReal;
  if (std::abs(s.real()) <= kRealityTol) return Classification::PurelyImaginary;
  return Classification::Mixed;
}

SignalPart signal_part_for(std::uint64_t reduced_b) {
  if (reduced_b == 1) return SignalPart::Modulus;
  return numtheory::residue_class(reduced_b).variant == numtheory::OddClass::M1
             ? SignalPart::RealPart
             : SignalPart::ImaginaryPart;
}

// Distinct primes of an odd m > 1, found by the same interior gcd walk that
// drives extract_factors: the first n sharing a factor with the residue is
// its smallest prime; recursion covers composite hits anyway.
std::vector<std::uint64_t> scan_primes(std::uint64_t m) {
  std::vector<std::uint64_t> primes;
  std::uint64_t residue = m;
  const std::uint64_t root = numtheory::detail::isqrt(m);
  bool divisor_seen = false;
  for (std::uint64_t n = 2; residue > 1 && n < m; ++n) {
    if (!divisor_seen && n > root) break;
    const std::uint64_t d = std::gcd(n, m);
    if (d == 1) continue;
    divisor_seen = true;
    const std::uint64_t g = std::gcd(d, residue);
    if (g == 1) continue;
    for (const std::uint64_t p : scan_primes(g)) {  // g <= n < m
      while (residue % p == 0) residue /= p;
      primes.push_back(p);
    }
  }
  if (residue > 1) primes.push_back(residue);
  return primes;
}

}  // namespace

std::uint64_t FactorReport::value() const {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < two_exponent; ++i) v *= 2;
  for (const auto& [p, e] : odd_factors)
    for (std::uint32_t i = 0; i < e; ++i) v *= p;
  return v;
}

Complex autocorrelation(std::uint64_t number, std::int64_t n) {
  if (number == 0) throw std::domain_error("autocorrelation: number must be positive");
  if (number % 2 == 1) return gauss::gauss_closed(n, number).to_complex();
  return gauss::gauss_direct(n, number);
}

Complex autocorrelation_continuous(std::uint64_t number, double t_over_t_rev) {
  if (number == 0) throw std::domain_error("autocorrelation: number must be positive");
  // Every phase k^2 x is invariant under x -> x + 1.
  const double xf = t_over_t_rev - std::floor(t_over_t_rev);
  double re = 0.0;
  double im = 0.0;
  for (std::uint64_t k = 0; k < number; ++k) {
    const double cycles = std::fmod(static_cast<double>(k * k) * xf, 1.0);
    const double phi = -2.0 * std::numbers::pi * cycles;
    re += std::cos(phi);
    im += std::sin(phi);
  }
  const auto nd = static_cast<double>(number);
  return {re / nd, im / nd};
}

std::vector<ScanRow> scan(std::uint64_t number) {
  if (number < 2) throw std::domain_error("scan: number must be at least 2");
  std::vector<ScanRow> rows;
  rows.reserve(number);
  const bool odd = number % 2 == 1;
  for (std::uint64_t n = 1; n <= number; ++n) {
    ScanRow row;
    row.n = static_cast<std::int64_t>(n);
    row.d = std::gcd(n, number);
    Complex s;
    if (odd) {
      const gauss::GaussValue v = gauss::gauss_closed(row.n, number);
      s = v.to_complex();
      row.classification = gauss::classify(v);
    } else {
      s = gauss::gauss_direct(row.n, number);
      row.classification = classify_numeric(s, n == number);
    }
    row.re = s.real();
    row.im = s.imag();
    row.mod2 = s.real() * s.real() + s.imag() * s.imag();
    rows.push_back(row);
  }
  return rows;
}

FactorReport extract_factors(std::uint64_t number) {
  if (number < 2) throw std::domain_error("extract_factors: number must be at least 2");
  FactorReport report;
  report.input_n = number;
  const auto [twos, m] = numtheory::strip_twos(number);
  report.two_exponent = twos;
  if (m == 1) return report;

  std::uint64_t residue = m;
  const std::uint64_t root = numtheory::detail::isqrt(m);
  bool divisor_seen = false;
  for (std::uint64_t n = 2; residue > 1 && n < m; ++n) {
    // No flag up to sqrt(m) certifies m prime (divisor rows are symmetric).
    if (!divisor_seen && n > root) break;
    const gauss::GaussValue value = gauss::gauss_closed(static_cast<std::int64_t>(n), m);
    const std::uint64_t d = std::gcd(n, m);
    const bool flagged = value.mod2() * static_cast<double>(m) > kScanFlagThreshold;
    if (flagged != (d > 1))
      throw std::logic_error("extract_factors: modulus signal disagrees with gcd");
    if (!flagged) continue;
    if (value.denominator_b != m / d)
      throw std::logic_error("extract_factors: reduced modulus disagrees with gcd");
    divisor_seen = true;
    const std::uint64_t g = std::gcd(d, residue);
    if (g == 1) continue;  // divisor already fully harvested
    report.evidence.push_back(
        {static_cast<std::int64_t>(n), d, signal_part_for(m / d)});
    for (const std::uint64_t p : scan_primes(g)) {
      std::uint32_t e = 0;
      while (residue % p == 0) {
        residue /= p;
        ++e;
      }
      if (e > 0) report.odd_factors.emplace_back(p, e);
    }
  }
  if (residue > 1) report.odd_factors.emplace_back(residue, 1);
  std::sort(report.odd_factors.begin(), report.odd_factors.end());
  return report;
}

const char* to_string(SignalPart p) {
  switch (p) {
    case SignalPart::Modulus: return "modulus";
    case SignalPart::RealPart: return "real";
    case SignalPart::ImaginaryPart: return "imag";
  }
  return "?";
}

}  // namespace gaussfactor::rotor
