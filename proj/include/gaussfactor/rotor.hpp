// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "gaussfactor/gauss.hpp"

namespace gaussfactor::rotor {

using gauss::Classification;

/// One integer-time sample of the rotor autocorrelation scan.
struct ScanRow {
  std::int64_t n = 0;
  double re = 0.0;
  double im = 0.0;
  double mod2 = 0.0;
  std::uint64_t d = 1;  // gcd(n, number)
  Classification classification = Classification::PurelyReal;
};

enum class SignalPart { Modulus, RealPart, ImaginaryPart };

struct FactorEvidence {
  std::int64_t n = 0;       // scan row that flagged the divisor
  std::uint64_t d = 1;      // gcd(n, odd part) at that row
  SignalPart signal_part = SignalPart::Modulus;
};

struct FactorReport {
  std::uint64_t input_n = 0;
  std::uint32_t two_exponent = 0;
  // odd primes with exponents, strictly increasing
  std::vector<std::pair<std::uint64_t, std::uint32_t>> odd_factors;
  std::vector<FactorEvidence> evidence;  // one entry per discovered divisor

  std::uint64_t value() const;  // 2^two_exponent * prod p^e
};

/// Rotor autocorrelation at integer scaled time: G(n mod number, number).
/// Uses the closed form when number is odd, direct summation otherwise.
Complex autocorrelation(std::uint64_t number, std::int64_t n);

/// (1/N) sum_k exp(-2 pi i k^2 t/T); agrees with autocorrelation(number, n)
/// at t/T = n/number. Periodic with period 1 in t/T since k^2 is integer.
Complex autocorrelation_continuous(std::uint64_t number, double t_over_t_rev);

/// Full scan over n = 1..number. Classification is exact for odd number.
std::vector<ScanRow> scan(std::uint64_t number);

/// Signal-driven factorization: strips twos, then walks the scan of the odd
/// part harvesting divisors wherever the autocorrelation modulus flags one
/// (mod2 * M > 1.5); the exact gcd is recorded as ground truth and must
/// agree with the flag. Evidence notes whether the non-vanishing value sat
/// in the real part (reduced modulus in M1) or imaginary part (M3).
FactorReport extract_factors(std::uint64_t number);

const char* to_string(SignalPart p);

}  // namespace gaussfactor::rotor
