// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gaussfactor::numtheory {

/// Greatest common divisor with gcd(a, 0) = a. Rejects gcd(0, 0).
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Jacobi symbol (a/b) for odd positive b: -1, 0 or +1.
/// 0 iff a and b share a factor; (a/1) = +1 by convention.
int jacobi(std::int64_t a, std::uint64_t b);

/// Partition of the odd integers into 4s+1 and 4s+3.
enum class OddClass { M1, M3 };

struct ResidueClass {
  OddClass variant;
  std::uint64_t witness_s;  // r = 4 * witness_s + 1 (M1) or + 3 (M3)
};

ResidueClass residue_class(std::uint64_t r);

/// Splits n = 2^k * odd_part; returns (k, odd_part).
std::pair<std::uint32_t, std::uint64_t> strip_twos(std::uint64_t n);

struct Factorization {
  // (prime, exponent) with primes strictly increasing
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;

  std::uint64_t value() const;
};

inline constexpr std::uint64_t kBruteFactorLimit = 1'000'000'000'000ULL;

/// Complete factorization by trial division, for 1 <= n <= kBruteFactorLimit.
/// Serves as the independent oracle for the signal-driven extractors.
Factorization brute_factor(std::uint64_t n);

namespace detail {

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m);

/// Floored remainder of a mod b, always in [0, b).
std::uint64_t mod_floor(std::int64_t a, std::uint64_t b);

std::uint64_t isqrt(std::uint64_t n);

/// Jacobi symbol core on pre-reduced arguments (n odd positive, a < n or a == 0).
int jacobi_reduced(std::uint64_t a, std::uint64_t n);

}  // namespace detail

}  // namespace gaussfactor::numtheory
