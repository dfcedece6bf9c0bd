// SPDX-License-Identifier: Apache-2.0

#include "gaussfactor/numtheory.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gaussfactor::numtheory {

namespace detail {

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t mod_floor(std::int64_t a, std::uint64_t b) {
  __int128 r = static_cast<__int128>(a) % static_cast<__int128>(b);
  if (r < 0) r += static_cast<__int128>(b);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  const auto sq = [](std::uint64_t v) { return static_cast<unsigned __int128>(v) * v; };
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && sq(r) > n) --r;
  while (sq(r + 1) <= n) ++r;
  return r;
}

// Binary Jacobi: second supplement for the stripped twos, reciprocity for
// the swap. No division beyond the reductions, no floating point.
int jacobi_reduced(std::uint64_t a, std::uint64_t n) {
  int sign = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const std::uint64_t r = n & 7;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

}  // namespace detail

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

int jacobi(std::int64_t a, std::uint64_t b) {
  if (b == 0 || b % 2 == 0)
    throw std::domain_error("jacobi: modulus must be odd and positive");
  return detail::jacobi_reduced(detail::mod_floor(a, b), b);
}

ResidueClass residue_class(std::uint64_t r) {
  if (r == 0 || r % 2 == 0)
    throw std::domain_error("residue_class: argument must be odd and positive");
  if (r % 4 == 1) return {OddClass::M1, (r - 1) / 4};
  return {OddClass::M3, (r - 3) / 4};
}

std::pair<std::uint32_t, std::uint64_t> strip_twos(std::uint64_t n) {
  if (n == 0) throw std::domain_error("strip_twos: argument must be positive");
  const int k = std::countr_zero(n);
  return {static_cast<std::uint32_t>(k), n >> k};
}

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& [p, e] : factors)
    for (std::uint32_t i = 0; i < e; ++i) v *= p;
  return v;
}

Factorization brute_factor(std::uint64_t n) {
  if (n == 0) throw std::domain_error("brute_factor: argument must be positive");
  if (n > kBruteFactorLimit)
    throw std::domain_error("brute_factor: argument exceeds the trial-division limit");
  Factorization out;
  std::uint64_t m = n;
  const auto push = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.factors.emplace_back(p, e);
  };
  push(2);
  for (std::uint64_t p = 3; p * p <= m; p += 2) push(p);
  if (m > 1) out.factors.emplace_back(m, 1);
  return out;
}

}  // namespace gaussfactor::numtheory
