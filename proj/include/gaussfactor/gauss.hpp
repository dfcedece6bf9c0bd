// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include "gaussfactor/numtheory.hpp"

namespace gaussfactor {

using Complex = std::complex<double>;

}  // namespace gaussfactor

namespace gaussfactor::gauss {

/// Exact fourth root of unity, i^k for k = 0..3.
enum class UnitRoot { PlusOne, PlusI, MinusOne, MinusI };

/// Mixed never results from the closed form; it labels even-modulus
/// direct sums, which carry both components (e.g. G(1,4) = (1-i)/2).
enum class Classification { PurelyReal, PurelyImaginary, Unity, Mixed };

/// Exact symbolic value of a reduced quadratic Gauss sum:
/// coefficient / sqrt(denominator_b), or exactly 1 when degenerate.
struct GaussValue {
  UnitRoot coefficient = UnitRoot::PlusOne;
  std::uint64_t denominator_b = 1;  // odd positive
  bool degenerate_unity = false;    // reduced b == 1

  Complex to_complex() const;
  double mod2() const;  // 1 / denominator_b
};

/// G(a,b) = (1/b) sum_{m=0}^{b-1} exp(-2 pi i m^2 a / b), summed in floating
/// point with the phase index m^2 a mod b reduced in exact integer arithmetic.
Complex gauss_direct(std::int64_t a, std::uint64_t b);

/// Cancels the common factor: returns (a', b') with a' = (a mod b)/d,
/// b' = b/d, d = gcd(a mod b, b); (0, 1) when a is a multiple of b.
/// G(a,b) = G(a',b') exactly, since the length-b sum walks each residue
/// class mod b' exactly d times and the 1/b prefactor absorbs that.
std::pair<std::uint64_t, std::uint64_t> reduce(std::int64_t a, std::uint64_t b);

/// Closed-form evaluation for odd b via the Jacobi symbol:
/// G = (2a'/b') exp(i pi (b'-1)/4) / sqrt(b') after reduction.
/// Rejects even b; callers strip factors of two or fall back to gauss_direct.
GaussValue gauss_closed(std::int64_t a, std::uint64_t b);

/// Exact classification: Unity when degenerate, else PurelyReal for
/// denominator in M1 and PurelyImaginary for denominator in M3.
Classification classify(const GaussValue& v);

const char* to_string(Classification c);
const char* to_string(UnitRoot r);

}  // namespace gaussfactor::gauss
