// SPDX-License-Identifier: Apache-2.0

#include "gaussfactor/gauss.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace gaussfactor::gauss {

using numtheory::detail::mod_floor;
using numtheory::detail::mulmod;

Complex GaussValue::to_complex() const {
  if (degenerate_unity) return {1.0, 0.0};
  const double mag = 1.0 / std::sqrt(static_cast<double>(denominator_b));
  switch (coefficient) {
    case UnitRoot::PlusOne: return {mag, 0.0};
    case UnitRoot::PlusI: return {0.0, mag};
    case UnitRoot::MinusOne: return {-mag, 0.0};
    case UnitRoot::MinusI: return {0.0, -mag};
  }
  return {};
}

double GaussValue::mod2() const {
  return 1.0 / static_cast<double>(denominator_b);
}

Complex gauss_direct(std::int64_t a, std::uint64_t b) {
  if (b == 0) throw std::domain_error("gauss_direct: modulus must be positive");
  const std::uint64_t am = mod_floor(a, b);
  const double step = -2.0 * std::numbers::pi / static_cast<double>(b);
  double re = 0.0;
  double im = 0.0;
  for (std::uint64_t m = 0; m < b; ++m) {
    // m^2 a mod b in exact integers; direct trig on m^2 a / b would lose
    // the phase entirely once m^2 a outgrows the double mantissa.
    const std::uint64_t r = mulmod(mulmod(m, m, b), am, b);
    const double phi = step * static_cast<double>(r);
    re += std::cos(phi);
    im += std::sin(phi);
  }
  const auto bd = static_cast<double>(b);
  return {re / bd, im / bd};
}

std::pair<std::uint64_t, std::uint64_t> reduce(std::int64_t a, std::uint64_t b) {
  if (b == 0) throw std::domain_error("reduce: modulus must be positive");
  const std::uint64_t am = mod_floor(a, b);
  if (am == 0) return {0, 1};
  const std::uint64_t d = std::gcd(am, b);
  return {am / d, b / d};
}

GaussValue gauss_closed(std::int64_t a, std::uint64_t b) {
  if (b == 0 || b % 2 == 0)
    throw std::domain_error("gauss_closed: closed form requires odd b");
  const auto [ap, bp] = reduce(a, b);
  if (bp == 1) return {UnitRoot::PlusOne, 1, true};
  // a' and b' are coprime and b' odd, so (2a'/b') is +-1, never 0.
  const auto two_ap = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(2) * ap % bp);
  const int j = numtheory::detail::jacobi_reduced(two_ap, bp);
  // exp(i pi (b'-1)/4) = i^((b'-1)/2); the Jacobi sign adds two quarters.
  auto quarter = static_cast<std::uint32_t>(((bp - 1) / 2) % 4);
  if (j < 0) quarter = (quarter + 2) % 4;
  static constexpr UnitRoot kRoots[4] = {UnitRoot::PlusOne, UnitRoot::PlusI,
                                         UnitRoot::MinusOne, UnitRoot::MinusI};
  return {kRoots[quarter], bp, false};
}

Classification classify(const GaussValue& v) {
  if (v.degenerate_unity) return Classification::Unity;
  return v.denominator_b % 4 == 1 ? Classification::PurelyReal
                                  : Classification::PurelyImaginary;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::PurelyReal: return "real";
    case Classification::PurelyImaginary: return "imag";
    case Classification::Unity: return "unity";
    case Classification::Mixed: return "mixed";
  }
  return "?";
}

const char* to_string(UnitRoot r) {
  switch (r) {
    case UnitRoot::PlusOne: return "+1";
    case UnitRoot::PlusI: return "+i";
    case UnitRoot::MinusOne: return "-1";
    case UnitRoot::MinusI: return "-i";
  }
  return "?";
}

}  // namespace gaussfactor::gauss
