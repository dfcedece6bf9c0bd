// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <future>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gaussfactor/numtheory.hpp"
#include "gaussfactor/rotor.hpp"

using namespace gaussfactor;
using namespace gaussfactor::rotor;

namespace {

// Naive phase sum straight from the definition.
Complex rotor_oracle(std::uint64_t number, std::int64_t n) {
  Complex acc{0.0, 0.0};
  for (std::uint64_t k = 0; k < number; ++k) {
    const double exponent = -2.0 * std::numbers::pi *
                            static_cast<double>(k * k) *
                            static_cast<double>(n) / static_cast<double>(number);
    acc += std::polar(1.0, exponent);
  }
  return acc / static_cast<double>(number);
}

bool close(const Complex& x, const Complex& y, double tol = 1e-9) {
  return std::abs(x.real() - y.real()) <= tol &&
         std::abs(x.imag() - y.imag()) <= tol;
}

}  // namespace

TEST_CASE("autocorrelation pinned values") {
  CHECK(autocorrelation(21, 21) == Complex{1.0, 0.0});  // full revival, exact
  CHECK(close(autocorrelation(21, 3), {0.0, -1.0 / std::sqrt(7.0)}));
  CHECK(close(autocorrelation(21, 3), rotor_oracle(21, 3)));
  CHECK(close(autocorrelation(15, 3), {1.0 / std::sqrt(5.0), 0.0}));
  CHECK(close(autocorrelation(15, 3), rotor_oracle(15, 3)));
  CHECK_THROWS_AS(autocorrelation(0, 1), std::domain_error);
}

TEST_CASE("autocorrelation_continuous pinned values") {
  CHECK(close(autocorrelation_continuous(5, 0.0), {1.0, 0.0}));
  CHECK(close(autocorrelation_continuous(5, 1.0), {1.0, 0.0}));
  CHECK(close(autocorrelation_continuous(21, 3.0 / 21.0), autocorrelation(21, 3)));
  for (std::uint64_t number = 2; number <= 40; ++number)
    for (std::int64_t n = 0; n <= static_cast<std::int64_t>(number); ++n)
      CHECK(close(autocorrelation_continuous(
                      number, static_cast<double>(n) / static_cast<double>(number)),
                  autocorrelation(number, n), 1e-10));
  CHECK_THROWS_AS(autocorrelation_continuous(0, 0.5), std::domain_error);
}

TEST_CASE("periodicity in the integer time index") {
  for (std::uint64_t number = 2; number <= 60; ++number)
    for (std::int64_t n = -static_cast<std::int64_t>(number);
         n <= 2 * static_cast<std::int64_t>(number); ++n)
      CHECK(close(autocorrelation(number, n + static_cast<std::int64_t>(number)),
                  autocorrelation(number, n)));
}

TEST_CASE("conjugate symmetry in the integer time index") {
  for (std::uint64_t number = 2; number <= 100; ++number)
    for (std::int64_t n = 0; n <= static_cast<std::int64_t>(number); ++n)
      CHECK(close(autocorrelation(number, static_cast<std::int64_t>(number) - n),
                  std::conj(autocorrelation(number, n)), 1e-10));
}

TEST_CASE("scan of N=21 puts factors in the imaginary part") {
  const auto rows = scan(21);
  REQUIRE(rows.size() == 21);
  const std::set<std::int64_t> expected{3, 6, 7, 9, 12, 14, 15, 18};
  for (const ScanRow& row : rows) {
    if (row.n == 21) {
      CHECK(row.classification == Classification::Unity);
      CHECK(row.re == 1.0);
      CHECK(row.im == 0.0);
      continue;
    }
    if (expected.count(row.n)) {
      CHECK(std::abs(row.im) > 0.3);
      CHECK(row.re == 0.0);  // exact: reduced modulus is 3 or 7, both in M3
      CHECK(row.classification == Classification::PurelyImaginary);
    } else {
      CHECK(row.im == 0.0);  // exact: reduced modulus 21 is in M1
      CHECK(row.classification == Classification::PurelyReal);
    }
  }
}

TEST_CASE("scan of N=15 puts only multiples of 3 in the real part") {
  const auto rows = scan(15);
  const std::set<std::int64_t> expected{3, 6, 9, 12};
  for (const ScanRow& row : rows) {
    if (row.n == 15) {
      CHECK(row.classification == Classification::Unity);
      continue;
    }
    if (expected.count(row.n)) {
      CHECK(std::abs(std::abs(row.re) - 1.0 / std::sqrt(5.0)) <= 1e-9);
      CHECK(row.im == 0.0);
      CHECK(row.classification == Classification::PurelyReal);
    } else {
      CHECK(row.re == 0.0);
      CHECK(row.classification == Classification::PurelyImaginary);
    }
  }
}

TEST_CASE("scan of N=9 moduli follow gcd") {
  for (const ScanRow& row : scan(9)) {
    if (row.n == 9) {
      CHECK(row.mod2 == doctest::Approx(1.0).epsilon(1e-12));
    } else if (row.n % 3 == 0) {
      CHECK(row.mod2 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    } else {
      CHECK(row.mod2 == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("scan of N=2 ends in unity") {
  const auto rows = scan(2);
  REQUIRE(rows.size() == 2);
  CHECK(close({rows[0].re, rows[0].im}, {0.0, 0.0}));
  CHECK(rows[1].classification == Classification::Unity);
  CHECK_THROWS_AS(scan(1), std::domain_error);
}

TEST_CASE("even moduli classify numerically, mixed values included") {
  // G(1,4) = (1-i)/2 carries both components
  const auto rows = scan(4);
  REQUIRE(rows.size() == 4);
  CHECK(close({rows[0].re, rows[0].im}, {0.5, -0.5}, 1e-10));
  CHECK(rows[0].classification == Classification::Mixed);
  CHECK(rows[1].classification == Classification::PurelyReal);  // value 0
  CHECK(rows[2].classification == Classification::Mixed);
  CHECK(rows[3].classification == Classification::Unity);
}

TEST_CASE("scan rows satisfy the generalized modulus law and class taxonomy") {
  for (std::uint64_t number = 3; number <= 201; number += 2) {
    for (const ScanRow& row : scan(number)) {
      CHECK(row.d == std::gcd(static_cast<std::uint64_t>(row.n), number));
      CHECK(std::abs(row.mod2 * static_cast<double>(number) -
                     static_cast<double>(row.d)) <= 1e-9);
      if (row.d == number) {
        CHECK(row.classification == Classification::Unity);
      } else {
        const auto cls = numtheory::residue_class(number / row.d).variant;
        CHECK(row.classification == (cls == numtheory::OddClass::M1
                                         ? Classification::PurelyReal
                                         : Classification::PurelyImaginary));
      }
    }
  }
}

TEST_CASE("extract_factors pinned reports") {
  SUBCASE("21: both factors flagged by the imaginary part") {
    const FactorReport r = extract_factors(21);
    CHECK(r.two_exponent == 0);
    CHECK(r.odd_factors ==
          std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 1}, {7, 1}});
    REQUIRE(r.evidence.size() == 2);
    CHECK(r.evidence[0].n == 3);
    CHECK(r.evidence[0].d == 3);
    CHECK(r.evidence[0].signal_part == SignalPart::ImaginaryPart);
    CHECK(r.evidence[1].n == 7);
    CHECK(r.evidence[1].d == 7);
    CHECK(r.evidence[1].signal_part == SignalPart::ImaginaryPart);
  }
  SUBCASE("15: real-part evidence for 3, imaginary-part for 5") {
    const FactorReport r = extract_factors(15);
    CHECK(r.odd_factors ==
          std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 1}, {5, 1}});
    REQUIRE(r.evidence.size() == 2);
    CHECK(r.evidence[0].n == 3);
    CHECK(r.evidence[0].signal_part == SignalPart::RealPart);  // reduced b = 5
    CHECK(r.evidence[1].n == 5);
    CHECK(r.evidence[1].signal_part == SignalPart::ImaginaryPart);  // reduced b = 3
  }
  SUBCASE("17: prime, no interior evidence") {
    const FactorReport r = extract_factors(17);
    CHECK(r.odd_factors ==
          std::vector<std::pair<std::uint64_t, std::uint32_t>>{{17, 1}});
    CHECK(r.evidence.empty());
  }
  SUBCASE("40: twos stripped, remaining 5 certified prime") {
    const FactorReport r = extract_factors(40);
    CHECK(r.two_exponent == 3);
    CHECK(r.odd_factors ==
          std::vector<std::pair<std::uint64_t, std::uint32_t>>{{5, 1}});
    CHECK(r.value() == 40);
  }
  SUBCASE("prime powers recurse correctly") {
    const FactorReport r9 = extract_factors(9);
    CHECK(r9.odd_factors ==
          std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 2}});
    REQUIRE(r9.evidence.size() == 1);
    CHECK(r9.evidence[0].n == 3);
    const FactorReport r729 = extract_factors(729);
    CHECK(r729.odd_factors ==
          std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 6}});
  }
  CHECK_THROWS_AS(extract_factors(1), std::domain_error);
  CHECK_THROWS_AS(extract_factors(0), std::domain_error);
}

TEST_CASE("extract_factors agrees with the trial-division oracle") {
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    const FactorReport r = extract_factors(n);
    const numtheory::Factorization expected = numtheory::brute_factor(n);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> got;
    if (r.two_exponent > 0) got.emplace_back(2, r.two_exponent);
    got.insert(got.end(), r.odd_factors.begin(), r.odd_factors.end());
    CHECK(got == expected.factors);
    CHECK(r.value() == n);
    for (const FactorEvidence& e : r.evidence) {
      CHECK(e.d > 1);
      CHECK(n % e.d == 0);
    }
  }
}

TEST_CASE("scan is reentrant across threads") {
  const auto serial = scan(999);
  auto worker = [] { return scan(999); };
  auto f1 = std::async(std::launch::async, worker);
  auto f2 = std::async(std::launch::async, worker);
  auto f3 = std::async(std::launch::async, worker);
  for (auto* f : {&f1, &f2, &f3}) {
    const auto rows = f->get();
    REQUIRE(rows.size() == serial.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].re == serial[i].re);
      CHECK(rows[i].im == serial[i].im);
      CHECK(rows[i].d == serial[i].d);
    }
  }
}
