// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gaussfactor/rotor.hpp"
#include "gaussfactor/wavepacket.hpp"

namespace gaussfactor::cli {

inline constexpr const char* kSchemaVersion = "1";

using Value = std::variant<std::int64_t, double, std::string, bool>;

/// Fixed 12-significant-digit rendering; the same formatter feeds JSON, CSV
/// and the table view so a re-parsed document re-serializes byte-identically.
std::string format_value(const Value& v);

/// Uniform machine-readable result of one CLI invocation.
struct OutputRecord {
  std::string schema_version = kSchemaVersion;
  std::string command;
  std::vector<std::pair<std::string, Value>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;

  std::string to_json() const;  // single object, stable key order, compact
  std::string to_csv() const;   // header row + data rows, \n line endings
  std::string to_table() const; // human-readable view

  static OutputRecord from_json(const std::string& text);
};

enum class GaussMethod { Direct, Closed, Both };
enum class FactorMode { Rotor, Wavepacket };

struct DetectorOptions {
  double delta_m = wavepacket::kDefaultDeltaM;
  double half_window = wavepacket::kDefaultHalfWindow;
  std::uint32_t samples = wavepacket::kDefaultSamples;
  double sym_tol = wavepacket::kDefaultSymTol;
  std::vector<std::uint64_t> candidates;  // empty: primes <= sqrt(N) plus cofactors
};

OutputRecord cmd_gauss(std::int64_t a, std::uint64_t b, GaussMethod method);
OutputRecord cmd_scan(std::uint64_t number);
OutputRecord cmd_factor(std::uint64_t number, FactorMode mode,
                        const DetectorOptions& opt = {});
OutputRecord cmd_riddle(std::uint64_t number, const DetectorOptions& opt = {});

/// Primes up to floor(sqrt(number)) plus, for the ones dividing number,
/// their cofactors number/p.
std::vector<std::uint64_t> default_candidates(std::uint64_t number);

bool is_composite(std::uint64_t number);

const char* to_string(GaussMethod m);
const char* to_string(FactorMode m);

}  // namespace gaussfactor::cli
