// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "gaussfactor/cli.hpp"

namespace {

using gaussfactor::cli::DetectorOptions;
using gaussfactor::cli::OutputRecord;

enum class Format { Table, Csv, Json };

struct OutputOptions {
  Format format = Format::Table;
  bool format_given = false;
  std::string out_path;
};

void add_output_flags(CLI::App* sub, OutputOptions* out) {
  const std::map<std::string, Format> names{
      {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
  sub->add_option("--format", out->format, "output format (table, csv, json)")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case))
      ->each([out](const std::string&) { out->format_given = true; });
  sub->add_option("--out", out->out_path, "write the output to a file");
}

std::vector<std::uint64_t> parse_candidates(const std::string& csv) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      throw std::domain_error("invalid candidate list entry: " + item);
    }
    if (pos != item.size() || v == 0)
      throw std::domain_error("invalid candidate list entry: " + item);
    out.push_back(v);
  }
  return out;
}

int emit(const OutputRecord& rec, const OutputOptions& opt) {
  // --out without an explicit --format switches to the machine format
  Format format = opt.format;
  if (!opt.out_path.empty() && !opt.format_given) format = Format::Json;
  std::string text;
  switch (format) {
    case Format::Table: text = rec.to_table(); break;
    case Format::Csv: text = rec.to_csv(); break;
    case Format::Json: text = rec.to_json() + "\n"; break;
  }
  if (opt.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw std::domain_error("cannot open output file: " + opt.out_path);
  file << text;
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Factor detection from quadratic-phase autocorrelation signals"};
  app.require_subcommand(1);

  // gauss
  auto* gauss_cmd = app.add_subcommand(
      "gauss", "evaluate the quadratic Gauss sum G(a,b), directly or in closed form");
  std::int64_t gauss_a = 0;
  std::uint64_t gauss_b = 1;
  std::string method_name = "direct";
  OutputOptions gauss_out;
  gauss_cmd->add_option("--a", gauss_a, "numerator of the quadratic phase")->required();
  gauss_cmd->add_option("--b", gauss_b, "modulus of the quadratic phase")->required();
  gauss_cmd->add_option("--method", method_name, "direct, closed or both")
      ->check(CLI::IsMember({"direct", "closed", "both"}, CLI::ignore_case));
  add_output_flags(gauss_cmd, &gauss_out);

  // scan
  auto* scan_cmd = app.add_subcommand(
      "scan", "rotor autocorrelation scan over n = 1..N");
  std::uint64_t scan_n = 0;
  OutputOptions scan_out;
  scan_cmd->add_option("--n", scan_n, "number encoded in the rotor state")->required();
  add_output_flags(scan_cmd, &scan_out);

  // factor
  auto* factor_cmd = app.add_subcommand(
      "factor", "extract factors from the rotor scan or the wave-packet detector");
  std::uint64_t factor_n = 0;
  std::string mode_name = "rotor";
  DetectorOptions factor_opt;
  std::string factor_cands;
  OutputOptions factor_out;
  factor_cmd->add_option("--n", factor_n, "number to factorize")->required();
  factor_cmd->add_option("--mode", mode_name, "rotor or wavepacket")
      ->check(CLI::IsMember({"rotor", "wavepacket"}, CLI::ignore_case));
  factor_cmd->add_option("--dm", factor_opt.delta_m, "Gaussian width of the wave packet");
  factor_cmd->add_option("--window", factor_opt.half_window, "half-window around each candidate");
  factor_cmd->add_option("--samples", factor_opt.samples, "samples per trace (odd)");
  factor_cmd->add_option("--sym-tol", factor_opt.sym_tol, "lobe asymmetry tolerance");
  factor_cmd->add_option("--candidates", factor_cands,
                         "comma-separated candidate integers (default: primes <= sqrt(N) plus cofactors)");
  add_output_flags(factor_cmd, &factor_out);

  // riddle
  auto* riddle_cmd = app.add_subcommand(
      "riddle", "|S|^2 traces around candidate integers, ready for plotting");
  std::uint64_t riddle_n = 0;
  DetectorOptions riddle_opt;
  std::string riddle_cands;
  OutputOptions riddle_out;
  riddle_cmd->add_option("--n", riddle_n, "encoded number")->required();
  riddle_cmd->add_option("--dm", riddle_opt.delta_m, "Gaussian width of the wave packet");
  riddle_cmd->add_option("--window", riddle_opt.half_window, "half-window around each candidate");
  riddle_cmd->add_option("--samples", riddle_opt.samples, "samples per trace (odd)");
  riddle_cmd->add_option("--candidates", riddle_cands,
                         "comma-separated candidate integers (default: primes <= sqrt(N) plus cofactors)");
  add_output_flags(riddle_cmd, &riddle_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (gauss_cmd->parsed()) {
    using gaussfactor::cli::GaussMethod;
    GaussMethod method = GaussMethod::Direct;
    if (method_name == "closed") method = GaussMethod::Closed;
    if (method_name == "both") method = GaussMethod::Both;
    return emit(gaussfactor::cli::cmd_gauss(gauss_a, gauss_b, method), gauss_out);
  }
  if (scan_cmd->parsed())
    return emit(gaussfactor::cli::cmd_scan(scan_n), scan_out);
  if (factor_cmd->parsed()) {
    using gaussfactor::cli::FactorMode;
    const FactorMode mode =
        mode_name == "wavepacket" ? FactorMode::Wavepacket : FactorMode::Rotor;
    factor_opt.candidates = parse_candidates(factor_cands);
    const OutputRecord rec = gaussfactor::cli::cmd_factor(factor_n, mode, factor_opt);
    emit(rec, factor_out);
    if (mode == FactorMode::Wavepacket && gaussfactor::cli::is_composite(factor_n)) {
      bool any = false;
      for (const auto& row : rec.rows)
        if (std::get<bool>(row[1])) any = true;
      if (!any) return 1;  // composite input, nothing flagged
    }
    return 0;
  }
  riddle_opt.candidates = parse_candidates(riddle_cands);
  return emit(gaussfactor::cli::cmd_riddle(riddle_n, riddle_opt), riddle_out);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
