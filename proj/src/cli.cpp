// SPDX-License-Identifier: Apache-2.0

#include "gaussfactor/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gaussfactor::cli {

namespace {

std::string format_double(double x) {
  if (!std::isfinite(x))
    throw std::logic_error("format_double: non-finite value in output record");
  if (x == 0.0) x = 0.0;  // fold -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string json_value(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) return format_double(*d);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return '"' + json_escape(std::get<std::string>(v)) + '"';
}

std::string csv_cell(const Value& v) {
  const std::string s = format_value(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

Value value_from_json(const nlohmann::ordered_json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer() || j.is_number_unsigned())
    return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw std::domain_error("OutputRecord: unsupported JSON value type");
}

std::string join_u64(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string format_value(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) return format_double(*d);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<std::string>(v);
}

std::string OutputRecord::to_json() const {
  std::string out = "{\"schema_version\":\"";
  out += json_escape(schema_version);
  out += "\",\"command\":\"";
  out += json_escape(command);
  out += "\",\"parameters\":{";
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (i) out += ',';
    out += '"' + json_escape(parameters[i].first) + "\":";
    out += json_value(parameters[i].second);
  }
  out += "},\"rows\":[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += ',';
    out += '{';
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ',';
      out += '"' + json_escape(columns[c]) + "\":";
      out += json_value(rows[r][c]);
    }
    out += '}';
  }
  out += "]}";
  return out;
}

std::string OutputRecord::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += csv_cell(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string OutputRecord::to_table() const {
  std::ostringstream out;
  out << "command: " << command << '\n';
  for (const auto& [key, value] : parameters)
    out << "  " << key << " = " << format_value(value) << '\n';
  if (columns.empty()) return out.str();

  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<std::string> line;
    line.reserve(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(format_value(row[c]));
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  out << '\n';
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out << "  ";
    out << columns[c] << std::string(width[c] - columns[c].size(), ' ');
  }
  out << '\n';
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << "  ";
      out << line[c] << std::string(width[c] - line[c].size(), ' ');
    }
    out << '\n';
  }
  return out.str();
}

OutputRecord OutputRecord::from_json(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  OutputRecord rec;
  rec.schema_version = j.at("schema_version").get<std::string>();
  rec.command = j.at("command").get<std::string>();
  for (const auto& [key, value] : j.at("parameters").items())
    rec.parameters.emplace_back(key, value_from_json(value));
  for (const auto& row : j.at("rows")) {
    if (rec.columns.empty())
      for (const auto& [key, value] : row.items()) rec.columns.push_back(key);
    std::vector<Value> line;
    line.reserve(rec.columns.size());
    for (const auto& col : rec.columns) line.push_back(value_from_json(row.at(col)));
    rec.rows.push_back(std::move(line));
  }
  return rec;
}

const char* to_string(GaussMethod m) {
  switch (m) {
    case GaussMethod::Direct: return "direct";
    case GaussMethod::Closed: return "closed";
    case GaussMethod::Both: return "both";
  }
  return "?";
}

const char* to_string(FactorMode m) {
  return m == FactorMode::Rotor ? "rotor" : "wavepacket";
}

OutputRecord cmd_gauss(std::int64_t a, std::uint64_t b, GaussMethod method) {
  OutputRecord rec;
  rec.command = "gauss";
  rec.parameters = {{"a", a},
                    {"b", static_cast<std::int64_t>(b)},
                    {"method", std::string(to_string(method))}};
  const bool with_closed = method != GaussMethod::Direct;
  rec.columns = {"method", "re", "im", "mod2"};
  if (with_closed) {
    rec.columns.push_back("coefficient");
    rec.columns.push_back("reduced_b");
  }

  Complex direct{};
  if (method != GaussMethod::Closed) {
    direct = gauss::gauss_direct(a, b);
    std::vector<Value> row{std::string("direct"), direct.real(), direct.imag(),
                           std::norm(direct)};
    if (with_closed) {
      row.emplace_back(std::string());
      row.emplace_back(std::string());
    }
    rec.rows.push_back(std::move(row));
  }
  if (with_closed) {
    const gauss::GaussValue v = gauss::gauss_closed(a, b);
    const Complex closed = v.to_complex();
    rec.rows.push_back({std::string("closed"), closed.real(), closed.imag(),
                        std::norm(closed),
                        std::string(gauss::to_string(v.coefficient)),
                        static_cast<std::int64_t>(v.denominator_b)});
    if (method == GaussMethod::Both) {
      rec.rows.push_back({std::string("difference"), direct.real() - closed.real(),
                          direct.imag() - closed.imag(),
                          std::norm(direct) - std::norm(closed), std::string(),
                          std::string()});
    }
  }
  return rec;
}

OutputRecord cmd_scan(std::uint64_t number) {
  const std::vector<rotor::ScanRow> rows = rotor::scan(number);
  OutputRecord rec;
  rec.command = "scan";
  rec.parameters = {{"n", static_cast<std::int64_t>(number)}};
  rec.columns = {"n", "re", "im", "mod2", "gcd", "class"};
  rec.rows.reserve(rows.size());
  for (const rotor::ScanRow& row : rows)
    rec.rows.push_back({row.n, row.re, row.im, row.mod2,
                        static_cast<std::int64_t>(row.d),
                        std::string(gauss::to_string(row.classification))});
  return rec;
}

std::vector<std::uint64_t> default_candidates(std::uint64_t number) {
  std::vector<std::uint64_t> out;
  const std::uint64_t root = numtheory::detail::isqrt(number);
  for (std::uint64_t p = 2; p <= root; ++p) {
    bool prime = p > 1;
    for (std::uint64_t q = 2; q * q <= p && prime; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    out.push_back(p);
    if (number % p == 0) out.push_back(number / p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_composite(std::uint64_t number) {
  if (number < 4) return false;
  for (std::uint64_t p = 2; p * p <= number; ++p)
    if (number % p == 0) return true;
  return false;
}

OutputRecord cmd_factor(std::uint64_t number, FactorMode mode,
                        const DetectorOptions& opt) {
  OutputRecord rec;
  rec.command = "factor";
  rec.parameters = {{"n", static_cast<std::int64_t>(number)},
                    {"mode", std::string(to_string(mode))}};

  if (mode == FactorMode::Rotor) {
    const rotor::FactorReport report = rotor::extract_factors(number);
    rec.columns = {"prime", "exponent", "evidence_n", "evidence_d", "signal"};
    if (report.two_exponent > 0)
      rec.rows.push_back({std::int64_t{2},
                          static_cast<std::int64_t>(report.two_exponent),
                          std::string(), std::string(), std::string()});
    for (const auto& [p, e] : report.odd_factors) {
      const auto ev = std::find_if(
          report.evidence.begin(), report.evidence.end(),
          [p = p](const rotor::FactorEvidence& fe) { return fe.d % p == 0; });
      if (ev == report.evidence.end()) {
        rec.rows.push_back({static_cast<std::int64_t>(p),
                            static_cast<std::int64_t>(e), std::string(),
                            std::string(), std::string()});
      } else {
        rec.rows.push_back({static_cast<std::int64_t>(p),
                            static_cast<std::int64_t>(e), ev->n,
                            static_cast<std::int64_t>(ev->d),
                            std::string(rotor::to_string(ev->signal_part))});
      }
    }
    std::string summary;
    if (report.two_exponent == 0 && report.odd_factors.size() == 1 &&
        report.odd_factors.front().second == 1) {
      summary = std::to_string(number) + " is prime";
    } else {
      summary = std::to_string(number) + " =";
      bool first = true;
      const auto append = [&](std::uint64_t p, std::uint32_t e) {
        summary += first ? " " : " * ";
        first = false;
        summary += std::to_string(p);
        if (e > 1) summary += '^' + std::to_string(e);
      };
      if (report.two_exponent > 0) append(2, report.two_exponent);
      for (const auto& [p, e] : report.odd_factors) append(p, e);
    }
    rec.parameters.emplace_back("summary", summary);
    return rec;
  }

  const std::vector<std::uint64_t> candidates =
      opt.candidates.empty() ? default_candidates(number) : opt.candidates;
  rec.parameters.emplace_back("dm", opt.delta_m);
  rec.parameters.emplace_back("window", opt.half_window);
  rec.parameters.emplace_back("samples", static_cast<std::int64_t>(opt.samples));
  rec.parameters.emplace_back("sym_tol", opt.sym_tol);
  rec.parameters.emplace_back("candidates", join_u64(candidates));
  rec.columns = {"ell", "flagged", "peak_score", "asymmetry"};
  std::vector<std::uint64_t> flagged;
  if (!candidates.empty()) {
    const auto spec = wavepacket::WavePacketSpec::make(number, opt.delta_m);
    for (const wavepacket::CandidateVerdict& v :
         wavepacket::detect_factor_candidates(spec, candidates, opt.half_window,
                                              opt.samples, opt.sym_tol)) {
      rec.rows.push_back({static_cast<std::int64_t>(v.ell), v.flagged,
                          v.peak_score, v.asymmetry});
      if (v.flagged) flagged.push_back(v.ell);
    }
  }
  rec.parameters.emplace_back(
      "summary", flagged.empty() ? std::string("no candidates flagged")
                                 : "flagged: " + join_u64(flagged));
  return rec;
}

OutputRecord cmd_riddle(std::uint64_t number, const DetectorOptions& opt) {
  const std::vector<std::uint64_t> candidates =
      opt.candidates.empty() ? default_candidates(number) : opt.candidates;
  OutputRecord rec;
  rec.command = "riddle";
  rec.parameters = {{"n", static_cast<std::int64_t>(number)},
                    {"dm", opt.delta_m},
                    {"window", opt.half_window},
                    {"samples", static_cast<std::int64_t>(opt.samples)},
                    {"candidates", join_u64(candidates)}};
  rec.columns = {"ell", "dtau", "mod2"};
  const auto spec = wavepacket::WavePacketSpec::make(number, opt.delta_m);
  for (const std::uint64_t ell : candidates) {
    const wavepacket::RiddleTrace trace =
        wavepacket::riddle_trace(spec, ell, opt.half_window, opt.samples);
    for (std::size_t i = 0; i < trace.offsets.size(); ++i)
      rec.rows.push_back({static_cast<std::int64_t>(ell), trace.offsets[i],
                          trace.values[i]});
  }
  return rec;
}

}  // namespace gaussfactor::cli
