#pragma once

// Text, JSON, CSV and DOT renderings. Every writer is locale-independent and
// deterministic so outputs can be compared byte for byte.

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pascalnet/dnp.hpp"
#include "pascalnet/graph.hpp"
#include "pascalnet/matrix.hpp"
#include "pascalnet/properties.hpp"
#include "pascalnet/resilience.hpp"

namespace pascalnet::io {

using nlohmann::json;

// ---- Pascal matrix ---------------------------------------------------------

// One row per line, entries separated by single spaces.
inline std::string matrix_text(const PascalMatrix& pm) {
  std::string out;
  out.reserve(pm.order() * pm.order() * 2);
  for (std::size_t i = 1; i <= pm.order(); ++i) {
    for (std::size_t j = 1; j <= pm.order(); ++j) {
      if (j > 1) out += ' ';
      out += pm.at(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

inline json matrix_json(const PascalMatrix& pm) {
  json rows = json::array();
  for (const auto& row : pm.rows()) {
    json r = json::array();
    for (auto b : row) r.push_back(static_cast<int>(b));
    rows.push_back(std::move(r));
  }
  return {{"order", pm.order()}, {"rows", std::move(rows)}};
}

inline PascalMatrix parse_matrix_text(const std::string& text, const Limits& limits = {}) {
  std::vector<std::vector<std::uint8_t>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<std::uint8_t> row;
    std::istringstream cells(line);
    std::string cell;
    while (cells >> cell) {
      if (cell != "0" && cell != "1") throw DomainError("matrix entry '" + cell + "' is not 0/1");
      row.push_back(cell == "1" ? 1 : 0);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DomainError("empty matrix text");
  return PascalMatrix::from_rows(rows, limits);
}

inline PascalMatrix parse_matrix_json(const json& j, const Limits& limits = {}) {
  const auto order = j.at("order").get<std::size_t>();
  auto rows = j.at("rows").get<std::vector<std::vector<std::uint8_t>>>();
  if (rows.size() != order) throw DomainError("row count does not match order");
  return PascalMatrix::from_rows(rows, limits);
}

// ---- Graph export ----------------------------------------------------------

inline std::string graph_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.alive(v)) out << "  v" << v << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  v" << e.u << " -- v" << e.v << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string graph_edge_csv(const Graph& g) {
  std::ostringstream out;
  out << "u,v\n";
  for (const Edge& e : g.edges()) out << e.u << ',' << e.v << '\n';
  return out.str();
}

// ---- Property reports ------------------------------------------------------

inline json property_json(const PropertyReport& r) {
  return {{"property_id", r.property_id},
          {"n", r.n},
          {"passed", r.passed},
          {"witness", r.witness ? json(*r.witness) : json(nullptr)},
          {"paper_discrepancy", r.paper_discrepancy}};
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline const char* kPropertyCsvHeader = "n,property,passed,paper_discrepancy,witness\n";

inline std::string property_csv_row(const PropertyReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.property_id << ',' << (r.passed ? "true" : "false") << ','
      << (r.paper_discrepancy ? "true" : "false") << ',' << csv_quote(r.witness.value_or(""))
      << '\n';
  return out.str();
}

inline std::string property_text_row(const PropertyReport& r) {
  std::ostringstream out;
  const char* status = r.passed ? "PASS" : (r.paper_discrepancy ? "KNOWN-FALSE" : "FAIL");
  out << std::left << std::setw(6) << r.n << std::setw(15) << r.property_id << std::setw(12)
      << status;
  if (r.witness) out << *r.witness;
  std::string line = out.str();
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line + '\n';
}

// ---- DNP reports -----------------------------------------------------------

inline json dnp_json(const DnpReport& r) {
  return {{"n", r.n},
          {"case", std::string(to_string(r.label))},
          {"formula_indices", r.formula_indices},
          {"brute_indices", r.brute_indices},
          {"degree", r.degree},
          {"agrees", r.agrees},
          {"paper_discrepancy",
           r.paper_discrepancy.empty() ? json(nullptr) : json(r.paper_discrepancy)}};
}

inline const char* kDnpCsvHeader =
    "n,case,formula_indices,brute_indices,degree,agrees,paper_discrepancy\n";

// Index sets inside one CSV cell are separated by ';'.
inline std::string dnp_csv_row(const DnpReport& r) {
  std::ostringstream out;
  out << r.n << ',' << to_string(r.label) << ',' << dnp_detail::join(r.formula_indices, ";")
      << ',' << dnp_detail::join(r.brute_indices, ";") << ',' << r.degree << ','
      << (r.agrees ? "true" : "false") << ',' << csv_quote(r.paper_discrepancy) << '\n';
  return out.str();
}

inline std::string dnp_list(const std::vector<Vertex>& v, bool prefixed) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    if (prefixed) out += "V_";
    out += std::to_string(v[i]);
  }
  return out;
}

// Fixed-width table in the published column order plus agreement and
// discrepancy columns.
inline std::string dnp_table_text(const std::vector<DnpReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(7) << "PG(n)" << std::setw(8) << "Case" << std::setw(9) << "i"
      << std::setw(12) << "DNP" << std::setw(8) << "Degree" << std::setw(8) << "Agrees"
      << "Discrepancy\n";
  bool any_discrepancy = false;
  for (const auto& r : reports) {
    std::ostringstream row;
    row << std::left << std::setw(7) << r.n << std::setw(8) << display_name(r.label)
        << std::setw(9) << dnp_list(r.formula_indices, false) << std::setw(12)
        << dnp_list(r.brute_indices, true) << std::setw(8) << r.degree << std::setw(8)
        << (r.agrees ? "yes" : "NO") << r.paper_discrepancy;
    std::string line = row.str();
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
    any_discrepancy = any_discrepancy || !r.paper_discrepancy.empty();
  }
  if (any_discrepancy) out << "\nNote: " << kCaseReconciliationNote << '\n';
  return out.str();
}

// ---- Resilience ------------------------------------------------------------

inline std::string hops_text(Hops h) { return h == kUnreachable ? "inf" : std::to_string(h); }

inline json resilience_json(const ResilienceReport& r) {
  json histogram = json::object();
  for (const auto& [hops, count] : r.hop_histogram) histogram[std::to_string(hops)] = count;
  return {{"trial", r.trial},
          {"failed", r.failed},
          {"connected", r.connected},
          {"diameter", r.diameter_after == kUnreachable ? json(nullptr) : json(r.diameter_after)},
          {"avg_hops_num", r.avg_hops.num},
          {"avg_hops_den", r.avg_hops.den},
          {"hop_histogram", std::move(histogram)},
          {"hub_used", r.hub_used ? json(*r.hub_used) : json(nullptr)}};
}

inline const char* kResilienceCsvHeader =
    "trial,failed,connected,diameter,avg_hops_num,avg_hops_den,hub_used\n";

// Failed vertices inside one CSV cell are separated by ';'.
inline std::string resilience_csv_row(const ResilienceReport& r) {
  std::ostringstream out;
  out << r.trial << ',' << dnp_detail::join(r.failed, ";") << ','
      << (r.connected ? "true" : "false") << ',' << hops_text(r.diameter_after) << ','
      << r.avg_hops.num << ',' << r.avg_hops.den << ','
      << (r.hub_used ? std::to_string(*r.hub_used) : "") << '\n';
  return out.str();
}

inline std::string resilience_text_row(const ResilienceReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(7) << r.trial << std::setw(16)
      << (r.failed.empty() ? std::string("-") : dnp_detail::join(r.failed, ",")) << std::setw(11)
      << (r.connected ? "yes" : "no") << std::setw(10) << hops_text(r.diameter_after)
      << std::setw(12) << (std::to_string(r.avg_hops.num) + "/" + std::to_string(r.avg_hops.den))
      << (r.hub_used ? "v" + std::to_string(*r.hub_used) : std::string("-"));
  return out.str() + '\n';
}

inline FailureScenario scenario_from_json(const json& j) {
  FailureScenario s;
  s.n = j.at("n").get<std::uint32_t>();
  s.trials = j.value("trials", std::uint32_t{1});
  s.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("forced_failed") && !j.at("forced_failed").is_null()) {
    s.forced_failed = j.at("forced_failed").get<std::vector<Vertex>>();
  }
  s.failures = j.value("failures", static_cast<std::uint32_t>(s.forced_failed.size()));
  validate(s);
  return s;
}

}  // namespace pascalnet::io
