#pragma once

// Dependable nodes: vertices other than v1 that are adjacent to every other
// vertex of PG(n). Three routes are provided: a closed-form index formula
// selected by the shape of n, an exhaustive degree scan, and the comparison
// of both against the published DNP table.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pascalnet/error.hpp"
#include "pascalnet/graph.hpp"

namespace pascalnet {

enum class CaseLabel { Case1, Case2, CaseN };

inline std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Case1: return "Case1";
    case CaseLabel::Case2: return "Case2";
    case CaseLabel::CaseN: return "CaseN";
  }
  return "?";
}

// "Case 1" style, as printed in the published table.
inline std::string_view display_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::Case1: return "Case 1";
    case CaseLabel::Case2: return "Case 2";
    case CaseLabel::CaseN: return "Case N";
  }
  return "?";
}

inline constexpr std::string_view kCaseReconciliationNote =
    "Case 1 and Case 2 both give the single index 2^(ceil(log2 n)-1)+1. The printed "
    "Case 2 formula 2^ceil(log2 n)+1 exceeds n; 2^floor(log2 n)+1 is used instead, "
    "which is the same value. Case 1/Case 2 labels are therefore interchangeable "
    "(rows 10 and 14 print Case 1); only a Case N label changes the result.";

namespace dnp_detail {

inline void require_min_order(std::uint64_t n) {
  if (n < 3) {
    throw DomainError("dependable nodes need n >= 3, got " + std::to_string(n));
  }
}

inline unsigned floor_log2(std::uint64_t n) { return static_cast<unsigned>(std::bit_width(n) - 1); }
inline unsigned ceil_log2(std::uint64_t n) { return static_cast<unsigned>(std::bit_width(n - 1)); }
inline std::uint64_t pow2(unsigned k) { return std::uint64_t{1} << k; }

}  // namespace dnp_detail

// CaseN when n = 2^m + 1, Case1 when n is a power of two, Case2 otherwise.
inline CaseLabel classify_case(std::uint64_t n) {
  dnp_detail::require_min_order(n);
  if (std::has_single_bit(n - 1)) return CaseLabel::CaseN;
  if (std::has_single_bit(n)) return CaseLabel::Case1;
  return CaseLabel::Case2;
}

inline std::vector<Vertex> dnp_formula(std::uint64_t n) {
  using namespace dnp_detail;
  switch (classify_case(n)) {
    case CaseLabel::CaseN: {
      const unsigned m = floor_log2(n);  // n = 2^m + 1
      return {static_cast<Vertex>(pow2(m - 1) + 1), static_cast<Vertex>(pow2(m) + 1)};
    }
    case CaseLabel::Case1:
      return {static_cast<Vertex>(pow2(floor_log2(n) - 1) + 1)};
    case CaseLabel::Case2:
      return {static_cast<Vertex>(pow2(floor_log2(n)) + 1)};
  }
  return {};
}

// The Case 2 index exactly as printed, 2^ceil(log2 n) + 1. Always exceeds n.
inline std::uint64_t printed_case2_index(std::uint64_t n) {
  dnp_detail::require_min_order(n);
  return dnp_detail::pow2(dnp_detail::ceil_log2(n)) + 1;
}

// Every vertex other than v1 whose degree is order - 1.
inline std::vector<Vertex> dnp_bruteforce(const Graph& g) {
  dnp_detail::require_min_order(g.order());
  std::vector<Vertex> out;
  for (Vertex v = 2; v <= g.order(); ++v) {
    if (g.degree(v) + 1 == g.order()) out.push_back(v);
  }
  return out;
}

// One row of the published table, transcribed as printed.
struct PublishedRow {
  std::uint32_t n;
  std::string_view case_label;
  std::array<Vertex, 2> index_column;  // 0 = blank
  std::array<Vertex, 2> dnp_column;
  std::uint32_t degree;
};

inline constexpr std::array<PublishedRow, 12> kPublishedTable = {{
    {8, "Case 1", {5, 0}, {5, 0}, 7},
    {9, "Case N", {5, 9}, {5, 9}, 8},
    {10, "Case 1", {9, 0}, {9, 0}, 9},
    {11, "Case 2", {9, 0}, {9, 0}, 10},
    {14, "Case 1", {9, 0}, {9, 0}, 13},
    {15, "Case 2", {9, 0}, {9, 0}, 14},
    {16, "Case N", {9, 0}, {9, 0}, 15},
    {17, "Case N", {9, 17}, {9, 17}, 16},
    {32, "Case 1", {19, 0}, {17, 0}, 31},
    {33, "Case N", {17, 33}, {17, 33}, 32},
    {34, "Case 2", {33, 0}, {33, 0}, 33},
    {40, "Case 2", {33, 0}, {33, 0}, 39},
}};

inline constexpr std::array<std::uint32_t, 12> kPublishedOrders = {8,  9,  10, 11, 14, 15,
                                                                  16, 17, 32, 33, 34, 40};

inline std::optional<PublishedRow> published_row(std::uint64_t n) {
  for (const auto& row : kPublishedTable) {
    if (row.n == n) return row;
  }
  return std::nullopt;
}

struct DnpReport {
  std::uint32_t n = 0;
  CaseLabel label = CaseLabel::Case1;
  std::vector<Vertex> formula_indices;
  std::vector<Vertex> brute_indices;
  std::uint32_t degree = 0;
  bool agrees = false;
  // Empty unless the published row for n contradicts the computed one.
  std::string paper_discrepancy;
};

namespace dnp_detail {

inline std::vector<Vertex> nonzero(std::array<Vertex, 2> column) {
  std::vector<Vertex> out;
  for (Vertex v : column) {
    if (v != 0) out.push_back(v);
  }
  return out;
}

inline std::string join(std::span<const Vertex> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// Case 1 and Case 2 share a formula, so only a Case N mismatch changes the
// answer and is reported.
inline std::string describe_discrepancy(const DnpReport& report, const PublishedRow& row) {
  std::vector<std::string> notes;
  const bool printed_case_n = row.case_label == display_name(CaseLabel::CaseN);
  if (printed_case_n != (report.label == CaseLabel::CaseN)) {
    notes.push_back("case label printed as " + std::string(row.case_label) + ", computed " +
                    std::string(display_name(report.label)));
  }
  const auto index_column = nonzero(row.index_column);
  if (index_column != report.brute_indices) {
    notes.push_back("index column printed as " + join(index_column, ", ") + ", computed " +
                    join(report.brute_indices, ", "));
  }
  const auto dnp_column = nonzero(row.dnp_column);
  if (dnp_column != report.brute_indices) {
    notes.push_back("DNP column printed as " + join(dnp_column, ", ") + ", computed " +
                    join(report.brute_indices, ", "));
  }
  if (row.degree != report.degree) {
    notes.push_back("degree printed as " + std::to_string(row.degree) + ", computed " +
                    std::to_string(report.degree));
  }
  std::string out;
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i) out += "; ";
    out += notes[i];
  }
  return out;
}

}  // namespace dnp_detail

inline DnpReport dnp_report(std::uint64_t n, const Limits& limits = {}) {
  dnp_detail::require_min_order(n);
  const Graph g = pascal_graph(n, limits);
  DnpReport report;
  report.n = static_cast<std::uint32_t>(n);
  report.label = classify_case(n);
  report.formula_indices = dnp_formula(n);
  report.brute_indices = dnp_bruteforce(g);
  report.degree = report.brute_indices.empty()
                      ? 0
                      : static_cast<std::uint32_t>(g.degree(report.brute_indices.front()));
  report.agrees = report.formula_indices == report.brute_indices;
  if (auto row = published_row(n)) {
    report.paper_discrepancy = dnp_detail::describe_discrepancy(report, *row);
  }
  return report;
}

inline std::vector<DnpReport> table1_report(std::span<const std::uint32_t> orders,
                                            const Limits& limits = {}) {
  std::vector<DnpReport> out;
  out.reserve(orders.size());
  for (auto n : orders) out.push_back(dnp_report(n, limits));
  return out;
}

}  // namespace pascalnet
