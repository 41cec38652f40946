#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "pascalnet/dnp.hpp"
#include "pascalnet/resilience.hpp"

using namespace pascalnet;

namespace {

// v = 2^a + 1 is universal in PG(n) iff 2^a + 1 <= n <= 2^(a+1) + 1: its row
// prefix is the all-ones triangle row 2^a - 1, and vertex j > v is adjacent
// iff bit a of j - 2 is set.
std::vector<Vertex> window_oracle(std::uint64_t n) {
  std::vector<Vertex> out;
  for (std::uint64_t p = 1; p + 1 <= n; p *= 2) {
    if (n <= 2 * p + 1) out.push_back(static_cast<Vertex>(p + 1));
  }
  return out;
}

}  // namespace

TEST(ClassifyCase, Examples) {
  EXPECT_EQ(classify_case(8), CaseLabel::Case1);
  EXPECT_EQ(classify_case(11), CaseLabel::Case2);
  EXPECT_EQ(classify_case(9), CaseLabel::CaseN);
  EXPECT_EQ(classify_case(3), CaseLabel::CaseN);
  EXPECT_EQ(classify_case(4), CaseLabel::Case1);
  EXPECT_EQ(classify_case(16), CaseLabel::Case1);
  EXPECT_THROW(classify_case(2), DomainError);
}

TEST(DnpFormula, Examples) {
  EXPECT_EQ(dnp_formula(8), (std::vector<Vertex>{5}));
  EXPECT_EQ(dnp_formula(17), (std::vector<Vertex>{9, 17}));
  EXPECT_EQ(dnp_formula(40), (std::vector<Vertex>{33}));
  EXPECT_EQ(dnp_formula(3), (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(dnp_formula(4), (std::vector<Vertex>{3}));
  EXPECT_THROW(dnp_formula(2), DomainError);
}

TEST(DnpFormula, PrintedCase2IndexOvershoots) {
  EXPECT_EQ(printed_case2_index(11), 17u);
  for (std::uint64_t n = 3; n <= 1024; ++n) {
    if (classify_case(n) == CaseLabel::Case2) {
      ASSERT_GT(printed_case2_index(n), n);
    }
  }
}

TEST(DnpBruteforce, Examples) {
  const auto g9 = pascal_graph(9);
  EXPECT_EQ(dnp_bruteforce(g9), (std::vector<Vertex>{5, 9}));
  EXPECT_EQ(g9.degree(5), 8u);
  EXPECT_EQ(g9.degree(9), 8u);
  EXPECT_EQ(dnp_bruteforce(pascal_graph(5)), (std::vector<Vertex>{3, 5}));
  EXPECT_EQ(dnp_bruteforce(pascal_graph(10)), (std::vector<Vertex>{9}));
  EXPECT_EQ(pascal_graph(10).degree(9), 9u);
  EXPECT_THROW(dnp_bruteforce(pascal_graph(2)), DomainError);
}

TEST(Dnp, FormulaOracleAndWindowAgreeUpTo1024) {
  for (std::uint64_t n = 3; n <= 1024; ++n) {
    const auto brute = dnp_bruteforce(pascal_graph(n));
    ASSERT_EQ(dnp_formula(n), brute) << n;
    ASSERT_EQ(window_oracle(n), brute) << n;
  }
}

TEST(Dnp, StructuralInvariants) {
  for (std::uint64_t n = 3; n <= 600; ++n) {
    const auto indices = dnp_formula(n);
    ASSERT_EQ(indices.size() == 2, classify_case(n) == CaseLabel::CaseN) << n;
    ASSERT_TRUE(indices.size() == 1 || indices.size() == 2);
    for (Vertex i : indices) {
      ASSERT_NE(i, 1u);
      ASSERT_TRUE(std::has_single_bit(i - 1u)) << i;
      ASSERT_LE(i, n);
      ASSERT_LE(n, 2 * (i - 1) + 1) << n << " " << i;
    }
  }
}

TEST(Dnp, SurviveLossOfV1) {
  for (std::uint64_t n = 4; n <= 200; ++n) {
    const Vertex gone[] = {1};
    const auto hubs = live_hubs(pascal_graph(n).without(gone));
    for (Vertex i : dnp_formula(n)) {
      ASSERT_TRUE(std::binary_search(hubs.begin(), hubs.end(), i)) << n << " " << i;
    }
  }
}

TEST(Table1, DegreeColumn) {
  const auto reports = table1_report(kPublishedOrders);
  std::vector<std::uint32_t> degrees;
  for (const auto& r : reports) degrees.push_back(r.degree);
  EXPECT_EQ(degrees, (std::vector<std::uint32_t>{7, 8, 9, 10, 13, 14, 15, 16, 31, 32, 33, 39}));
}

TEST(Table1, RowsMatchPublishedExceptKnownTypos) {
  for (const auto& r : table1_report(kPublishedOrders)) {
    EXPECT_TRUE(r.agrees) << r.n;
    const auto row = published_row(r.n);
    ASSERT_TRUE(row.has_value());
    std::vector<Vertex> printed;
    for (Vertex v : row->dnp_column)
      if (v) printed.push_back(v);
    EXPECT_EQ(r.brute_indices, printed) << r.n;
    if (r.n == 16 || r.n == 32) {
      EXPECT_FALSE(r.paper_discrepancy.empty()) << r.n;
    } else {
      EXPECT_TRUE(r.paper_discrepancy.empty()) << r.n << ": " << r.paper_discrepancy;
    }
  }
}

TEST(Table1, KnownTypos) {
  const auto r16 = dnp_report(16);
  EXPECT_EQ(r16.label, CaseLabel::Case1);
  EXPECT_EQ(r16.brute_indices, (std::vector<Vertex>{9}));
  EXPECT_NE(r16.paper_discrepancy.find("case label printed as Case N"), std::string::npos);

  const auto r32 = dnp_report(32);
  EXPECT_EQ(r32.brute_indices, (std::vector<Vertex>{17}));
  EXPECT_NE(r32.paper_discrepancy.find("index column printed as 19"), std::string::npos);

  const auto r33 = dnp_report(33);
  EXPECT_EQ(r33.formula_indices, (std::vector<Vertex>{17, 33}));
  EXPECT_TRUE(r33.agrees);
}

TEST(Table1, OrdersOutsideThePublishedTableHaveNoDiscrepancy) {
  const auto r = dnp_report(100);
  EXPECT_TRUE(r.paper_discrepancy.empty());
  EXPECT_EQ(r.degree, 99u);
}
