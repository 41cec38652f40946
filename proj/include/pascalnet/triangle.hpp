#pragma once

// Rows of Pascal's triangle reduced modulo 2.
//
// Rows are 0-based here (row r holds C(r, 0..r) mod 2). The shift to 1-based
// vertex names happens in matrix.hpp.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pascalnet/error.hpp"

namespace pascalnet {

struct BitRow {
  std::size_t row_index = 0;
  std::vector<std::uint8_t> bits{1};

  std::size_t ones() const {
    std::size_t count = 0;
    for (auto b : bits) count += b;
    return count;
  }

  friend bool operator==(const BitRow&, const BitRow&) = default;
};

// Row r+1 from row r: each entry is the sum of the two entries above it,
// with missing neighbours read as zero, all taken mod 2.
inline BitRow next_row(const BitRow& row) {
  BitRow next;
  next.row_index = row.row_index + 1;
  next.bits.assign(row.bits.size() + 1, 0);
  for (std::size_t j = 0; j < next.bits.size(); ++j) {
    const unsigned left = j > 0 ? row.bits[j - 1] : 0u;
    const unsigned right = j < row.bits.size() ? row.bits[j] : 0u;
    next.bits[j] = static_cast<std::uint8_t>((left + right) % 2u);
  }
  return next;
}

inline BitRow triangle_row(std::size_t r, const Limits& limits = {}) {
  if (r > limits.max_order) {
    throw CapacityError("triangle row " + std::to_string(r) +
                        " exceeds maximum order " +
                        std::to_string(limits.max_order));
  }
  BitRow row;
  while (row.row_index < r) row = next_row(row);
  return row;
}

// Lucas' theorem at p = 2: C(r, j) is odd iff j's set bits are a subset of r's.
inline bool binomial_parity(std::uint64_t r, std::uint64_t j) {
  if (j > r) {
    throw DomainError("binomial_parity: column " + std::to_string(j) +
                      " exceeds row " + std::to_string(r));
  }
  return (j & r) == j;
}

// Number of odd entries in rows 0..m-1, i.e. the sum of 2^popcount(r).
// This equals the edge count of the Pascal graph of order m+1.
inline std::uint64_t odd_count_prefix(std::uint64_t m) {
  std::uint64_t total = 0;
  for (std::uint64_t r = 0; r < m; ++r) {
    total += std::uint64_t{1} << std::popcount(r);
  }
  return total;
}

}  // namespace pascalnet
