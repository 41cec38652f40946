#pragma once

// The Pascal matrix PM(n): an n x n symmetric 0/1 matrix with zero diagonal
// whose strictly lower triangle is the first n-1 rows of Pascal's triangle
// mod 2. Vertex k >= 2 reads triangle row k-2 in columns 1..k-1.
//
// All public indices are 1-based.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "pascalnet/error.hpp"
#include "pascalnet/triangle.hpp"

namespace pascalnet {

using BigInt = boost::multiprecision::cpp_int;

class PascalMatrix {
 public:
  std::size_t order() const { return order_; }

  bool at(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    return get(i - 1, j - 1);
  }

  // Row i (1-based) as a plain 0/1 vector.
  std::vector<std::uint8_t> row(std::size_t i) const {
    check_index(i);
    std::vector<std::uint8_t> out(order_);
    for (std::size_t j = 0; j < order_; ++j) out[j] = get(i - 1, j) ? 1 : 0;
    return out;
  }

  std::vector<std::vector<std::uint8_t>> rows() const {
    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(order_);
    for (std::size_t i = 1; i <= order_; ++i) out.push_back(row(i));
    return out;
  }

  // Builds a matrix from explicit rows and rejects anything that is not
  // exactly PM(rows.size()).
  static PascalMatrix from_rows(const std::vector<std::vector<std::uint8_t>>& rows,
                                const Limits& limits = {});

  friend bool operator==(const PascalMatrix& a, const PascalMatrix& b) {
    return a.order_ == b.order_ && a.words_ == b.words_;
  }

  friend PascalMatrix generate(std::size_t n, const Limits& limits);
  friend PascalMatrix leading_submatrix(const PascalMatrix& pm, std::size_t k);

 private:
  explicit PascalMatrix(std::size_t order)
      : order_(order),
        stride_((order + 63) / 64),
        words_(order * ((order + 63) / 64), 0) {}

  bool get(std::size_t i, std::size_t j) const {
    return (words_[i * stride_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) {
    words_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  void check_index(std::size_t i) const {
    if (i < 1 || i > order_) {
      throw DomainError("matrix index " + std::to_string(i) +
                        " outside 1.." + std::to_string(order_));
    }
  }

  std::size_t order_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

inline PascalMatrix generate(std::size_t n, const Limits& limits = {}) {
  if (n == 0) throw DomainError("Pascal matrix order must be at least 1");
  if (n > limits.max_order) {
    throw CapacityError("order " + std::to_string(n) + " exceeds maximum " +
                        std::to_string(limits.max_order));
  }
  PascalMatrix pm(n);
  BitRow tri;  // row 0
  for (std::size_t k = 2; k <= n; ++k) {
    if (k > 2) tri = next_row(tri);
    for (std::size_t j = 0; j < tri.bits.size(); ++j) {
      if (tri.bits[j]) {
        pm.set(k - 1, j);
        pm.set(j, k - 1);
      }
    }
  }
  return pm;
}

inline PascalMatrix leading_submatrix(const PascalMatrix& pm, std::size_t k) {
  if (k < 1 || k > pm.order()) {
    throw DomainError("leading submatrix order " + std::to_string(k) +
                      " outside 1.." + std::to_string(pm.order()));
  }
  PascalMatrix sub(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (pm.get(i, j)) sub.set(i, j);
    }
  }
  return sub;
}

inline PascalMatrix PascalMatrix::from_rows(
    const std::vector<std::vector<std::uint8_t>>& rows, const Limits& limits) {
  const std::size_t n = rows.size();
  PascalMatrix expected = generate(n, limits);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw DomainError("row " + std::to_string(i + 1) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] > 1) {
        throw DomainError("entry (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") is not 0 or 1");
      }
      if ((rows[i][j] == 1) != expected.get(i, j)) {
        throw DomainError("entry (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") differs from PM(" +
                          std::to_string(n) + ")");
      }
    }
  }
  return expected;
}

inline std::uint64_t edge_count(const PascalMatrix& pm) {
  std::uint64_t count = 0;
  for (std::size_t i = 1; i <= pm.order(); ++i) {
    for (std::size_t j = i + 1; j <= pm.order(); ++j) count += pm.at(i, j);
  }
  return count;
}

struct Determinant {
  BigInt value;
  // Parity from an independent rank computation over GF(2).
  bool odd_gf2 = false;

  bool is_even() const { return (value & 1) == 0; }
  bool parity_consistent() const { return is_even() != odd_gf2; }
};

namespace detail {

// Fraction-free (Bareiss) elimination; every division is exact.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// True iff the 0/1 matrix is nonsingular over GF(2).
inline bool full_rank_gf2(const PascalMatrix& pm) {
  const std::size_t n = pm.order();
  const std::size_t stride = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(stride, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (pm.at(i + 1, j + 1)) m[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = col;
    while (pivot < n && !(m[pivot][w] & bit)) ++pivot;
    if (pivot == n) return false;
    std::swap(m[col], m[pivot]);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][w] & bit) {
        for (std::size_t x = 0; x < stride; ++x) m[i][x] ^= m[col][x];
      }
    }
  }
  return true;
}

}  // namespace detail

inline Determinant determinant(const PascalMatrix& pm) {
  std::vector<std::vector<BigInt>> a(pm.order(), std::vector<BigInt>(pm.order()));
  for (std::size_t i = 0; i < pm.order(); ++i) {
    for (std::size_t j = 0; j < pm.order(); ++j) a[i][j] = pm.at(i + 1, j + 1) ? 1 : 0;
  }
  Determinant det;
  det.value = detail::bareiss_determinant(std::move(a));
  det.odd_gf2 = detail::full_rank_gf2(pm);
  return det;
}

// floor((n-1)^(log2 3)), the edge-count ceiling for PG(n). Exact when n-1 is a
// power of two (3^k); otherwise evaluated at 50 decimal digits and refused if
// the result lands too close to an integer to floor safely.
inline std::uint64_t edge_bound_exponent(std::uint64_t n) {
  if (n == 0) throw DomainError("edge bound needs n >= 1");
  const std::uint64_t x = n - 1;
  if (x == 0) return 0;
  if (std::has_single_bit(x)) {
    std::uint64_t p = 1;
    for (int k = std::countr_zero(x); k > 0; --k) p *= 3;
    return p;
  }
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float y = boost::multiprecision::exp(
      boost::multiprecision::log(Float(3)) / boost::multiprecision::log(Float(2)) *
      boost::multiprecision::log(Float(x)));
  const Float f = boost::multiprecision::floor(y);
  const Float frac = y - f;
  if (frac < Float("1e-30") || frac > 1 - Float("1e-30")) {
    throw std::logic_error("edge bound for n=" + std::to_string(n) +
                           " too close to an integer to floor safely");
  }
  return f.convert_to<std::uint64_t>();
}

// floor((n-1) * log2 3): the product reading of the same bound. It is already
// violated at n = 5 and is kept only so the rejection stays visible in tests.
inline std::uint64_t edge_bound_product(std::uint64_t n) {
  if (n == 0) throw DomainError("edge bound needs n >= 1");
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float y = Float(n - 1) * boost::multiprecision::log(Float(3)) /
                  boost::multiprecision::log(Float(2));
  return boost::multiprecision::floor(y).convert_to<std::uint64_t>();
}

}  // namespace pascalnet
