#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "mw/bigint.hpp"

namespace mw {

/// Column-major sparse matrix; each column holds (row, value) pairs sorted by
/// row with no explicit zeros.
template <class T>
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, T>>> columns;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

  T at(int r, int c) const {
    const auto& col = columns[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int row) { return e.first < row; });
    return (it != col.end() && it->first == r) ? it->second : T(0);
  }

  std::vector<std::vector<T>> dense() const {
    std::vector<std::vector<T>> out(rows, std::vector<T>(cols, T(0)));
    for (int c = 0; c < cols; ++c)
      for (const auto& [r, v] : columns[c]) out[r][c] = v;
    return out;
  }

  template <class U>
  SparseMatrix<U> cast() const {
    SparseMatrix<U> out(rows, cols);
    for (int c = 0; c < cols; ++c)
      for (const auto& [r, v] : columns[c]) out.columns[c].emplace_back(r, U(static_cast<std::int64_t>(v)));
    return out;
  }
};

template <class T>
SparseMatrix<T> sparse_from_dense(const std::vector<std::vector<T>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  SparseMatrix<T> out(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r)
      if (m[r][c] != 0) out.columns[c].emplace_back(r, m[r][c]);
  return out;
}

namespace detail {

/// Arithmetic over the integers (CheckedInt or BigInt): units are +-1.
template <class Int>
struct IntegerRing {
  using value_type = Int;
  bool is_unit(const Int& x) const { return x == 1 || x == -1; }
  Int inverse(const Int& x) const { return x; }
  Int mul(const Int& a, const Int& b) const { return a * b; }
  Int sub(const Int& a, const Int& b) const { return a - b; }
  bool is_zero(const Int& x) const { return x == 0; }
};

/// Arithmetic in Z/p for a prime p < 2^31; values kept in [0, p).
struct PrimeField {
  using value_type = std::int64_t;
  std::int64_t p;
  bool is_unit(std::int64_t x) const { return x != 0; }
  std::int64_t inverse(std::int64_t x) const {
    std::int64_t r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return a * b % p; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return ((a - b) % p + p) % p; }
  bool is_zero(std::int64_t x) const { return x == 0; }
};

/// Sparse elimination on unit pivots.  Each unit pivot contributes an
/// invariant factor 1 (or a rank unit over a field).  Returns the number of
/// pivots and leaves the unreduced remainder in `m` (pivot rows and columns
/// removed, i.e. emptied).
template <class Ring>
int eliminate_unit_pivots(SparseMatrix<typename Ring::value_type>& m, const Ring& ring) {
  using T = typename Ring::value_type;
  std::vector<char> col_alive(m.cols, 1), row_alive(m.rows, 1);
  std::vector<int> row_count(m.rows, 0);
  std::vector<std::vector<int>> row_cols(m.rows);
  for (int c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) {
      ++row_count[r];
      row_cols[r].push_back(c);
    }

  int pivots = 0;
  std::vector<std::pair<int, T>> merged;
  while (true) {
    // Pivot choice: a unit entry minimizing the Markowitz product.
    long best_cost = -1;
    int pc = -1, pr = -1;
    for (int c = 0; c < m.cols; ++c) {
      if (!col_alive[c] || m.columns[c].empty()) continue;
      const long cn = static_cast<long>(m.columns[c].size()) - 1;
      for (const auto& [r, v] : m.columns[c]) {
        if (!ring.is_unit(v)) continue;
        const long cost = cn * (row_count[r] - 1);
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          pc = c;
          pr = r;
        }
      }
      if (best_cost == 0) break;
    }
    if (pc < 0) break;

    const auto pivot_col = m.columns[pc];
    const T pinv = ring.inverse(m.at(pr, pc));
    for (int j : row_cols[pr]) {
      if (j == pc || !col_alive[j]) continue;
      const T a = m.at(pr, j);
      if (ring.is_zero(a)) continue;
      const T factor = ring.mul(a, pinv);
      auto& col = m.columns[j];
      merged.clear();
      std::size_t x = 0, y = 0;
      while (x < col.size() || y < pivot_col.size()) {
        if (y == pivot_col.size() || (x < col.size() && col[x].first < pivot_col[y].first)) {
          merged.push_back(col[x++]);
        } else if (x == col.size() || pivot_col[y].first < col[x].first) {
          const int r = pivot_col[y].first;
          merged.emplace_back(r, ring.sub(T(0), ring.mul(factor, pivot_col[y].second)));
          ++row_count[r];
          row_cols[r].push_back(j);
          ++y;
        } else {
          const int r = col[x].first;
          T v = ring.sub(col[x].second, ring.mul(factor, pivot_col[y].second));
          if (ring.is_zero(v)) {
            --row_count[r];
          } else {
            merged.emplace_back(r, std::move(v));
          }
          ++x;
          ++y;
        }
      }
      col.swap(merged);
    }
    for (const auto& [r, v] : pivot_col) --row_count[r];
    m.columns[pc].clear();
    col_alive[pc] = 0;
    row_alive[pr] = 0;
    row_cols[pr].clear();
    ++pivots;
  }
  return pivots;
}

template <class Int>
Int abs_value(const Int& x) {
  return x < 0 ? Int(0) - x : x;
}

/// Dense Smith normal form on a small remainder; returns the nonzero
/// diagonal as a divisibility chain.
template <class Int>
std::vector<Int> dense_invariant_factors(std::vector<std::vector<Int>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<Int> diag;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto find_min = [&](int& bi, int& bj) {
      bi = bj = -1;
      Int best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi < 0 || abs_value(a[i][j]) < best)) {
            best = abs_value(a[i][j]);
            bi = i;
            bj = j;
          }
    };
    int bi, bj;
    find_min(bi, bj);
    if (bi < 0) break;
    std::swap(a[t], a[bi]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][bj]);

    while (true) {
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Int q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] = a[i][j] - q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Int q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] = a[i][j] - q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) {
        // The pivot must divide the whole trailing block.
        int bad_row = -1;
        for (int i = t + 1; i < rows && bad_row < 0; ++i)
          for (int j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              bad_row = i;
              break;
            }
        if (bad_row < 0) break;
        for (int j = t; j < cols; ++j) a[t][j] = a[t][j] + a[bad_row][j];
        continue;
      }
      // Move the smallest remaining entry of row/column t into the pivot.
      int mi = t, mj = t;
      Int best = abs_value(a[t][t]);
      for (int i = t + 1; i < rows; ++i)
        if (a[i][t] != 0 && abs_value(a[i][t]) < best) {
          best = abs_value(a[i][t]);
          mi = i;
          mj = t;
        }
      for (int j = t + 1; j < cols; ++j)
        if (a[t][j] != 0 && abs_value(a[t][j]) < best) {
          best = abs_value(a[t][j]);
          mi = t;
          mj = j;
        }
      std::swap(a[t], a[mi]);
      for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][mj]);
    }
    diag.push_back(abs_value(a[t][t]));
  }
  // Normalize to a divisibility chain (a no-op when the loop above already
  // produced one).
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Int g = diag[i], h = diag[j];
      while (h != 0) {
        Int r = g % h;
        g = h;
        h = r;
      }
      const Int l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

template <class Int>
std::vector<BigInt> invariant_factors_with(SparseMatrix<Int> m) {
  const int ones = eliminate_unit_pivots(m, IntegerRing<Int>{});
  std::vector<int> rows_used;
  std::vector<int> cols_used;
  {
    std::vector<char> r_seen(m.rows, 0);
    for (int c = 0; c < m.cols; ++c) {
      if (m.columns[c].empty()) continue;
      cols_used.push_back(c);
      for (const auto& [r, v] : m.columns[c]) r_seen[r] = 1;
    }
    for (int r = 0; r < m.rows; ++r)
      if (r_seen[r]) rows_used.push_back(r);
  }
  std::vector<std::vector<Int>> rest(rows_used.size(), std::vector<Int>(cols_used.size(), Int(0)));
  std::vector<int> row_index(m.rows, -1);
  for (std::size_t i = 0; i < rows_used.size(); ++i) row_index[rows_used[i]] = static_cast<int>(i);
  for (std::size_t j = 0; j < cols_used.size(); ++j)
    for (const auto& [r, v] : m.columns[cols_used[j]]) rest[row_index[r]][j] = v;
  std::vector<BigInt> out(ones, BigInt(1));
  for (const Int& x : dense_invariant_factors(std::move(rest))) out.push_back(to_big(x));
  return out;
}

}  // namespace detail

struct SmithResult {
  /// Nonzero invariant factors d_1 | d_2 | ... in increasing order.
  std::vector<BigInt> factors;
  int rank = 0;
};

/// Smith normal form of an integer matrix (exact).  Runs in checked 64-bit
/// arithmetic and redoes the computation with unbounded integers if any
/// intermediate value overflows.
inline SmithResult smith_normal_form(const SparseMatrix<CheckedInt>& m) {
  SmithResult res;
  try {
    res.factors = detail::invariant_factors_with(m);
  } catch (const Overflow&) {
    SparseMatrix<BigInt> big(m.rows, m.cols);
    for (int c = 0; c < m.cols; ++c)
      for (const auto& [r, v] : m.columns[c]) big.columns[c].emplace_back(r, BigInt(v.value()));
    res.factors = detail::invariant_factors_with(std::move(big));
  }
  res.rank = static_cast<int>(res.factors.size());
  return res;
}

inline SmithResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& dense) {
  std::vector<std::vector<CheckedInt>> m;
  for (const auto& row : dense) m.emplace_back(row.begin(), row.end());
  return smith_normal_form(sparse_from_dense(m));
}

/// Rank over Z/p (p prime), or over Q when p == 0.
inline int rank_mod(const SparseMatrix<CheckedInt>& m, std::int64_t p) {
  if (p == 0) return smith_normal_form(m).rank;
  SparseMatrix<std::int64_t> mm(m.rows, m.cols);
  for (int c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) {
      const std::int64_t x = ((v.value() % p) + p) % p;
      if (x) mm.columns[c].emplace_back(r, x);
    }
  return detail::eliminate_unit_pivots(mm, detail::PrimeField{p});
}

}  // namespace mw
