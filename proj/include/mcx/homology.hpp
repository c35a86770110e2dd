#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mcx/complex.hpp"
#include "mcx/error.hpp"

namespace mcx {

class FieldPrime {
 public:
  explicit FieldPrime(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1U << 16)) throw Error(Errc::NotPrime, std::to_string(p) + " is not a supported prime (< 65536)");
    for (std::uint32_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    }
  }

  std::uint32_t value() const noexcept { return p_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const noexcept {
    // a^(p-2) by square-and-multiply.
    std::uint32_t result = 1;
    std::uint32_t base = a % p_;
    for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

  bool operator==(const FieldPrime&) const = default;

 private:
  std::uint32_t p_;
};

/// Reduced Betti numbers over GF(p); betti[k + 1] is the k-th number, k = -1..d.
struct BettiVector {
  std::uint32_t p = 2;
  std::vector<std::int64_t> betti;

  std::int64_t at(int k) const {
    const auto i = static_cast<std::size_t>(k + 1);
    return (k >= -1 && i < betti.size()) ? betti[i] : 0;
  }
  int top_dimension() const { return static_cast<int>(betti.size()) - 2; }
  /// beta_0 .. beta_d
  std::vector<std::int64_t> nonnegative() const {
    return betti.empty() ? std::vector<std::int64_t>{} : std::vector<std::int64_t>(betti.begin() + 1, betti.end());
  }
  bool all_zero() const {
    return std::all_of(betti.begin(), betti.end(), [](std::int64_t b) { return b == 0; });
  }
  bool same_numbers(const BettiVector& o) const { return betti == o.betti; }
  bool operator==(const BettiVector&) const = default;
};

/// Matrix of the k-th boundary map; rows are (k-1)-faces, columns k-faces, both in
/// increasing mask order. Column entries are (row, value) pairs with ascending rows.
/// k = 0 is the augmentation: one row (the empty face) of ones.
struct BoundaryMatrix {
  int k = 0;
  std::uint32_t p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> columns;

  std::vector<std::vector<std::uint32_t>> dense() const {
    std::vector<std::vector<std::uint32_t>> out(static_cast<std::size_t>(rows), std::vector<std::uint32_t>(static_cast<std::size_t>(cols), 0));
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (auto [r, v] : columns[j]) out[r][j] = v;
    return out;
  }
};

namespace detail {

using SparseColumn = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Columns in compressed form: entries of column j are [offsets[j], offsets[j + 1]),
// rows ascending.
struct ColumnBlock {
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> rows;
  std::vector<std::uint32_t> vals;

  std::size_t size() const noexcept { return offsets.size() - 1; }
};

// Columns of the k-th boundary over the given layers, skipping columns flagged in `skip`.
inline ColumnBlock boundary_block(const std::vector<std::vector<Face>>& layers, int k, const FieldPrime& p,
                                  const std::vector<char>* skip = nullptr) {
  const auto& cols = layers[static_cast<std::size_t>(k + 1)];
  const auto& rows = layers[static_cast<std::size_t>(k)];
  ColumnBlock out;
  out.offsets.reserve(cols.size() + 1);
  out.rows.reserve(cols.size() * static_cast<std::size_t>(k + 1));
  out.vals.reserve(cols.size() * static_cast<std::size_t>(k + 1));
  const std::uint32_t minus_one = p.value() - 1;
  std::pair<std::uint32_t, std::uint32_t> entry[IndexSet::kCapacity];
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (skip && (*skip)[j]) continue;
    int i = 0;
    for (int v : cols[j]) {
      const Face facet = cols[j].without(v);
      const auto it = std::lower_bound(rows.begin(), rows.end(), facet);
      entry[i] = {static_cast<std::uint32_t>(it - rows.begin()), (i % 2 == 0) ? 1U : minus_one};
      ++i;
    }
    std::sort(entry, entry + i);
    for (int t = 0; t < i; ++t) {
      out.rows.push_back(entry[t].first);
      out.vals.push_back(entry[t].second);
    }
    out.offsets.push_back(static_cast<std::uint32_t>(out.rows.size()));
  }
  return out;
}

inline std::vector<SparseColumn> to_columns(const ColumnBlock& b) {
  std::vector<SparseColumn> out(b.size());
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::uint32_t t = b.offsets[j]; t < b.offsets[j + 1]; ++t) out[j].emplace_back(b.rows[t], b.vals[t]);
  return out;
}

struct RankResult {
  std::size_t rank = 0;
  std::vector<std::uint32_t> pivot_rows;  // lowest nonzero row of each reduced nonzero column
};

// Left-to-right column reduction by lowest nonzero entry, over GF(p).
inline RankResult reduce_sparse(const ColumnBlock& cols, std::size_t nrows, const FieldPrime& p) {
  RankResult res;
  std::vector<int> pivot_of(nrows, -1);
  std::vector<SparseColumn> stored;
  SparseColumn col;
  SparseColumn tmp;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    col.clear();
    for (std::uint32_t t = cols.offsets[j]; t < cols.offsets[j + 1]; ++t) col.emplace_back(cols.rows[t], cols.vals[t]);
    while (!col.empty()) {
      const auto [low, val] = col.back();
      const int pc = pivot_of[low];
      if (pc < 0) break;
      // col -= val * stored[pc]   (stored columns are normalized to low value 1)
      const SparseColumn& piv = stored[static_cast<std::size_t>(pc)];
      tmp.clear();
      std::size_t a = 0;
      std::size_t b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
          tmp.push_back(col[a++]);
        } else if (a == col.size() || piv[b].first < col[a].first) {
          tmp.emplace_back(piv[b].first, p.neg(p.mul(val, piv[b].second)));
          ++b;
        } else {
          const std::uint32_t x = (col[a].second + p.neg(p.mul(val, piv[b].second))) % p.value();
          if (x != 0) tmp.emplace_back(col[a].first, x);
          ++a;
          ++b;
        }
      }
      col.swap(tmp);
    }
    if (col.empty()) continue;
    const std::uint32_t scale = p.inv(col.back().second);
    for (auto& e : col) e.second = p.mul(e.second, scale);
    pivot_of[col.back().first] = static_cast<int>(stored.size());
    res.pivot_rows.push_back(col.back().first);
    stored.push_back(col);
  }
  res.rank = stored.size();
  return res;
}

// Same reduction over GF(2) with each column packed into machine words.
inline RankResult reduce_gf2_packed(const ColumnBlock& cols, std::size_t nrows) {
  RankResult res;
  const std::size_t words = (nrows + 63) / 64;
  std::vector<std::uint64_t> pivots(nrows * words);
  std::vector<char> has_pivot(nrows, 0);
  std::vector<std::uint64_t> v(words);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::fill(v.begin(), v.end(), 0);
    std::size_t w = 0;
    for (std::uint32_t t = cols.offsets[j]; t < cols.offsets[j + 1]; ++t) {
      if ((cols.vals[t] & 1U) == 0) continue;
      const std::uint32_t r = cols.rows[t];
      v[r / 64] ^= std::uint64_t{1} << (r % 64);
      w = std::max<std::size_t>(w, r / 64 + 1);
    }
    while (true) {
      while (w > 0 && v[w - 1] == 0) --w;
      if (w == 0) break;
      const std::size_t low = (w - 1) * 64 + static_cast<std::size_t>(63 - std::countl_zero(v[w - 1]));
      std::uint64_t* pv = pivots.data() + low * words;
      if (!has_pivot[low]) {
        std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(w), pv);
        has_pivot[low] = 1;
        res.pivot_rows.push_back(static_cast<std::uint32_t>(low));
        ++res.rank;
        break;
      }
      for (std::size_t i = 0; i < w; ++i) v[i] ^= pv[i];
    }
  }
  return res;
}

inline constexpr std::size_t kPackedRowLimit = 4096;

inline RankResult rank_of_columns(const ColumnBlock& cols, std::size_t nrows, const FieldPrime& p) {
  if (p.value() == 2 && nrows <= kPackedRowLimit) return reduce_gf2_packed(cols, nrows);
  return reduce_sparse(cols, nrows, p);
}

}  // namespace detail

inline BoundaryMatrix boundary_matrix(const Complex& c, int k, const FieldPrime& p) {
  c.require_nonvoid();
  const int d = c.dimension();
  if (k < 0 || k > d) throw Error(Errc::BadDimension, "boundary dimension " + std::to_string(k) + " outside [0, " + std::to_string(d) + "]");
  const auto layers = c.faces_by_dimension();
  BoundaryMatrix m;
  m.k = k;
  m.p = p.value();
  m.rows = static_cast<int>(layers[static_cast<std::size_t>(k)].size());
  m.cols = static_cast<int>(layers[static_cast<std::size_t>(k + 1)].size());
  m.columns = detail::to_columns(detail::boundary_block(layers, k, p));
  return m;
}

inline std::size_t rank(const BoundaryMatrix& m, const FieldPrime& p) {
  detail::ColumnBlock b;
  for (const auto& col : m.columns) {
    for (auto [r, v] : col) {
      if (v % p.value() == 0) continue;
      b.rows.push_back(r);
      b.vals.push_back(v % p.value());
    }
    b.offsets.push_back(static_cast<std::uint32_t>(b.rows.size()));
  }
  return detail::rank_of_columns(b, static_cast<std::size_t>(m.rows), p).rank;
}

inline BettiVector betti_reduced(const Complex& c, const FieldPrime& p) {
  c.require_nonvoid();
  const auto layers = c.faces_by_dimension();
  const int d = static_cast<int>(layers.size()) - 2;
  // rank_of[k] = rank of the k-th boundary map, k = 0..d+1.
  std::vector<std::size_t> rank_of(static_cast<std::size_t>(d + 2), 0);
  // Columns of the next-lower map known to reduce to zero (pivots of the map above).
  std::vector<char> cleared;
  for (int k = d; k >= 1; --k) {
    const auto& cols = layers[static_cast<std::size_t>(k + 1)];
    if (cleared.size() != cols.size()) cleared.assign(cols.size(), 0);
    const auto block = detail::boundary_block(layers, k, p, &cleared);
    const std::size_t nrows = layers[static_cast<std::size_t>(k)].size();
    const auto res = detail::rank_of_columns(block, nrows, p);
    rank_of[static_cast<std::size_t>(k)] = res.rank;
    cleared.assign(nrows, 0);
    for (auto r : res.pivot_rows) cleared[r] = 1;
  }
  if (d >= 0) rank_of[0] = layers[1].empty() ? 0 : 1;
  BettiVector b;
  b.p = p.value();
  for (int k = -1; k <= d; ++k) {
    const auto fk = static_cast<std::int64_t>(layers[static_cast<std::size_t>(k + 1)].size());
    const auto down = k >= 0 ? static_cast<std::int64_t>(rank_of[static_cast<std::size_t>(k)]) : 0;
    const auto up = static_cast<std::int64_t>(rank_of[static_cast<std::size_t>(k + 1)]);
    b.betti.push_back(fk - down - up);
  }
  return b;
}

/// Reduced homology equal to that of the d-sphere; d = -1 means the complex {∅}.
inline bool is_sphere_betti(const BettiVector& b, int d) {
  if (d < -1 || d > b.top_dimension()) return false;
  for (int k = -1; k <= b.top_dimension(); ++k) {
    if (b.at(k) != (k == d ? 1 : 0)) return false;
  }
  return true;
}

inline bool has_sphere_homology(const Complex& c, int d, const FieldPrime& p) {
  if (c.is_void()) return false;
  return is_sphere_betti(betti_reduced(c, p), d);
}

/// All reduced Betti numbers vanish (acyclic).
inline bool has_ball_homology(const Complex& c, const FieldPrime& p) {
  if (c.is_void()) return false;
  return betti_reduced(c, p).all_zero();
}

}  // namespace mcx
