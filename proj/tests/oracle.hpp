#pragma once

// Independent reference implementations used to freeze expected values.
// Nothing here calls into the library's face, matching, rank or canonical code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Face = std::vector<int>;
using Pairs = std::vector<std::pair<int, int>>;

/// All nonempty subsets of every facet, as sorted label vectors.
inline std::set<Face> faces(const std::vector<Face>& facets) {
  std::set<Face> out;
  for (const auto& f : facets) {
    const int k = static_cast<int>(f.size());
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
      Face s;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1U) s.push_back(f[static_cast<std::size_t>(i)]);
      std::sort(s.begin(), s.end());
      out.insert(s);
    }
  }
  return out;
}

/// Edge subsets filtered by pairwise disjointness, including the empty one.
inline std::vector<std::vector<int>> matchings(const Pairs& edges) {
  std::vector<std::vector<int>> out;
  const int m = static_cast<int>(edges.size());
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    std::vector<int> used;
    bool ok = true;
    std::vector<int> chosen;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1U)) continue;
      auto [a, b] = edges[static_cast<std::size_t>(i)];
      for (int u : used) ok = ok && u != a && u != b;
      used.push_back(a);
      used.push_back(b);
      chosen.push_back(i);
    }
    if (ok) out.push_back(chosen);
  }
  return out;
}

/// Maximal matchings of an edge list by brute force.
inline std::vector<std::vector<int>> maximal_matchings(const Pairs& edges) {
  auto all = matchings(edges);
  std::vector<std::vector<int>> out;
  for (const auto& a : all) {
    bool maximal = true;
    for (const auto& b : all) {
      if (b.size() > a.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

using BigInt = boost::multiprecision::cpp_int;

/// Rank over the rationals by fraction-free (Bareiss) elimination.
inline int rank_rational(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

/// Rank over GF(p): integer entries reduced mod p, then fraction-free elimination
/// with every intermediate reduced mod p.
inline int rank_mod_p(const std::vector<std::vector<BigInt>>& in, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> a;
  for (const auto& row : in) {
    std::vector<std::int64_t> r;
    for (const auto& x : row) r.push_back(static_cast<std::int64_t>(((x % p) + p) % p));
    a.push_back(std::move(r));
  }
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[r][c] * a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return static_cast<int>(r);
}

/// Integer boundary matrix d_k: rows (k-1)-faces, columns k-faces; k = 0 is the
/// augmentation onto the empty face.
inline std::vector<std::vector<BigInt>> boundary(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  std::map<Face, std::size_t> row_of;
  for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = i;
  std::vector<std::vector<BigInt>> m(lower.size(), std::vector<BigInt>(upper.size(), 0));
  for (std::size_t j = 0; j < upper.size(); ++j) {
    const Face& f = upper[j];
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      m[row_of.at(g)][j] = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

/// Reduced Betti numbers beta_{-1} .. beta_d. p = 0 means the rationals.
inline std::vector<std::int64_t> betti(const std::vector<Face>& facets, std::int64_t p) {
  const std::set<Face> all = faces(facets);
  int d = -1;
  for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(d + 2));
  by_dim[0].push_back(Face{});
  for (const auto& f : all) by_dim[f.size()].push_back(f);
  // rank_k = rank of d_k : C_k -> C_{k-1}, k = 0 .. d, indexed by k + 1 into by_dim.
  std::vector<int> rk(static_cast<std::size_t>(d + 3), 0);
  for (int k = 0; k <= d; ++k) {
    auto m = boundary(by_dim[static_cast<std::size_t>(k)], by_dim[static_cast<std::size_t>(k + 1)]);
    rk[static_cast<std::size_t>(k + 1)] = p == 0 ? rank_rational(m) : rank_mod_p(m, p);
  }
  std::vector<std::int64_t> out;
  for (int k = -1; k <= d; ++k) {
    const auto n = static_cast<std::int64_t>(by_dim[static_cast<std::size_t>(k + 1)].size());
    const std::int64_t rank_out = k >= 0 ? rk[static_cast<std::size_t>(k + 1)] : 0;
    const std::int64_t rank_in = rk[static_cast<std::size_t>(k + 2)];
    out.push_back(n - rank_out - rank_in);
  }
  return out;
}

/// Canonical string of a labeled graph: lexicographically least upper-triangle
/// adjacency string over all vertex permutations.
inline std::string brute_canonical(int n, const Pairs& edges) {
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = 1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s.push_back(adj[perm[i]][perm[j]] ? '1' : '0');
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

/// Isomorphism classes of graphs without isolated vertices on at most max_n vertices
/// with 1..max_m edges, counted per edge count.
inline std::map<int, int> class_counts(int max_n, int max_m) {
  std::map<int, std::set<std::string>> classes;
  for (int n = 2; n <= max_n; ++n) {
    Pairs all;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    const int total = static_cast<int>(all.size());
    for (std::uint32_t mask = 1; mask < (1U << total); ++mask) {
      const int m = std::popcount(mask);
      if (m > max_m) continue;
      Pairs edges;
      std::uint32_t touched = 0;
      for (int i = 0; i < total; ++i) {
        if (!(mask >> i & 1U)) continue;
        edges.push_back(all[static_cast<std::size_t>(i)]);
        touched |= 1U << all[static_cast<std::size_t>(i)].first | 1U << all[static_cast<std::size_t>(i)].second;
      }
      if (touched != (1U << n) - 1) continue;
      classes[m].insert(brute_canonical(n, edges));
    }
  }
  std::map<int, int> out;
  for (const auto& [m, s] : classes) out[m] = static_cast<int>(s.size());
  return out;
}

/// Random facet lists on labels 0..n-1 with facet sizes 1..max_size.
inline std::vector<Face> random_facets(std::mt19937_64& rng, int n, int count, int max_size) {
  std::vector<Face> out;
  for (int t = 0; t < count; ++t) {
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size));
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    Face f(pool.begin(), pool.begin() + std::min(k, n));
    std::sort(f.begin(), f.end());
    out.push_back(f);
  }
  return out;
}

/// Facets of the boundary of the l-dimensional crosspolytope on labels 0..2l-1,
/// with i and i + l antipodal.
inline std::vector<Face> crosspolytope_boundary(int l) {
  std::vector<Face> out;
  for (std::uint32_t mask = 0; mask < (1U << l); ++mask) {
    Face f;
    for (int i = 0; i < l; ++i) f.push_back((mask >> i & 1U) ? i + l : i);
    std::sort(f.begin(), f.end());
    out.push_back(f);
  }
  return out;
}

}  // namespace oracle
