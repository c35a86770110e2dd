#pragma once

// Shared helpers for the unit tests: hand-rolled random generators and
// conversions between library values and the oracle's plain vectors.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "mcx/mcx.hpp"
#include "oracle.hpp"

namespace testing_support {

/// Random simple graph on n vertices with m distinct edges; isolated vertices allowed.
inline mcx::Graph random_graph(std::mt19937_64& rng, int n, int m) {
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(std::min<int>(m, static_cast<int>(all.size()))));
  return mcx::Graph::from_pairs(n, all);
}

/// Random graph without isolated vertices: n in [2, max_n], m in [1, min(max_m, C(n,2))].
inline mcx::Graph random_clean_graph(std::mt19937_64& rng, int max_n = 9, int max_m = 12) {
  for (;;) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    const int cap = std::min(max_m, n * (n - 1) / 2);
    const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
    mcx::Graph g = random_graph(rng, n, m);
    if (!g.has_isolated_vertices()) return g;
  }
}

/// Uniformly random vertex permutation of 0..n-1.
inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Random matching built greedily from a shuffled edge order, stopping at a random size.
inline mcx::Matching random_matching(std::mt19937_64& rng, const mcx::Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int want = static_cast<int>(rng() % static_cast<std::uint64_t>(g.edge_count() + 1));
  mcx::Matching m;
  mcx::IndexSet used;
  for (int e : order) {
    if (m.size() >= want) break;
    const auto& x = g.edge(e);
    if (used.contains(x.u) || used.contains(x.v)) continue;
    m.insert(e);
    used.insert(x.u);
    used.insert(x.v);
  }
  return m;
}

inline oracle::Pairs pairs_of(const mcx::Graph& g) { return g.pairs(); }

inline std::vector<oracle::Face> facets_of(const mcx::Complex& c) { return c.facet_labels(); }

inline mcx::Complex complex_from(const std::vector<oracle::Face>& facets) { return mcx::Complex::from_facets({}, facets); }

/// Library reduced Betti numbers as a plain vector beta_{-1} .. beta_d.
inline std::vector<std::int64_t> library_betti(const mcx::Complex& c, std::uint32_t p) {
  return mcx::betti_reduced(c, mcx::FieldPrime(p)).betti;
}

}  // namespace testing_support
