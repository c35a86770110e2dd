#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "mcx/error.hpp"
#include "mcx/graph.hpp"
#include "mcx/graph_io.hpp"

namespace mcx {

inline constexpr int kDefaultCanonicalCap = 10;

namespace detail {

// Exact canonical labeling by individualization and refinement.
//
// An ordered partition of the vertices is refined to the coarsest equitable partition
// (cells split by neighbor counts into each splitter cell). Non-discrete partitions are
// branched on the first non-singleton cell; every discrete leaf defines a labeling, and
// the leaf whose relabeled adjacency rows are lexicographically least wins. Branches are
// skipped only when an automorphism fixing the current prefix maps them onto an explored
// branch: either a twin transposition or a composition of automorphisms found at leaves.
class Canonicalizer {
 public:
  Canonicalizer(std::span<const std::uint64_t> adj, std::span<const int> colors) : adj_(adj.begin(), adj.end()) {
    n_ = static_cast<int>(adj_.size());
    std::vector<std::uint64_t> cells;
    if (colors.empty()) {
      if (n_ > 0) cells.push_back(IndexSet::range(n_).bits());
    } else {
      std::vector<int> values(colors.begin(), colors.end());
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      for (int c : values) {
        std::uint64_t cell = 0;
        for (int v = 0; v < n_; ++v)
          if (colors[static_cast<std::size_t>(v)] == c) cell |= std::uint64_t{1} << v;
        cells.push_back(cell);
      }
    }
    refine(cells);
    std::vector<int> prefix;
    search(cells, prefix);
  }

  /// best_order()[i] = original vertex that receives canonical label i.
  const std::vector<int>& best_order() const noexcept { return best_order_; }
  const std::vector<std::uint64_t>& best_rows() const noexcept { return best_rows_; }

 private:
  int count_in(int v, std::uint64_t cell) const { return std::popcount(adj_[static_cast<std::size_t>(v)] & cell); }

  void refine(std::vector<std::uint64_t>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
        const std::uint64_t splitter = cells[w];
        for (std::size_t x = 0; x < cells.size(); ++x) {
          const std::uint64_t cell = cells[x];
          if (std::popcount(cell) < 2) continue;
          std::array<std::uint64_t, 65> by_count{};
          int lo = 64;
          int hi = 0;
          for (int v : IndexSet(cell)) {
            const int k = count_in(v, splitter);
            by_count[static_cast<std::size_t>(k)] |= std::uint64_t{1} << v;
            lo = std::min(lo, k);
            hi = std::max(hi, k);
          }
          if (lo == hi) continue;
          std::vector<std::uint64_t> parts;
          for (int k = lo; k <= hi; ++k)
            if (by_count[static_cast<std::size_t>(k)] != 0) parts.push_back(by_count[static_cast<std::size_t>(k)]);
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), parts.begin(), parts.end());
          changed = true;
          break;
        }
      }
    }
  }

  bool twins(int a, int b) const {
    const std::uint64_t ra = adj_[static_cast<std::size_t>(a)] & ~(std::uint64_t{1} << b);
    const std::uint64_t rb = adj_[static_cast<std::size_t>(b)] & ~(std::uint64_t{1} << a);
    return ra == rb;
  }

  // Orbits of the group generated by the stored automorphisms that fix `prefix` pointwise.
  std::vector<int> orbits_fixing(const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& g : autos_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return g[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(g[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  void leaf(const std::vector<std::uint64_t>& cells) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (std::uint64_t c : cells) order.push_back(std::countr_zero(c));
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (int u : IndexSet(adj_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])])) r |= std::uint64_t{1} << pos[static_cast<std::size_t>(u)];
      rows[static_cast<std::size_t>(i)] = r;
    }
    if (!have_best_ || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_order_ = std::move(order);
      have_best_ = true;
    } else if (rows == best_rows_ && autos_.size() < kMaxAutomorphisms) {
      std::vector<int> g(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) g[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(i)])] = order[static_cast<std::size_t>(i)];
      autos_.push_back(std::move(g));
    }
  }

  void search(const std::vector<std::uint64_t>& cells, std::vector<int>& prefix) {
    auto target = std::find_if(cells.begin(), cells.end(), [](std::uint64_t c) { return std::popcount(c) > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> explored;
    for (int v : IndexSet(cells[ti])) {
      bool skip = std::any_of(explored.begin(), explored.end(), [&](int u) { return twins(u, v); });
      if (!skip && !explored.empty() && !autos_.empty()) {
        const auto orb = orbits_fixing(prefix);
        skip = std::any_of(explored.begin(), explored.end(),
                           [&](int u) { return orb[static_cast<std::size_t>(u)] == orb[static_cast<std::size_t>(v)]; });
      }
      if (skip) continue;
      explored.push_back(v);
      std::vector<std::uint64_t> child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(ti));
      child.push_back(std::uint64_t{1} << v);
      child.push_back(cells[ti] & ~(std::uint64_t{1} << v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(ti) + 1, cells.end());
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  static constexpr std::size_t kMaxAutomorphisms = 256;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<int> best_order_;
  bool have_best_ = false;
  std::vector<std::vector<int>> autos_;
};

}  // namespace detail

/// Canonical vertex order: order[i] is the vertex of g that receives label i.
/// Optional colors restrict the labeling to color-preserving permutations.
inline std::vector<int> canonical_order(const Graph& g, std::span<const int> colors = {}) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.vertex_count()) {
    throw Error(Errc::InvalidParameter, "one color per vertex required");
  }
  detail::Canonicalizer c(g.adjacency(), colors);
  return c.best_order();
}

/// g relabeled into canonical position; isomorphic graphs give identical results.
inline Graph canonical_graph(const Graph& g) {
  const auto order = canonical_order(g);
  std::vector<int> perm(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) perm[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return relabel(g, perm);
}

/// Byte string equal for exactly the graphs in one isomorphism class: the graph6
/// encoding of the canonically relabeled graph.
inline std::string canonical_form(const Graph& g, int cap = kDefaultCanonicalCap) {
  if (g.vertex_count() > cap) {
    throw Error(Errc::TooLarge, "canonical form limited to " + std::to_string(cap) + " vertices, graph has " +
                                    std::to_string(g.vertex_count()));
  }
  return to_graph6(canonical_graph(g));
}

/// Canonical form of a vertex-colored graph; colors are part of the invariant.
inline std::string canonical_form_colored(const Graph& g, std::span<const int> colors) {
  const auto order = canonical_order(g, colors);
  std::vector<int> perm(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) perm[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::string out = to_graph6(relabel(g, perm));
  out.push_back('|');
  for (int v : order) out += std::to_string(colors[static_cast<std::size_t>(v)]) + ",";
  return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, Graph::kMaxVertices) == canonical_form(b, Graph::kMaxVertices);
}

}  // namespace mcx
