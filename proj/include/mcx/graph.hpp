#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcx/error.hpp"
#include "mcx/index_set.hpp"

namespace mcx {

struct Edge {
  int u = 0;
  int v = 0;  // u < v

  constexpr bool operator==(const Edge&) const noexcept = default;
  constexpr auto operator<=>(const Edge&) const noexcept = default;
};

/// A matching is a set of pairwise non-incident edge indices.
using Matching = IndexSet;

/// Simple undirected graph on vertices 0..n-1 with a sorted, duplicate-free edge list.
///
/// Edge indices are positions in the sorted list; the matching complex uses them
/// as its vertex labels. The vertex count is bounded by 64 so adjacency rows fit
/// in a machine word. Edge sets (matchings, incidence) need at most 64 edges; larger
/// graphs such as 1-skeletons of complexes support only the vertex-level queries.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;
  static constexpr int kMaxEdges = 64;  // for edge-set operations

  Graph() = default;

  /// Validates and normalizes (n, pairs). Pairs may be given in either orientation.
  static Graph from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
    if (n < 0 || n > kMaxVertices) {
      throw Error(Errc::TooLarge, "vertex count " + std::to_string(n) + " outside [0, 64]");
    }
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw Error(Errc::VertexOutOfRange,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n = " + std::to_string(n));
      }
      if (a == b) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(a));
      g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (std::size_t i = 1; i < g.edges_.size(); ++i) {
      if (g.edges_[i] == g.edges_[i - 1]) {
        throw Error(Errc::DuplicateEdge,
                    "edge (" + std::to_string(g.edges_[i].u) + "," + std::to_string(g.edges_[i].v) + ") repeated");
      }
    }
    g.rebuild();
    return g;
  }

  static Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return from_pairs(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
  }

  /// Builds from symmetric adjacency rows (bit j of rows[i] set iff i ~ j).
  static Graph from_adjacency(std::span<const std::uint64_t> rows) {
    std::vector<std::pair<int, int>> pairs;
    const int n = static_cast<int>(rows.size());
    for (int i = 0; i < n; ++i) {
      for (int j : IndexSet(rows[static_cast<std::size_t>(i)] & ~((std::uint64_t{2} << i) - 1))) pairs.emplace_back(i, j);
    }
    return from_pairs(n, pairs);
  }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  /// Adjacency row of v as a vertex bitmask.
  IndexSet neighbors(int v) const { return IndexSet(adj_.at(static_cast<std::size_t>(v))); }
  std::span<const std::uint64_t> adjacency() const noexcept { return adj_; }
  int degree(int v) const { return neighbors(v).size(); }
  bool adjacent(int a, int b) const { return neighbors(a).contains(b); }

  bool has_isolated_vertices() const noexcept { return has_isolated_; }

  /// Edges sharing at least one endpoint with edge i (including i itself).
  IndexSet incident_edges(int i) const {
    require_edge_sets();
    return IndexSet(incidence_.at(static_cast<std::size_t>(i)));
  }

  /// Throws TooLarge when the edges do not fit in an edge set.
  void require_edge_sets() const {
    if (edge_count() > kMaxEdges) {
      throw Error(Errc::TooLarge, std::to_string(edge_count()) + " edges exceed the edge-set limit of 64");
    }
  }

  /// Index of edge {a, b}, or -1.
  int edge_index(int a, int b) const {
    const Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    return (it != edges_.end() && *it == key) ? static_cast<int>(it - edges_.begin()) : -1;
  }

  bool is_matching(Matching m) const {
    for (int i : m) {
      if (i >= edge_count()) return false;
      if (incident_edges(i).without(i).intersects(m)) return false;
    }
    return true;
  }

  IndexSet vertices_of(Matching m) const {
    IndexSet vs;
    for (int i : m) vs = vs.with(edges_[static_cast<std::size_t>(i)].u).with(edges_[static_cast<std::size_t>(i)].v);
    return vs;
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  bool operator==(const Graph& o) const noexcept { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  void rebuild() {
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
      adj_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
      adj_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    has_isolated_ = std::any_of(adj_.begin(), adj_.end(), [](std::uint64_t r) { return r == 0; });
    incidence_.clear();
    if (edge_count() > kMaxEdges) return;
    incidence_.assign(edges_.size(), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (std::size_t j = 0; j < edges_.size(); ++j) {
        const Edge& a = edges_[i];
        const Edge& b = edges_[j];
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) incidence_[i] |= std::uint64_t{1} << j;
      }
    }
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> incidence_;
  bool has_isolated_ = false;
};

// ---------------------------------------------------------------------------
// Named families. Vertex numbering is fixed so that tests and figures agree.

inline Graph path(int n) {
  if (n < 1) throw Error(Errc::InvalidParameter, "path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_pairs(n, e);
}

inline Graph cycle(int n) {
  if (n < 3) throw Error(Errc::InvalidParameter, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_pairs(n, e);
}

inline Graph complete(int n) {
  if (n < 1) throw Error(Errc::InvalidParameter, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_pairs(n, e);
}

/// K_{m,n}: parts {0..m-1} and {m..m+n-1}.
inline Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw Error(Errc::InvalidParameter, "complete bipartite graph needs m, n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
  return Graph::from_pairs(m + n, e);
}

/// K_{1,n}: center 0, leaves 1..n.
inline Graph star(int n) {
  if (n < 1) throw Error(Errc::InvalidParameter, "star needs n >= 1 leaves");
  return complete_bipartite(1, n);
}

/// k legs of length two glued at the center 0; leg i uses vertices 2i-1 (middle) and 2i (foot).
inline Graph spider(int k) {
  if (k < 2) throw Error(Errc::InvalidParameter, "spider needs k >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i) {
    e.emplace_back(0, 2 * i - 1);
    e.emplace_back(2 * i - 1, 2 * i);
  }
  return Graph::from_pairs(2 * k + 1, e);
}

/// 4-cycle 0-1-2-3 with the pendant edge {0,4}.
inline Graph banner() { return Graph::from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}}); }

inline Graph disjoint_union(std::span<const Graph> gs) {
  std::vector<std::pair<int, int>> e;
  int offset = 0;
  for (const Graph& g : gs) {
    for (const Edge& x : g.edges()) e.emplace_back(x.u + offset, x.v + offset);
    offset += g.vertex_count();
  }
  return Graph::from_pairs(offset, e);
}

inline Graph disjoint_union(std::initializer_list<Graph> gs) {
  return disjoint_union(std::span<const Graph>(gs.begin(), gs.size()));
}

/// k disjoint copies of g.
inline Graph copies(int k, const Graph& g) {
  std::vector<Graph> gs(static_cast<std::size_t>(std::max(k, 0)), g);
  return disjoint_union(gs);
}

/// Image of g under the vertex map old -> perm[old]; perm must be a permutation of 0..n-1.
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  std::vector<std::pair<int, int>> e;
  e.reserve(g.edges().size());
  for (const Edge& x : g.edges()) e.emplace_back(perm[static_cast<std::size_t>(x.u)], perm[static_cast<std::size_t>(x.v)]);
  return Graph::from_pairs(g.vertex_count(), e);
}

/// Spanning subgraph on the given edge indices, isolated vertices dropped.
inline Graph edge_subgraph(const Graph& g, IndexSet edge_ids) {
  std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
  IndexSet used;
  for (int i : edge_ids) used = used | IndexSet{g.edge(i).u, g.edge(i).v};
  int next = 0;
  for (int v : used) remap[static_cast<std::size_t>(v)] = next++;
  std::vector<std::pair<int, int>> e;
  for (int i : edge_ids) e.emplace_back(remap[static_cast<std::size_t>(g.edge(i).u)], remap[static_cast<std::size_t>(g.edge(i).v)]);
  return Graph::from_pairs(next, e);
}

/// g with isolated vertices removed (remaining vertices keep their relative order).
inline Graph strip_isolated(const Graph& g) {
  if (!g.has_isolated_vertices()) return g;
  return edge_subgraph(g, IndexSet::range(g.edge_count()));
}

// ---------------------------------------------------------------------------
// Matchings

/// All matchings, including the empty one, ordered by size and then lexicographically.
inline std::vector<Matching> enumerate_matchings(const Graph& g) {
  std::vector<Matching> out;
  const int m = g.edge_count();
  // Depth-first over edge indices; `blocked` holds edges incident to the current matching.
  auto rec = [&](auto&& self, int next, Matching cur, IndexSet blocked) -> void {
    out.push_back(cur);
    for (int i = next; i < m; ++i) {
      if (blocked.contains(i)) continue;
      self(self, i + 1, cur.with(i), blocked | g.incident_edges(i));
    }
  };
  rec(rec, 0, Matching{}, IndexSet{});
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

inline bool is_maximal_matching(const Graph& g, Matching m) {
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!g.incident_edges(i).intersects(m)) return false;
  }
  return true;
}

inline std::vector<Matching> maximal_matchings(const Graph& g) {
  std::vector<Matching> out;
  for (Matching m : enumerate_matchings(g)) {
    if (is_maximal_matching(g, m)) out.push_back(m);
  }
  return out;
}

/// Size of a maximum matching (exhaustive; graphs here have at most 64 edges but few matchings).
inline int matching_number(const Graph& g) {
  int best = 0;
  const int m = g.edge_count();
  auto rec = [&](auto&& self, int next, int size, IndexSet blocked) -> void {
    best = std::max(best, size);
    if (size + (m - next) <= best) return;
    for (int i = next; i < m; ++i) {
      if (!blocked.contains(i)) self(self, i + 1, size + 1, blocked | g.incident_edges(i));
    }
  };
  rec(rec, 0, 0, IndexSet{});
  return best;
}

inline bool is_equimatchable(const Graph& g) {
  const auto maxi = maximal_matchings(g);
  return std::all_of(maxi.begin(), maxi.end(), [&](Matching m) { return m.size() == maxi.front().size(); });
}

// ---------------------------------------------------------------------------
// Subgraphs and components

struct AvoidingSubgraph {
  Graph graph;
  /// edge_map[old edge index] = new edge index, or -1 when the edge was removed.
  std::vector<int> edge_map;
};

/// Subgraph spanned by the edges not incident to any edge of m, isolated vertices dropped.
inline AvoidingSubgraph subgraph_avoiding(const Graph& g, Matching m) {
  if (!g.is_matching(m)) throw Error(Errc::NotAMatching, "edge set is not a matching of the graph");
  const IndexSet covered = g.vertices_of(m);
  IndexSet keep;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!covered.contains(g.edge(i).u) && !covered.contains(g.edge(i).v)) keep.insert(i);
  }
  AvoidingSubgraph out;
  out.graph = edge_subgraph(g, keep);
  out.edge_map.assign(static_cast<std::size_t>(g.edge_count()), -1);
  // edge_subgraph preserves vertex order, so the sorted order of kept edges is preserved too.
  int next = 0;
  for (int i : keep) out.edge_map[static_cast<std::size_t>(i)] = next++;
  return out;
}

struct Components {
  std::vector<Graph> components;       // each relabeled to 0..k-1 in increasing vertex order
  std::vector<IndexSet> vertex_sets;   // original vertices of each component
  std::vector<int> isolated_vertices;
};

inline Components connected_components(const Graph& g) {
  Components out;
  IndexSet seen;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen.contains(s)) continue;
    if (g.neighbors(s).empty()) {
      out.isolated_vertices.push_back(s);
      seen.insert(s);
      continue;
    }
    IndexSet comp{s};
    IndexSet frontier{s};
    while (!frontier.empty()) {
      IndexSet next;
      for (int v : frontier) next = next | g.neighbors(v);
      frontier = next - comp;
      comp = comp | next;
    }
    seen = seen | comp;
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    int k = 0;
    for (int v : comp) pos[static_cast<std::size_t>(v)] = k++;
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : g.edges()) {
      if (comp.contains(e.u)) pairs.emplace_back(pos[static_cast<std::size_t>(e.u)], pos[static_cast<std::size_t>(e.v)]);
    }
    out.components.push_back(Graph::from_pairs(k, pairs));
    out.vertex_sets.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  const Components c = connected_components(g);
  return c.components.size() + c.isolated_vertices.size() <= 1;
}

}  // namespace mcx
