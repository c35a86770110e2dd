#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcx/canonical.hpp"
#include "mcx/catalog.hpp"
#include "mcx/complex.hpp"
#include "mcx/error.hpp"
#include "mcx/graph.hpp"
#include "mcx/graph_io.hpp"
#include "mcx/homology.hpp"
#include "mcx/manifold.hpp"

namespace mcx {

inline constexpr int kGuardMaxEdges = 12;
inline constexpr int kGuardMaxVertices = 10;

struct EnumerationSpec {
  int max_edges = kGuardMaxEdges;
  int max_vertices = kGuardMaxVertices;
  bool connected_only = false;
  int max_matching_number = -1;  // prune graphs whose matching number exceeds this; -1 = off
  int workers = 1;
  bool force = false;
};

namespace detail {

inline void check_guard(int max_edges, int max_vertices, bool force) {
  if (max_edges < 1 || max_vertices < 2) throw Error(Errc::InvalidParameter, "need max_edges >= 1 and max_vertices >= 2");
  if (max_vertices > Graph::kMaxVertices) throw Error(Errc::TooLarge, "max_vertices above 64");
  if (!force && (max_edges > kGuardMaxEdges || max_vertices > kGuardMaxVertices)) {
    throw Error(Errc::GuardExceeded, "search bounds above 12 edges / 10 vertices need an explicit override");
  }
}

inline int matching_number_rows(const std::uint64_t* rows, std::uint64_t alive) {
  // Lowest vertex with a live neighbor is either unmatched or matched to one of them.
  while (alive != 0) {
    const int v = std::countr_zero(alive);
    const std::uint64_t nb = rows[v] & alive;
    if (nb == 0) {
      alive &= alive - 1;
      continue;
    }
    const std::uint64_t rest = alive & ~(std::uint64_t{1} << v);
    int best = matching_number_rows(rows, rest);
    for (int u : IndexSet(nb)) best = std::max(best, 1 + matching_number_rows(rows, rest & ~(std::uint64_t{1} << u)));
    return best;
  }
  return 0;
}

inline std::string graph6_of_rows(std::span<const std::uint64_t> rows) {
  std::vector<std::pair<int, int>> pairs;
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i)
    for (int j : IndexSet(rows[static_cast<std::size_t>(i)] & ~((std::uint64_t{2} << i) - 1))) pairs.emplace_back(i, j);
  return to_graph6(Graph::from_pairs(n, pairs));
}

inline std::string canonical_key(std::span<const std::uint64_t> rows) {
  Canonicalizer c(rows, {});
  return graph6_of_rows(c.best_rows());
}

inline std::vector<std::uint64_t> rows_of(const std::string& g6) {
  const Graph g = from_graph6(g6);
  return {g.adjacency().begin(), g.adjacency().end()};
}

// All one-edge extensions of a canonical graph that stay within the bounds.
inline void extend(const std::string& g6, const EnumerationSpec& spec, std::unordered_set<std::string>& out) {
  std::vector<std::uint64_t> rows = rows_of(g6);
  const int n = static_cast<int>(rows.size());
  auto offer = [&](std::vector<std::uint64_t>& r) {
    if (spec.max_matching_number >= 0) {
      const std::uint64_t all = r.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r.size()) - 1;
      if (matching_number_rows(r.data(), all) > spec.max_matching_number) return;
    }
    out.insert(canonical_key(r));
  };
  auto toggle = [](std::vector<std::uint64_t>& r, int a, int b) {
    r[static_cast<std::size_t>(a)] ^= std::uint64_t{1} << b;
    r[static_cast<std::size_t>(b)] ^= std::uint64_t{1} << a;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if ((rows[static_cast<std::size_t>(a)] >> b) & 1U) continue;
      toggle(rows, a, b);
      offer(rows);
      toggle(rows, a, b);
    }
  }
  if (n + 1 <= spec.max_vertices) {
    rows.push_back(0);
    for (int a = 0; a < n; ++a) {
      toggle(rows, a, n);
      offer(rows);
      toggle(rows, a, n);
    }
    rows.pop_back();
  }
  if (!spec.connected_only && n + 2 <= spec.max_vertices) {
    rows.push_back(std::uint64_t{1} << (n + 1));
    rows.push_back(std::uint64_t{1} << n);
    offer(rows);
  }
}

// Runs fn(i) for i in [0, count) on up to `workers` threads, in contiguous chunks.
template <typename Fn>
void parallel_chunks(std::size_t count, int workers, Fn&& fn) {
  const std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  if (w == 1 || count < 2) {
    fn(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  const std::size_t chunk = (count + w - 1) / w;
  for (std::size_t t = 0; t < w; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&fn, lo, hi, t] { fn(lo, hi, t); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace detail

/// Canonical graph6 strings of every isomorphism class of graphs without isolated
/// vertices within the bounds, ordered by (edge count, graph6).
///
/// Level m+1 is generated from level m by adding one edge (between existing vertices,
/// to one new vertex, or between two new ones) and deduplicated by canonical form.
/// Every graph with m+1 edges arises this way: deleting a suitable edge and any
/// vertices it isolates gives a graph at level m (a leaf edge of a spanning tree
/// keeps a connected graph connected). Matching-number pruning is sound because
/// deleting edges never increases the matching number.
inline std::vector<std::pair<int, std::string>> enumerate_canonical(const EnumerationSpec& spec) {
  detail::check_guard(spec.max_edges, spec.max_vertices, spec.force);
  std::vector<std::pair<int, std::string>> out;
  std::vector<std::string> level{to_graph6(path(2))};
  for (int m = 1; m <= spec.max_edges && !level.empty(); ++m) {
    for (const auto& g6 : level) out.emplace_back(m, g6);
    if (m == spec.max_edges) break;
    std::vector<std::unordered_set<std::string>> local(static_cast<std::size_t>(std::max(1, spec.workers)));
    detail::parallel_chunks(level.size(), spec.workers, [&](std::size_t lo, std::size_t hi, std::size_t t) {
      for (std::size_t i = lo; i < hi; ++i) detail::extend(level[i], spec, local[t]);
    });
    std::set<std::string> merged;
    for (auto& s : local) merged.insert(s.begin(), s.end());
    level.assign(merged.begin(), merged.end());
  }
  return out;
}

/// Decoded form of enumerate_canonical.
inline std::vector<Graph> enumerate_graphs(const EnumerationSpec& spec) {
  std::vector<Graph> out;
  for (const auto& [m, g6] : enumerate_canonical(spec)) out.push_back(from_graph6(g6));
  return out;
}

/// C4, K4, or at least two edges with one edge meeting all others.
inline bool disconnection_trichotomy(const Graph& input) {
  const Graph g = strip_isolated(input);
  const int m = g.edge_count();
  if (g.vertex_count() == 4 && m == 6) return true;
  if (g.vertex_count() == 4 && m == 4 && isomorphic(g, cycle(4))) return true;
  if (m < 2) return false;
  for (int i = 0; i < m; ++i)
    if (g.incident_edges(i).size() == m) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Searches

struct SearchSpec {
  int max_edges = kGuardMaxEdges;
  int max_vertices = kGuardMaxVertices;
  bool connected_only = false;
  std::uint32_t p = 2;
  std::optional<std::uint32_t> cross_check_prime = 3;
  std::string target = "closed-2-manifold";
  bool force = false;
  int workers = 1;
};

struct TargetInfo {
  std::string name;
  int dimension = -1;  // of the matching complex; -1 when the target does not fix it
  // Which verdicts count as hits.
  bool sphere_only = false;
  bool closed = false;
  bool with_boundary = false;
  int graph_connectivity = 0;  // 0 any, 1 connected graphs only, 2 disconnected only
  bool disconnected_complex = false;
};

inline const std::vector<TargetInfo>& search_targets() {
  static const std::vector<TargetInfo> targets = {
      {"1-sphere", 1, true, true, false, 0, false},
      {"2-sphere", 2, true, true, false, 0, false},
      {"closed-2-manifold", 2, false, true, false, 0, false},
      {"2-manifold-with-boundary", 2, false, false, true, 0, false},
      {"connected-2-manifold-with-boundary", 2, false, false, true, 1, false},
      {"disconnected-2-manifold-with-boundary", 2, false, false, true, 2, false},
      {"disconnected-complex", -1, false, false, false, 0, true},
  };
  return targets;
}

inline const TargetInfo& target_info(std::string_view name) {
  for (const auto& t : search_targets())
    if (t.name == name) return t;
  throw Error(Errc::InvalidParameter, "unknown search target '" + std::string(name) + "'");
}

struct ExpectedGraph {
  std::string name;
  std::string graph6;  // canonical
  int vertices = 0;
  int edges = 0;
  std::optional<ManifoldClass> cls;
};

/// The graphs a target should find within the bounds, from the catalog. Empty for
/// "disconnected-complex", whose expectation is a predicate (disconnection_trichotomy).
inline std::vector<ExpectedGraph> expected_hits(const SearchSpec& spec) {
  const TargetInfo& t = target_info(spec.target);
  std::vector<std::pair<std::string, ManifoldClass>> named;
  const ManifoldClass s1{ManifoldKind::Sphere, 1};
  const ManifoldClass s2{ManifoldKind::Sphere, 2};
  if (t.name == "1-sphere") named = {{"2P3", s1}, {"C5", s1}, {"K32", s1}};
  if (t.name == "2-sphere" || t.name == "closed-2-manifold") named = {{"3P3", s2}, {"P3+C5", s2}, {"P3+K32", s2}};
  if (t.name == "closed-2-manifold") named.emplace_back("K43", ManifoldClass{ManifoldKind::Torus, 2});
  if (t.with_boundary) {
    for (const auto& e : exceptional_table()) {
      if (e.expected.dimension != 2 || e.expected.kind == ManifoldKind::Torus) continue;
      if ((t.graph_connectivity == 1 && !e.connected_family) || (t.graph_connectivity == 2 && e.connected_family)) continue;
      named.emplace_back(e.name, e.expected);
    }
  }
  std::vector<ExpectedGraph> out;
  for (const auto& [name, cls] : named) {
    const Graph g = graph_by_name(name);
    if (g.edge_count() > spec.max_edges || g.vertex_count() > spec.max_vertices) continue;
    if (spec.connected_only && !is_connected(g)) continue;
    out.push_back({name, canonical_form(g, Graph::kMaxVertices), g.vertex_count(), g.edge_count(), cls});
  }
  std::sort(out.begin(), out.end(), [](const ExpectedGraph& a, const ExpectedGraph& b) {
    return std::tie(a.edges, a.graph6) < std::tie(b.edges, b.graph6);
  });
  return out;
}

struct SearchHit {
  std::string graph6;  // canonical
  int vertices = 0;
  int edges = 0;
  ManifoldClass cls;
  ManifoldStatus status = ManifoldStatus::NotManifold;
  BettiVector betti;
  std::optional<BettiVector> cross_betti;
  std::string expected_name;  // catalog name when the hit is expected
};

struct Anomaly {
  std::string graph6;
  std::string kind;  // "field-disagreement" or "vertex-bound"
  std::string detail;
};

enum class SearchVerdict { Match, MissingHit, ExtraHit, ClassMismatch };

constexpr std::string_view to_string(SearchVerdict v) noexcept {
  switch (v) {
    case SearchVerdict::Match: return "Match";
    case SearchVerdict::MissingHit: return "MissingHit";
    case SearchVerdict::ExtraHit: return "ExtraHit";
    case SearchVerdict::ClassMismatch: return "ClassMismatch";
  }
  return "?";
}

struct SearchReport {
  SearchSpec spec;
  std::vector<SearchHit> hits;  // sorted by (edges, graph6)
  std::vector<ExpectedGraph> expected;
  std::vector<std::string> missing;  // graph6 of expected graphs not hit
  std::vector<std::string> extra;    // graph6 of hits not expected
  std::vector<std::string> class_mismatch;
  SearchVerdict verdict = SearchVerdict::Match;
  std::vector<Anomaly> anomalies;
  std::size_t graphs_enumerated = 0;
  std::size_t graphs_checked = 0;
  double elapsed_ms = 0;
  std::string note;
};

namespace detail {

struct Evaluation {
  bool checked = false;
  bool hit = false;
  bool expected_by_predicate = false;
  SearchHit record;
  std::vector<Anomaly> anomalies;
};

inline Evaluation evaluate(const std::string& g6, const TargetInfo& t, const SearchSpec& spec) {
  Evaluation ev;
  const Graph g = from_graph6(g6);
  const bool g_connected = is_connected(g);
  if (t.graph_connectivity == 1 && !g_connected) return ev;
  if (t.graph_connectivity == 2 && g_connected) return ev;
  if (t.disconnected_complex) ev.expected_by_predicate = disconnection_trichotomy(g);
  if (t.dimension >= 0 && matching_number(g) != t.dimension + 1) return ev;
  if (t.dimension >= 0 && !is_equimatchable(g)) return ev;  // manifolds are pure

  ev.checked = true;
  const FieldPrime p(spec.p);
  const Complex c = matching_complex(g);
  const ManifoldVerdict v = check_manifold(c, p);
  std::optional<ManifoldVerdict> cv;
  if (spec.cross_check_prime) {
    cv = check_manifold(c, FieldPrime(*spec.cross_check_prime));
    if (cv->status != v.status || cv->dimension != v.dimension) {
      ev.anomalies.push_back({g6, "field-disagreement",
                              std::string(to_string(v.status)) + " at p=" + std::to_string(spec.p) + ", " +
                                  std::string(to_string(cv->status)) + " at p=" + std::to_string(*spec.cross_check_prime)});
    }
  }

  if (t.disconnected_complex) {
    ev.hit = !is_connected(c);
  } else if (v.dimension == t.dimension) {
    if (t.closed) ev.hit = v.status == ManifoldStatus::ClosedManifold;
    if (t.with_boundary) ev.hit = v.status == ManifoldStatus::ManifoldWithBoundary;
  }
  const FieldPrime second(spec.cross_check_prime.value_or(spec.p == 3 ? 2 : 3));
  const ManifoldClass cls = classify(c, v, {p, second});
  if (t.sphere_only && cls.kind != ManifoldKind::Sphere) ev.hit = false;
  if (!ev.hit) return ev;

  SearchHit& h = ev.record;
  h.graph6 = g6;
  h.vertices = g.vertex_count();
  h.edges = g.edge_count();
  h.cls = cls;
  h.status = v.status;
  h.betti = betti_reduced(c, p);
  if (spec.cross_check_prime) h.cross_betti = betti_reduced(c, FieldPrime(*spec.cross_check_prime));
  // The bound concerns connected manifolds; m disjoint points form a closed 0-manifold.
  if (v.is_manifold() && is_connected(c)) {
    const int d = v.dimension;
    const int bound = d == 2 ? 12 : 3 * d + 3;
    if (c.vertex_count() > bound) {
      ev.anomalies.push_back({g6, "vertex-bound", std::to_string(c.vertex_count()) + " complex vertices exceed " + std::to_string(bound)});
    }
  }
  return ev;
}

}  // namespace detail

/// Exhaustive search for the target over all graphs within the bounds, compared with
/// the catalog's expectations.
inline SearchReport run_search(const SearchSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const TargetInfo& t = target_info(spec.target);
  static_cast<void>(FieldPrime(spec.p));
  if (spec.cross_check_prime) static_cast<void>(FieldPrime(*spec.cross_check_prime));
  detail::check_guard(spec.max_edges, spec.max_vertices, spec.force);

  EnumerationSpec es;
  es.max_edges = spec.max_edges;
  es.max_vertices = spec.max_vertices;
  es.connected_only = spec.connected_only || t.graph_connectivity == 1;
  es.max_matching_number = t.dimension >= 0 ? t.dimension + 1 : -1;
  es.workers = spec.workers;
  es.force = spec.force;
  const auto graphs = enumerate_canonical(es);

  SearchReport r;
  r.spec = spec;
  r.graphs_enumerated = graphs.size();
  std::vector<detail::Evaluation> evals(graphs.size());
  detail::parallel_chunks(graphs.size(), spec.workers, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t i = lo; i < hi; ++i) evals[i] = detail::evaluate(graphs[i].second, t, spec);
  });

  std::set<std::string> hit_set;
  std::set<std::string> expected_set;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto& ev = evals[i];
    r.graphs_checked += ev.checked ? 1 : 0;
    r.anomalies.insert(r.anomalies.end(), ev.anomalies.begin(), ev.anomalies.end());
    if (ev.expected_by_predicate) {
      expected_set.insert(graphs[i].second);
      const Graph g = from_graph6(graphs[i].second);
      r.expected.push_back({"", graphs[i].second, g.vertex_count(), g.edge_count(), std::nullopt});
    }
    if (ev.hit) {
      hit_set.insert(ev.record.graph6);
      r.hits.push_back(std::move(ev.record));
    }
  }
  if (!t.disconnected_complex) {
    r.expected = expected_hits(spec);
    for (const auto& e : r.expected) expected_set.insert(e.graph6);
  }
  for (auto& h : r.hits) {
    for (const auto& e : r.expected) {
      if (e.graph6 != h.graph6) continue;
      h.expected_name = e.name;
      if (e.cls && !(*e.cls == h.cls)) r.class_mismatch.push_back(h.graph6);
    }
  }
  for (const auto& e : expected_set)
    if (!hit_set.contains(e)) r.missing.push_back(e);
  for (const auto& h : hit_set)
    if (!expected_set.contains(h)) r.extra.push_back(h);
  if (!r.missing.empty()) {
    r.verdict = SearchVerdict::MissingHit;
  } else if (!r.extra.empty()) {
    r.verdict = SearchVerdict::ExtraHit;
  } else if (!r.class_mismatch.empty()) {
    r.verdict = SearchVerdict::ClassMismatch;
  }
  r.note = "bounded search: confirms the expected list among graphs with at most " + std::to_string(spec.max_edges) +
           " edges and " + std::to_string(spec.max_vertices) + " vertices; larger graphs are not examined";
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------
// Randomized property suite

struct PropertyFailure {
  std::string property;
  std::uint64_t trial_seed = 0;
  std::string graph6;
  std::string detail;
};

struct PropertyReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<std::pair<std::string, int>> checked;  // property -> number of checks
  std::vector<PropertyFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "flag",           "link_lemma",           "join_lemma", "no_induced_p6", "connected_diameter",
      "disconnection_trichotomy", "equimatchable_pure", "avoiding_nonincident",
  };
  return names;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace detail {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

}  // namespace detail

/// G(n, m) with n in [2, 9] and m in [1, min(12, n(n-1)/2)], redrawn until no vertex is isolated.
inline Graph sample_graph(std::mt19937_64& rng, int max_n = 9, int max_m = 12) {
  while (true) {
    const int n = static_cast<int>(detail::draw(rng, 2, static_cast<std::uint64_t>(max_n)));
    const int pairs = n * (n - 1) / 2;
    const int m = static_cast<int>(detail::draw(rng, 1, static_cast<std::uint64_t>(std::min(max_m, pairs))));
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
    for (int i = 0; i < m; ++i) std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(detail::draw(rng, static_cast<std::uint64_t>(i), all.size() - 1))]);
    all.resize(static_cast<std::size_t>(m));
    Graph g = Graph::from_pairs(n, all);
    if (!g.has_isolated_vertices()) return g;
  }
}

/// A random face of M(g): a matching built from a random edge order, cut to a random size.
inline Matching sample_matching(std::mt19937_64& rng, const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
  for (int i = 0; i < g.edge_count(); ++i) order[static_cast<std::size_t>(i)] = i;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) std::swap(order[i], order[detail::draw(rng, i, order.size() - 1)]);
  std::vector<int> picked;
  IndexSet blocked;
  for (int e : order) {
    if (blocked.contains(e)) continue;
    picked.push_back(e);
    blocked = blocked | g.incident_edges(e);
  }
  const auto keep = detail::draw(rng, 0, picked.size());
  Matching m;
  for (std::size_t i = 0; i < keep; ++i) m.insert(picked[i]);
  return m;
}

namespace detail {

inline std::vector<std::vector<int>> sorted_facet_labels(const Complex& c) {
  auto f = c.facet_labels();
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace detail

/// Checks the structural facts about matching complexes on random graphs. Each trial
/// uses its own seed splitmix64(seed + trial), reported with any failure.
inline PropertyReport property_suite(std::uint64_t seed, int trials, std::span<const std::string> only = {}) {
  PropertyReport rep;
  rep.seed = seed;
  rep.trials = trials;
  const auto& names = property_names();
  auto enabled = [&](const std::string& n) { return only.empty() || std::find(only.begin(), only.end(), n) != only.end(); };
  std::vector<int> counts(names.size(), 0);
  auto index_of = [&](const std::string& n) {
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin());
  };
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t ts = splitmix64(seed + static_cast<std::uint64_t>(trial));
    std::mt19937_64 rng(ts);
    const Graph g = sample_graph(rng);
    const Graph h = sample_graph(rng, 5, 6);
    const Matching sigma = sample_matching(rng, g);
    const Complex mg = matching_complex(g);
    const std::string g6 = to_graph6(g);
    auto record = [&](const std::string& name, bool ok, std::string detail) {
      ++counts[index_of(name)];
      if (!ok) rep.failures.push_back({name, ts, g6, std::move(detail)});
    };

    if (enabled("flag")) record("flag", is_flag(mg), "matching complex has a missing face of size > 2");
    if (enabled("link_lemma")) {
      const AvoidingSubgraph av = subgraph_avoiding(g, sigma);
      std::vector<int> back(static_cast<std::size_t>(av.graph.edge_count()));
      for (std::size_t old = 0; old < av.edge_map.size(); ++old)
        if (av.edge_map[old] >= 0) back[static_cast<std::size_t>(av.edge_map[old])] = static_cast<int>(old);
      const Complex sub = matching_complex(av.graph);
      std::vector<std::vector<int>> mapped;
      for (const auto& f : sub.facet_labels()) {
        std::vector<int> m;
        for (int x : f) m.push_back(back[static_cast<std::size_t>(x)]);
        std::sort(m.begin(), m.end());
        mapped.push_back(m);
      }
      std::sort(mapped.begin(), mapped.end());
      const auto lk = detail::sorted_facet_labels(link(mg, sigma));
      record("link_lemma", lk == mapped, "link of face " + std::to_string(sigma.bits()) + " differs from the avoiding subgraph's complex");
    }
    if (enabled("join_lemma")) {
      const Complex joined = join(mg, matching_complex(h));
      const Complex direct = matching_complex(disjoint_union({g, h}));
      record("join_lemma", detail::sorted_facet_labels(joined) == detail::sorted_facet_labels(direct),
             "join differs from the complex of the disjoint union with " + to_graph6(h));
    }
    if (enabled("no_induced_p6")) record("no_induced_p6", !has_induced_path6(mg), "1-skeleton has an induced 6-vertex path");
    const bool connected = is_connected(mg);
    if (enabled("connected_diameter") && connected) {
      const auto d = diameter(mg);
      record("connected_diameter", d && *d <= 4, "diameter " + (d ? std::to_string(*d) : std::string("inf")));
    }
    if (enabled("disconnection_trichotomy")) {
      record("disconnection_trichotomy", connected != disconnection_trichotomy(g),
             connected ? "graph has the disconnection form but its complex is connected" : "disconnected complex outside the three forms");
    }
    if (enabled("equimatchable_pure")) record("equimatchable_pure", is_equimatchable(g) == is_pure(mg), "equimatchable and purity disagree");
    if (enabled("avoiding_nonincident")) {
      const AvoidingSubgraph av = subgraph_avoiding(g, sigma);
      bool ok = true;
      for (std::size_t old = 0; old < av.edge_map.size(); ++old) {
        if (av.edge_map[old] < 0) continue;
        const IndexSet meets = g.incident_edges(static_cast<int>(old));
        if (meets.intersects(sigma)) ok = false;
      }
      record("avoiding_nonincident", ok, "surviving edge meets the matching");
    }
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    if (enabled(names[i])) rep.checked.emplace_back(names[i], counts[i]);
  return rep;
}

}  // namespace mcx
