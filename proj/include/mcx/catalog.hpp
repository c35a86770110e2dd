#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcx/canonical.hpp"
#include "mcx/error.hpp"
#include "mcx/graph.hpp"
#include "mcx/manifold.hpp"

namespace mcx {

enum class BasicKind { P2, P3, C5, K32, Gamma, Spider };

/// A connected graph whose matching complex is a basic sphere (P3, C5, K32) or
/// basic ball (P2, Gamma, spiders).
struct BasicGraphKind {
  BasicKind kind = BasicKind::P2;
  int legs = 0;  // spiders only

  bool is_sphere() const noexcept { return kind == BasicKind::P3 || kind == BasicKind::C5 || kind == BasicKind::K32; }

  /// Number of vertices of a facet of the matching complex (its dimension plus one).
  int facet_size() const noexcept {
    switch (kind) {
      case BasicKind::P2:
      case BasicKind::P3: return 1;
      case BasicKind::C5:
      case BasicKind::K32:
      case BasicKind::Gamma: return 2;
      case BasicKind::Spider: return legs;
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case BasicKind::P2: return "P2";
      case BasicKind::P3: return "P3";
      case BasicKind::C5: return "C5";
      case BasicKind::K32: return "K32";
      case BasicKind::Gamma: return "Gamma";
      case BasicKind::Spider: return "Sp" + std::to_string(legs);
    }
    return "?";
  }

  /// Sp2 is the path on five vertices.
  std::string note() const { return (kind == BasicKind::Spider && legs == 2) ? "isomorphic to P5" : ""; }

  Graph graph() const;

  bool operator==(const BasicGraphKind&) const = default;
  auto operator<=>(const BasicGraphKind&) const = default;
};

inline Graph BasicGraphKind::graph() const {
  switch (kind) {
    case BasicKind::P2: return path(2);
    case BasicKind::P3: return path(3);
    case BasicKind::C5: return cycle(5);
    case BasicKind::K32: return complete_bipartite(3, 2);
    case BasicKind::Gamma: return banner();
    case BasicKind::Spider: return spider(legs);
  }
  return Graph{};
}

namespace detail {

// Center of a spider: degree k = (n-1)/2 >= 2, every neighbor has degree 2 and a leaf.
inline std::optional<int> spider_legs(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 5 || n % 2 == 0 || g.edge_count() != n - 1) return std::nullopt;
  const int k = (n - 1) / 2;
  for (int c = 0; c < n; ++c) {
    if (g.degree(c) != k) continue;
    bool ok = true;
    IndexSet seen = g.neighbors(c).with(c);
    for (int u : g.neighbors(c)) {
      if (g.degree(u) != 2) {
        ok = false;
        break;
      }
      const IndexSet far = g.neighbors(u).without(c);
      const int leaf = far.min();
      if (far.size() != 1 || g.degree(leaf) != 1 || seen.contains(leaf)) {
        ok = false;
        break;
      }
      seen = seen.with(leaf);
    }
    if (ok && seen.size() == n) return k;
  }
  return std::nullopt;
}

}  // namespace detail

/// Exact recognition of the basic sphere and ball graphs.
inline std::optional<BasicGraphKind> recognize_basic(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n == 0 || g.has_isolated_vertices()) return std::nullopt;
  if (n == 2 && m == 1) return BasicGraphKind{BasicKind::P2};
  if (n == 3 && m == 2) return BasicGraphKind{BasicKind::P3};
  if (n == 5 && (m == 5 || m == 6)) {
    const std::string cf = canonical_form(g);
    if (cf == canonical_form(cycle(5))) return BasicGraphKind{BasicKind::C5};
    if (cf == canonical_form(complete_bipartite(3, 2))) return BasicGraphKind{BasicKind::K32};
    if (cf == canonical_form(banner())) return BasicGraphKind{BasicKind::Gamma};
  }
  if (auto k = detail::spider_legs(g)) return BasicGraphKind{BasicKind::Spider, *k};
  return std::nullopt;
}

struct ExceptionalEntry {
  std::string name;
  Graph graph;
  ManifoldClass expected;
  std::string description;
  std::string vertex_numbering;
  bool connected_family = true;  // the connected-graph table; false for the disconnected-ball table
};

inline const std::vector<ExceptionalEntry>& exceptional_table() {
  static const std::vector<ExceptionalEntry> table = [] {
    std::vector<ExceptionalEntry> t;
    const ManifoldClass ball2{ManifoldKind::Ball, 2};
    const ManifoldClass moebius{ManifoldKind::MoebiusStrip, 2};
    const ManifoldClass tmd{ManifoldKind::TorusMinusDisk, 2};
    t.push_back({"K43", complete_bipartite(4, 3), {ManifoldKind::Torus, 2}, "triangulated torus",
                 "parts {0,1,2,3} and {4,5,6}"});
    t.push_back({"Sp3", spider(3), ball2, "spider with three legs", "center 0, legs 0-1-2, 0-3-4, 0-5-6"});
    t.push_back({"annulus",
                 Graph::from_pairs(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}}),
                 {ManifoldKind::Annulus, 2}, "two 4-cycles sharing a vertex",
                 "0=(3,2) 1=(1,2) 2=(0,0) 3=(2,0) 4=(5,2) 5=(6,0) 6=(4,0)"});
    t.push_back({"C7", cycle(7), moebius, "7-cycle", "cyclic order 0..6"});
    const std::string heptagon = "0=(0,0) 1=(1,0) 2=(2,0) 3=(3,1) 4=(2,2) 5=(1,2) 6=(0,2)";
    t.push_back({"moebius_8e", Graph::from_pairs(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {1, 5}}),
                 moebius, "7-cycle with one chord", heptagon});
    t.push_back({"moebius_9e",
                 Graph::from_pairs(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {1, 5}, {0, 4}}), moebius,
                 "7-cycle with two chords", heptagon});
    t.push_back({"moebius_10e",
                 Graph::from_pairs(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}, {6, 0}, {0, 4}, {1, 5}}),
                 moebius, "7 vertices, 10 edges", heptagon});
    t.push_back({"torus_minus_disk_9e",
                 Graph::from_pairs(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}, {1, 6}, {0, 5}}), tmd,
                 "7 vertices, 9 edges", "0=(0,4.8) 1=(0,2) 2=(2,0) 3=(4,2) 4=(4,4.8) 5=(2,6.8) 6=(2,4)"});
    t.push_back({"torus_minus_disk_10e",
                 Graph::from_pairs(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 2}, {1, 4}, {4, 6}}),
                 tmd, "hexagon with an apex over one side", "0=(0,0) 1=(2,0) 2=(4,0) 3=(3,1) 4=(2,2) 5=(1,1) 6=(2,4)"});
    t.push_back({"torus_minus_disk_11e",
                 Graph::from_pairs(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 5}, {5, 6}, {6, 3}, {3, 0}, {1, 4}}),
                 tmd, "7 vertices, 11 edges", "0=(0,0) 1=(1.5,0) 2=(3,0) 3=(3,2) 4=(1.5,2) 5=(0,2) 6=(1.5,3)"});

    // Disconnected graphs whose matching complex is a 2-ball.
    auto ball = [&](std::string name, std::initializer_list<Graph> parts, std::string description) {
      t.push_back({std::move(name), disjoint_union(parts), ball2, std::move(description), "components in the order of the name", false});
    };
    const Graph p2 = path(2);
    const Graph p3 = path(3);
    ball("3P2", {p2, p2, p2}, "triangle");
    ball("2P2+P3", {p2, p2, p3}, "two triangles sharing an edge");
    ball("P2+P5", {p2, path(5)}, "chain of three triangles sharing a vertex");
    ball("P2+Gamma", {p2, banner()}, "chain of four triangles sharing a vertex");
    ball("P2+2P3", {p2, p3, p3}, "triangulated square");
    ball("P2+C5", {p2, cycle(5)}, "triangulated pentagon");
    ball("P2+K32", {p2, complete_bipartite(3, 2)}, "triangulated hexagon");
    ball("P3+P5", {p3, path(5)}, "suspension over a path of three edges");
    ball("P3+Gamma", {p3, banner()}, "suspension over a path of four edges");
    return t;
  }();
  return table;
}

enum class PredictionSource { Basic, Exceptional, Degenerate, None };

constexpr std::string_view to_string(PredictionSource s) noexcept {
  switch (s) {
    case PredictionSource::Basic: return "Basic";
    case PredictionSource::Exceptional: return "Exceptional";
    case PredictionSource::Degenerate: return "Degenerate";
    case PredictionSource::None: return "NoPrediction";
  }
  return "?";
}

struct Prediction {
  PredictionSource source = PredictionSource::None;
  std::vector<BasicGraphKind> decomposition;  // sorted, when source == Basic
  std::string exceptional_name;
  ManifoldClass predicted_class;
  int predicted_dimension = -1;
  std::string note;
};

/// Dimension of the matching complex of a disjoint union of basic graphs: the join
/// of one sphere or ball per component.
inline int basic_union_dimension(const std::vector<BasicGraphKind>& parts) {
  int d = -1;
  for (const auto& b : parts) d += b.facet_size();
  return d;
}

/// Closed-form expectation for M(G): disjoint unions of basic graphs, the exceptional
/// tables, or the degenerate disconnected forms.
inline Prediction predict(const Graph& input) {
  const Graph g = strip_isolated(input);
  Prediction pr;
  const Components comps = connected_components(g);
  std::vector<BasicGraphKind> parts;
  bool all_basic = true;
  for (const Graph& c : comps.components) {
    auto b = recognize_basic(c);
    if (!b) {
      all_basic = false;
      break;
    }
    parts.push_back(*b);
  }
  if (all_basic) {
    std::sort(parts.begin(), parts.end());
    pr.source = PredictionSource::Basic;
    pr.decomposition = parts;
    pr.predicted_dimension = basic_union_dimension(parts);
    const bool any_ball = std::any_of(parts.begin(), parts.end(), [](const BasicGraphKind& b) { return !b.is_sphere(); });
    pr.predicted_class = {any_ball ? ManifoldKind::Ball : ManifoldKind::Sphere, pr.predicted_dimension};
    return pr;
  }
  if (g.vertex_count() <= kDefaultCanonicalCap) {
    const std::string cf = canonical_form(g);
    for (const auto& e : exceptional_table()) {
      if (e.graph.vertex_count() == g.vertex_count() && e.graph.edge_count() == g.edge_count() && canonical_form(e.graph) == cf) {
        pr.source = PredictionSource::Exceptional;
        pr.exceptional_name = e.name;
        pr.predicted_class = e.expected;
        pr.predicted_dimension = e.expected.dimension;
        return pr;
      }
    }
  }
  // Disconnected complexes: C4 and K4 give disjoint edges, a dominating edge an isolated vertex.
  const int m = g.edge_count();
  if (m > 0) {
    const bool c4 = g.vertex_count() == 4 && m == 4 && isomorphic(g, cycle(4));
    const bool k4 = g.vertex_count() == 4 && m == 6;
    if (c4 || k4) {
      pr.source = PredictionSource::Degenerate;
      pr.predicted_class = {ManifoldKind::OtherManifold, 1};
      pr.predicted_dimension = 1;
      pr.note = c4 ? "two disjoint edges" : "three disjoint edges";
      return pr;
    }
    bool dominating = false;
    for (int i = 0; i < m && !dominating; ++i) dominating = g.incident_edges(i).size() == m;
    if (dominating && m >= 2) {
      pr.source = PredictionSource::Degenerate;
      const int nu = matching_number(g);
      pr.predicted_dimension = nu - 1;
      if (nu == 1) {
        pr.predicted_class = {ManifoldKind::OtherManifold, 0};
        pr.note = std::to_string(m) + " isolated points";
      } else {
        pr.predicted_class = {ManifoldKind::NotManifold, nu - 1};
        pr.note = "isolated vertex beside a higher-dimensional part";
      }
      return pr;
    }
  }
  return pr;
}

namespace detail {

inline int parse_count(std::string_view s) {
  if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(Errc::UnknownName, "expected a number, got '" + std::string(s) + "'");
  }
  return std::stoi(std::string(s));
}

inline Graph parse_family(std::string_view t) {
  auto fail = [&]() { return Error(Errc::UnknownName, "unknown graph name '" + std::string(t) + "'"); };
  if (t == "Gamma" || t == "banner") return banner();
  if (t.starts_with("Sp")) return spider(parse_count(t.substr(2)));
  if (t.empty()) throw fail();
  const char head = t.front();
  const std::string_view rest = t.substr(1);
  switch (head) {
    case 'P': return path(parse_count(rest));
    case 'C': return cycle(parse_count(rest));
    case 'S': return star(parse_count(rest));
    case 'K':
      if (rest.size() == 1) return complete(parse_count(rest));
      if (rest.size() == 2) return complete_bipartite(parse_count(rest.substr(0, 1)), parse_count(rest.substr(1)));
      if (auto comma = rest.find(','); comma != std::string_view::npos) {
        return complete_bipartite(parse_count(rest.substr(0, comma)), parse_count(rest.substr(comma + 1)));
      }
      throw fail();
    default: throw fail();
  }
}

}  // namespace detail

/// Resolves a graph name: an exceptional-table entry, or '+'-joined terms such as
/// "3P3", "K32", "K4", "C7", "Sp4", "S3" (the star K_{1,3}), "Gamma". A trailing
/// "-matching" is accepted and ignored.
inline Graph graph_by_name(std::string_view name) {
  constexpr std::string_view suffix = "-matching";
  if (name.ends_with(suffix)) name.remove_suffix(suffix.size());
  for (const auto& e : exceptional_table())
    if (e.name == name) return e.graph;
  if (name.empty()) throw Error(Errc::UnknownName, "empty graph name");
  std::vector<Graph> parts;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t plus = name.find('+', start);
    const std::string_view term = name.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    const int mult = digits == 0 ? 1 : detail::parse_count(term.substr(0, digits));
    if (mult < 1) throw Error(Errc::UnknownName, "zero multiplicity in '" + std::string(term) + "'");
    const Graph g = detail::parse_family(term.substr(digits));
    for (int i = 0; i < mult; ++i) parts.push_back(g);
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return disjoint_union(parts);
}

}  // namespace mcx
