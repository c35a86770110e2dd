#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "mcx/canonical.hpp"
#include "mcx/error.hpp"
#include "mcx/graph.hpp"
#include "mcx/index_set.hpp"

namespace mcx {

using Face = IndexSet;

/// Finite simplicial complex stored by its facets.
///
/// Vertices carry integer labels kept in ascending order; faces are IndexSets over
/// label positions, so at most 64 vertices are supported. The void complex (no faces)
/// and the complex {∅} (only the empty face, dimension -1) are distinct values.
class Complex {
 public:
  Complex() = default;  // void

  static Complex void_complex() { return Complex{}; }

  /// {∅}: the (-1)-sphere and the identity of join.
  static Complex empty_face() {
    Complex c;
    c.void_ = false;
    c.facets_.push_back(Face{});
    return c;
  }

  /// Facets given as label lists; non-maximal sets are absorbed. Every label used by a
  /// facet is added to the label list, extra labels become vertices in no face.
  static Complex from_facets(std::vector<int> labels, const std::vector<std::vector<int>>& facets) {
    for (const auto& f : facets) labels.insert(labels.end(), f.begin(), f.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() > static_cast<std::size_t>(IndexSet::kCapacity)) {
      throw Error(Errc::TooLarge, "complex has more than 64 vertices");
    }
    std::vector<Face> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
      Face m;
      for (int l : f) m.insert(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()));
      masks.push_back(m);
    }
    return from_masks(std::move(labels), std::move(masks));
  }

  /// Facets given over label positions. An empty facet list yields the void complex.
  static Complex from_masks(std::vector<int> labels, std::vector<Face> facets) {
    Complex c;
    c.labels_ = std::move(labels);
    if (facets.empty()) return c;
    c.void_ = false;
    std::sort(facets.begin(), facets.end(), [](Face a, Face b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (Face f : facets) {
      bool absorbed = std::any_of(c.facets_.begin(), c.facets_.end(), [&](Face g) { return f.subset_of(g); });
      if (!absorbed) c.facets_.push_back(f);
    }
    std::sort(c.facets_.begin(), c.facets_.end(), lex_less);
    return c;
  }

  bool is_void() const noexcept { return void_; }

  /// Largest facet size minus one; -1 for {∅}.
  int dimension() const {
    require_nonvoid();
    int d = -1;
    for (Face f : facets_) d = std::max(d, f.size() - 1);
    return d;
  }

  int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  int label(int position) const { return labels_.at(static_cast<std::size_t>(position)); }
  const std::vector<Face>& facets() const noexcept { return facets_; }

  /// Positions used by at least one facet.
  Face support() const noexcept {
    Face s;
    for (Face f : facets_) s = s | f;
    return s;
  }

  std::vector<int> to_labels(Face f) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(f.size()));
    for (int i : f) out.push_back(labels_.at(static_cast<std::size_t>(i)));
    return out;
  }

  std::optional<Face> try_face_of(std::span<const int> face_labels) const {
    Face m;
    for (int l : face_labels) {
      auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
      if (it == labels_.end() || *it != l) return std::nullopt;
      m.insert(static_cast<int>(it - labels_.begin()));
    }
    return m;
  }

  bool contains(Face f) const noexcept {
    return std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return f.subset_of(g); });
  }

  bool contains_labels(std::span<const int> face_labels) const {
    auto m = try_face_of(face_labels);
    return m && contains(*m);
  }

  std::vector<std::vector<int>> facet_labels() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (Face f : facets_) out.push_back(to_labels(f));
    return out;
  }

  /// All faces grouped by dimension: result[k + 1] holds the k-faces in increasing mask order.
  std::vector<std::vector<Face>> faces_by_dimension() const {
    require_nonvoid();
    const int d = dimension();
    std::vector<std::uint64_t> all;
    for (Face f : facets_) for_each_subset(f, [&](Face s) { all.push_back(s.bits()); });
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<std::vector<Face>> out(static_cast<std::size_t>(d + 2));
    for (std::uint64_t b : all) out[static_cast<std::size_t>(std::popcount(b))].push_back(Face(b));
    return out;
  }

  void require_nonvoid() const {
    if (void_) throw Error(Errc::VoidComplex, "operation undefined on the void complex");
  }

  bool operator==(const Complex& o) const noexcept {
    return void_ == o.void_ && labels_ == o.labels_ && facets_ == o.facets_;
  }

 private:
  std::vector<int> labels_;
  std::vector<Face> facets_;
  bool void_ = true;
};

// ---------------------------------------------------------------------------

/// M(G): vertex i is edge i of g, facets are the maximal matchings.
inline Complex matching_complex(const Graph& g) {
  std::vector<int> labels(static_cast<std::size_t>(g.edge_count()));
  for (int i = 0; i < g.edge_count(); ++i) labels[static_cast<std::size_t>(i)] = i;
  return Complex::from_masks(std::move(labels), maximal_matchings(g));
}

inline Complex link(const Complex& c, Face face) {
  c.require_nonvoid();
  if (face.empty()) return c;
  std::vector<Face> rest;
  Face used;
  for (Face f : c.facets()) {
    if (face.subset_of(f)) {
      rest.push_back(f - face);
      used = used | (f - face);
    }
  }
  if (rest.empty()) throw Error(Errc::FaceNotInComplex, "face is not in the complex");
  // Re-index onto the positions actually used by the link.
  std::vector<int> remap(64, -1);
  std::vector<int> labels;
  for (int p : used) {
    remap[static_cast<std::size_t>(p)] = static_cast<int>(labels.size());
    labels.push_back(c.label(p));
  }
  for (Face& f : rest) {
    Face m;
    for (int p : f) m.insert(remap[static_cast<std::size_t>(p)]);
    f = m;
  }
  return Complex::from_masks(std::move(labels), std::move(rest));
}

inline Complex link(const Complex& c, std::span<const int> face_labels) {
  c.require_nonvoid();
  auto m = c.try_face_of(face_labels);
  if (!m || !c.contains(*m)) throw Error(Errc::FaceNotInComplex, "face is not in the complex");
  return link(c, *m);
}

inline Complex link(const Complex& c, std::initializer_list<int> face_labels) {
  return link(c, std::span<const int>(face_labels.begin(), face_labels.size()));
}

/// c2's labels are shifted past max(c1's labels) when the two label sets intersect.
inline Complex join(const Complex& c1, const Complex& c2) {
  if (c1.is_void() || c2.is_void()) return Complex::void_complex();
  std::vector<int> l2 = c2.labels();
  const bool overlap = std::any_of(l2.begin(), l2.end(), [&](int l) {
    return std::binary_search(c1.labels().begin(), c1.labels().end(), l);
  });
  if (overlap) {
    const int offset = c1.labels().back() + 1 - l2.front();
    for (int& l : l2) l += offset;
  }
  std::vector<int> labels = c1.labels();
  labels.insert(labels.end(), l2.begin(), l2.end());
  std::sort(labels.begin(), labels.end());
  if (labels.size() > static_cast<std::size_t>(IndexSet::kCapacity)) throw Error(Errc::TooLarge, "join has more than 64 vertices");
  auto position = [&](int l) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()); };
  std::vector<int> map1;
  std::vector<int> map2;
  for (int l : c1.labels()) map1.push_back(position(l));
  for (int l : l2) map2.push_back(position(l));
  auto remap = [](Face f, const std::vector<int>& m) {
    Face out;
    for (int p : f) out.insert(m[static_cast<std::size_t>(p)]);
    return out;
  };
  std::vector<Face> facets;
  facets.reserve(c1.facets().size() * c2.facets().size());
  for (Face a : c1.facets())
    for (Face b : c2.facets()) facets.push_back(remap(a, map1) | remap(b, map2));
  return Complex::from_masks(std::move(labels), std::move(facets));
}

// ---------------------------------------------------------------------------

/// Face counts; counts[k + 1] = f_k, so counts[0] = f_{-1} = 1.
struct FVector {
  std::vector<std::int64_t> counts;

  std::int64_t f(int k) const {
    const auto i = static_cast<std::size_t>(k + 1);
    return (k >= -1 && i < counts.size()) ? counts[i] : 0;
  }
  int dimension() const { return static_cast<int>(counts.size()) - 2; }
  /// Counts from f_0 upward.
  std::vector<std::int64_t> nonempty() const { return {counts.begin() + 1, counts.end()}; }
  bool operator==(const FVector&) const = default;
};

inline FVector f_vector(const Complex& c) {
  FVector fv;
  for (const auto& layer : c.faces_by_dimension()) fv.counts.push_back(static_cast<std::int64_t>(layer.size()));
  return fv;
}

/// Unreduced Euler characteristic: sum over k >= 0 of (-1)^k f_k.
inline std::int64_t euler_characteristic(const Complex& c) {
  const FVector fv = f_vector(c);
  std::int64_t chi = 0;
  for (int k = 0; k <= fv.dimension(); ++k) chi += (k % 2 == 0 ? 1 : -1) * fv.f(k);
  return chi;
}

/// Minimal non-faces, as label lists in size-then-lex order.
inline std::vector<std::vector<int>> missing_faces(const Complex& c) {
  c.require_nonvoid();
  std::vector<Face> found;
  const int n = c.vertex_count();
  const Face support = c.support();
  for (int v = 0; v < n; ++v)
    if (!support.contains(v)) found.push_back(Face{v});
  // A missing face of size s has all its (s-1)-subsets as faces; grow from faces.
  const auto layers = c.faces_by_dimension();
  for (std::size_t s = 2; s <= layers.size(); ++s) {
    const auto& below = layers[s - 1];
    std::unordered_set<std::uint64_t> below_set;
    for (Face f : below) below_set.insert(f.bits());
    for (Face f : below) {
      const int start = f.empty() ? 0 : f.max() + 1;
      for (int v = start; v < n; ++v) {
        if (!support.contains(v)) continue;
        const Face cand = f.with(v);
        if (c.contains(cand)) continue;
        bool all = true;
        for (int x : cand) {
          if (!below_set.contains(cand.without(x).bits())) {
            all = false;
            break;
          }
        }
        if (all) found.push_back(cand);
      }
    }
  }
  std::sort(found.begin(), found.end(), size_lex_less);
  std::vector<std::vector<int>> out;
  for (Face f : found) out.push_back(c.to_labels(f));
  return out;
}

inline bool is_flag(const Complex& c) {
  const auto mf = missing_faces(c);
  return std::all_of(mf.begin(), mf.end(), [](const auto& f) { return f.size() == 2; });
}

inline bool is_pure(const Complex& c) {
  c.require_nonvoid();
  const auto& fs = c.facets();
  return std::all_of(fs.begin(), fs.end(), [&](Face f) { return f.size() == fs.front().size(); });
}

/// Vertex i of the result is the vertex at position i of c.
inline Graph one_skeleton(const Complex& c) {
  c.require_nonvoid();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(c.vertex_count()), 0);
  for (Face f : c.facets()) {
    for (int v : f) rows[static_cast<std::size_t>(v)] |= f.without(v).bits();
  }
  return Graph::from_adjacency(rows);
}

namespace detail {

inline std::vector<int> bfs_distances(const Graph& g, int s) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  dist[static_cast<std::size_t>(s)] = 0;
  IndexSet frontier{s};
  IndexSet seen{s};
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    IndexSet next;
    for (int v : frontier) next = next | g.neighbors(v);
    next = next - seen;
    for (int v : next) dist[static_cast<std::size_t>(v)] = d;
    seen = seen | next;
    frontier = next;
  }
  return dist;
}

}  // namespace detail

/// Connected iff the 1-skeleton has at most one component.
inline bool is_connected(const Complex& c) {
  const Graph g = one_skeleton(c);
  if (g.vertex_count() == 0) return true;
  const auto dist = detail::bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int x) { return x < 0; });
}

/// Diameter of the 1-skeleton; nullopt when disconnected (infinite).
inline std::optional<int> diameter(const Complex& c) {
  const Graph g = one_skeleton(c);
  int best = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    for (int d : detail::bfs_distances(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

/// True iff the 1-skeleton has an induced path on 6 vertices.
inline bool has_induced_path6(const Complex& c) {
  if (c.is_void()) return false;
  const Graph g = one_skeleton(c);
  // Extend induced paths vertex by vertex: the new end must be adjacent to the
  // current end and to no earlier path vertex.
  auto rec = [&](auto&& self, IndexSet on_path, IndexSet before_end, int end, int len) -> bool {
    if (len == 6) return true;
    for (int w : g.neighbors(end) - on_path) {
      if (g.neighbors(w).intersects(before_end)) continue;
      if (self(self, on_path.with(w), on_path, w, len + 1)) return true;
    }
    return false;
  };
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (rec(rec, IndexSet{s}, IndexSet{}, s, 1)) return true;
  }
  return false;
}

inline Complex induced_subcomplex(const Complex& c, std::span<const int> subset_labels) {
  c.require_nonvoid();
  auto sub = c.try_face_of(subset_labels);
  if (!sub) throw Error(Errc::BadSubset, "subset contains labels that are not vertices of the complex");
  std::vector<int> remap(64, -1);
  std::vector<int> labels;
  for (int p : *sub) {
    remap[static_cast<std::size_t>(p)] = static_cast<int>(labels.size());
    labels.push_back(c.label(p));
  }
  std::vector<Face> facets;
  for (Face f : c.facets()) {
    Face m;
    for (int p : f & *sub) m.insert(remap[static_cast<std::size_t>(p)]);
    facets.push_back(m);
  }
  return Complex::from_masks(std::move(labels), std::move(facets));
}

/// Faces of dimension at most k.
inline Complex skeleton(const Complex& c, int k) {
  c.require_nonvoid();
  if (k < 0 || k > c.dimension()) throw Error(Errc::BadDimension, "skeleton dimension out of range");
  const auto layers = c.faces_by_dimension();
  std::vector<Face> facets;
  for (int j = 0; j <= k; ++j) {
    for (Face f : layers[static_cast<std::size_t>(j + 1)]) facets.push_back(f);
  }
  return Complex::from_masks(c.labels(), std::move(facets));
}

/// Isomorphism invariant of a complex: canonical form of its vertex/facet incidence graph.
inline std::string complex_canonical_form(const Complex& c) {
  c.require_nonvoid();
  const int nv = c.vertex_count();
  const int nf = static_cast<int>(c.facets().size());
  if (nv + nf > Graph::kMaxVertices) throw Error(Errc::TooLarge, "incidence graph exceeds 64 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < nf; ++j)
    for (int v : c.facets()[static_cast<std::size_t>(j)]) pairs.emplace_back(v, nv + j);
  const Graph inc = Graph::from_pairs(nv + nf, pairs);
  std::vector<int> colors(static_cast<std::size_t>(nv + nf), 0);
  for (int j = 0; j < nf; ++j) colors[static_cast<std::size_t>(nv + j)] = 1;
  return canonical_form_colored(inc, colors);
}

inline bool isomorphic(const Complex& a, const Complex& b) {
  if (a.is_void() || b.is_void()) return a.is_void() == b.is_void();
  if (a.vertex_count() != b.vertex_count() || a.facets().size() != b.facets().size()) return false;
  return complex_canonical_form(a) == complex_canonical_form(b);
}

/// Complex whose facets are the edges and isolated vertices of g (vertex labels 0..n-1).
inline Complex complex_of_graph(const Graph& g) {
  std::vector<int> labels(static_cast<std::size_t>(g.vertex_count()));
  std::vector<Face> facets;
  for (int v = 0; v < g.vertex_count(); ++v) {
    labels[static_cast<std::size_t>(v)] = v;
    if (g.neighbors(v).empty()) facets.push_back(Face{v});
  }
  for (const Edge& e : g.edges()) facets.push_back(Face{e.u, e.v});
  return Complex::from_masks(std::move(labels), std::move(facets));
}

/// Full simplex on labels 0..n-1.
inline Complex simplex(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
  return Complex::from_masks(std::move(labels), {IndexSet::range(n)});
}

/// Boundary of the simplex on labels 0..n-1 (the (n-2)-sphere).
inline Complex simplex_boundary(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::vector<Face> facets;
  for (int i = 0; i < n; ++i) {
    labels[static_cast<std::size_t>(i)] = i;
    facets.push_back(IndexSet::range(n).without(i));
  }
  return Complex::from_masks(std::move(labels), std::move(facets));
}

}  // namespace mcx
