#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mcx/complex.hpp"
#include "mcx/homology.hpp"

namespace mcx {

enum class ManifoldStatus { NotPure, NotManifold, ClosedManifold, ManifoldWithBoundary };

constexpr std::string_view to_string(ManifoldStatus s) noexcept {
  switch (s) {
    case ManifoldStatus::NotPure: return "NotPure";
    case ManifoldStatus::NotManifold: return "NotManifold";
    case ManifoldStatus::ClosedManifold: return "ClosedManifold";
    case ManifoldStatus::ManifoldWithBoundary: return "ManifoldWithBoundary";
  }
  return "?";
}

/// A face whose link has neither sphere nor ball homology (or, when `in_boundary`
/// is set, a face that breaks the manifold condition of the boundary complex).
struct Witness {
  std::vector<int> face;
  BettiVector link_betti;
  bool in_boundary = false;
};

struct ManifoldVerdict {
  ManifoldStatus status = ManifoldStatus::NotManifold;
  int dimension = -1;
  std::uint32_t p = 2;
  std::optional<Witness> witness;
  /// Nonempty faces with acyclic links, as masks over the checked complex's positions.
  std::vector<Face> ball_faces;

  bool is_manifold() const noexcept {
    return status == ManifoldStatus::ClosedManifold || status == ManifoldStatus::ManifoldWithBoundary;
  }
};

namespace detail {


inline std::vector<Face> nonempty_faces_lex(const Complex& c) {
  std::vector<Face> faces;
  for (const auto& layer : c.faces_by_dimension())
    for (Face f : layer)
      if (!f.empty()) faces.push_back(f);
  std::sort(faces.begin(), faces.end(), lex_less);
  return faces;
}

// Reduced Betti numbers of link(c, f), with shortcuts for facets and ridges of a pure
// d-complex (links {∅} and a set of points).
inline BettiVector link_betti(const Complex& c, Face f, int d, const FieldPrime& p) {
  BettiVector b;
  b.p = p.value();
  if (f.size() == d + 1) {
    b.betti = {1};
    return b;
  }
  if (f.size() == d) {
    std::int64_t n = 0;
    for (Face g : c.facets()) n += f.subset_of(g) ? 1 : 0;
    b.betti = {0, n - 1};
    return b;
  }
  return betti_reduced(link(c, f), p);
}

inline ManifoldVerdict survey(const Complex& c, const FieldPrime& p) {
  c.require_nonvoid();
  ManifoldVerdict v;
  v.p = p.value();
  v.dimension = c.dimension();
  if (!is_pure(c)) {
    v.status = ManifoldStatus::NotPure;
    return v;
  }
  const int d = v.dimension;
  auto fail = [&](Face f, BettiVector b, bool in_boundary) {
    v.status = ManifoldStatus::NotManifold;
    v.witness = Witness{c.to_labels(f), std::move(b), in_boundary};
    v.ball_faces.clear();
    return v;
  };
  for (Face f : nonempty_faces_lex(c)) {
    BettiVector b = link_betti(c, f, d, p);
    if (is_sphere_betti(b, d - f.size())) continue;
    if (b.all_zero()) {
      v.ball_faces.push_back(f);
      continue;
    }
    return fail(f, std::move(b), false);
  }
  if (v.ball_faces.empty()) {
    v.status = ManifoldStatus::ClosedManifold;
    return v;
  }
  // The ball faces together with ∅ must form a closed (d-1)-dimensional manifold.
  const Complex boundary = Complex::from_masks(c.labels(), v.ball_faces);
  std::vector<Face> sorted_ball = v.ball_faces;
  std::sort(sorted_ball.begin(), sorted_ball.end());
  for (const auto& layer : boundary.faces_by_dimension()) {
    for (Face f : layer) {
      if (!f.empty() && !std::binary_search(sorted_ball.begin(), sorted_ball.end(), f)) {
        return fail(f, betti_reduced(link(c, f), p), false);
      }
    }
  }
  for (Face f : boundary.facets()) {
    if (f.size() != d) return fail(f, betti_reduced(link(c, f), p), false);
  }
  const ManifoldVerdict inner = survey(boundary, p);
  if (inner.status != ManifoldStatus::ClosedManifold) {
    if (inner.witness) {
      v.status = ManifoldStatus::NotManifold;
      v.witness = inner.witness;
      v.witness->in_boundary = true;
      v.ball_faces.clear();
      return v;
    }
    const Face first = boundary.facets().front();
    return fail(first, betti_reduced(link(boundary, first), p), true);
  }
  v.status = ManifoldStatus::ManifoldWithBoundary;
  return v;
}

// Drops labels that are in no facet.
inline Complex restrict_to_support(const Complex& c) {
  if (c.is_void()) return c;
  const Face support = c.support();
  std::vector<int> keep;
  for (int p : support) keep.push_back(c.label(p));
  return induced_subcomplex(c, keep);
}

}  // namespace detail

/// Decides whether c is a homology manifold over GF(p), closed or with boundary.
inline ManifoldVerdict check_manifold(const Complex& c, const FieldPrime& p) { return detail::survey(c, p); }

struct BoundaryComplex {
  Complex complex;  // {∅} when the boundary is empty
  int component_count = 0;
};

/// Boundary of a manifold from a verdict on c, computed from the ball faces and checked
/// against the facet-count description ((d-1)-faces lying in exactly one facet).
inline BoundaryComplex boundary_complex(const Complex& c, const ManifoldVerdict& v) {
  if (!v.is_manifold()) {
    throw Error(Errc::InvalidParameter, "boundary requested for a complex that is not a homology manifold");
  }
  const int d = v.dimension;
  std::vector<Face> by_count;
  if (d >= 1) {
    std::unordered_map<std::uint64_t, int> ridge_count;
    for (Face f : c.facets())
      for (int x : f) ++ridge_count[f.without(x).bits()];
    for (auto [bits, n] : ridge_count)
      if (n == 1) by_count.push_back(Face(bits));
  }
  const Complex from_links = v.ball_faces.empty() ? Complex::empty_face() : Complex::from_masks(c.labels(), v.ball_faces);
  const Complex from_count = by_count.empty() ? Complex::empty_face() : Complex::from_masks(c.labels(), by_count);
  if (from_links.facets() != from_count.facets()) {
    throw Error(Errc::CrossCheckMismatch, "link-based and facet-count boundaries differ");
  }
  BoundaryComplex out;
  out.complex = detail::restrict_to_support(from_links);
  if (out.complex.vertex_count() > 0) {
    const Components comps = connected_components(one_skeleton(out.complex));
    out.component_count = static_cast<int>(comps.components.size() + comps.isolated_vertices.size());
  }
  return out;
}

inline BoundaryComplex boundary_complex(const Complex& c, const FieldPrime& p) { return boundary_complex(c, check_manifold(c, p)); }

/// Consistent facet orientation exists. Assumes every ridge lies in at most two facets.
inline bool is_orientable(const Complex& c) {
  c.require_nonvoid();
  const auto& facets = c.facets();
  // ridge -> (facet index, induced sign) of the facets containing it
  std::unordered_map<std::uint64_t, std::vector<std::pair<int, int>>> ridges;
  for (std::size_t j = 0; j < facets.size(); ++j) {
    int i = 0;
    for (int v : facets[j]) {
      ridges[facets[j].without(v).bits()].emplace_back(static_cast<int>(j), i % 2 == 0 ? 1 : -1);
      ++i;
    }
  }
  std::vector<int> sign(facets.size(), 0);
  std::vector<std::vector<std::pair<int, int>>> adj(facets.size());  // (neighbor, relative sign)
  for (auto& [r, users] : ridges) {
    if (users.size() != 2) continue;
    const auto [a, sa] = users[0];
    const auto [b, sb] = users[1];
    // s_a * sa == -(s_b * sb)  =>  s_b = -s_a * sa * sb
    adj[static_cast<std::size_t>(a)].emplace_back(b, -sa * sb);
    adj[static_cast<std::size_t>(b)].emplace_back(a, -sa * sb);
  }
  for (std::size_t start = 0; start < facets.size(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (auto [y, rel] : adj[static_cast<std::size_t>(x)]) {
        const int want = sign[static_cast<std::size_t>(x)] * rel;
        if (sign[static_cast<std::size_t>(y)] == 0) {
          sign[static_cast<std::size_t>(y)] = want;
          stack.push_back(y);
        } else if (sign[static_cast<std::size_t>(y)] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

enum class ManifoldKind { Sphere, Ball, Torus, MoebiusStrip, Annulus, TorusMinusDisk, OtherSurface, OtherManifold, NotManifold };

struct ManifoldClass {
  ManifoldKind kind = ManifoldKind::NotManifold;
  int dimension = -1;

  std::string label() const {
    switch (kind) {
      case ManifoldKind::Sphere: return "Sphere(" + std::to_string(dimension) + ")";
      case ManifoldKind::Ball: return "Ball(" + std::to_string(dimension) + ")";
      case ManifoldKind::Torus: return "Torus";
      case ManifoldKind::MoebiusStrip: return "MoebiusStrip";
      case ManifoldKind::Annulus: return "Annulus";
      case ManifoldKind::TorusMinusDisk: return "TorusMinusDisk";
      case ManifoldKind::OtherSurface: return "OtherSurface";
      case ManifoldKind::OtherManifold: return "OtherManifold";
      case ManifoldKind::NotManifold: return "NotManifold";
    }
    return "?";
  }

  bool operator==(const ManifoldClass&) const = default;
};

/// Fingerprint of a verdict's complex used by classify.
struct ClassEvidence {
  BettiVector first;
  BettiVector second;
  int boundary_components = 0;
  bool boundary_sphere = false;  // boundary has (d-1)-sphere homology at both primes
  bool literal_ball = false;     // manifold with boundary and acyclic
  bool orientable = false;
};

inline ClassEvidence gather_evidence(const Complex& c, const ManifoldVerdict& v, const FieldPrime& p1, const FieldPrime& p2) {
  ClassEvidence e;
  e.first = betti_reduced(c, p1);
  e.second = betti_reduced(c, p2);
  if (!v.is_manifold()) return e;
  const int d = v.dimension;
  if (v.status == ManifoldStatus::ManifoldWithBoundary) {
    const BoundaryComplex b = boundary_complex(c, v);
    e.boundary_components = b.component_count;
    e.boundary_sphere = has_sphere_homology(b.complex, d - 1, p1) && has_sphere_homology(b.complex, d - 1, p2);
    e.literal_ball = e.first.all_zero() && e.second.all_zero();
  }
  if (d >= 1) e.orientable = is_orientable(c);
  return e;
}

inline ManifoldClass classify(const ManifoldVerdict& v, const ClassEvidence& e) {
  const int d = v.dimension;
  if (!v.is_manifold()) return {ManifoldKind::NotManifold, d};
  const bool both_zero = e.first.all_zero() && e.second.all_zero();
  auto b = [&](int k) -> std::optional<std::int64_t> {
    if (e.first.at(k) != e.second.at(k)) return std::nullopt;
    return e.first.at(k);
  };
  if (v.status == ManifoldStatus::ClosedManifold) {
    if (is_sphere_betti(e.first, d) && is_sphere_betti(e.second, d)) return {ManifoldKind::Sphere, d};
    if (d == 0 && both_zero) return {ManifoldKind::Ball, 0};  // a single point
    if (d == 2) {
      if (b(0) == 0 && b(1) == 2 && b(2) == 1 && e.orientable) return {ManifoldKind::Torus, 2};
      return {ManifoldKind::OtherSurface, 2};
    }
    return {ManifoldKind::OtherManifold, d};
  }
  if (both_zero && e.boundary_sphere) return {ManifoldKind::Ball, d};
  if (d == 2) {
    if (b(0) == 0 && b(2) == 0) {
      const auto b1 = b(1);
      const int bc = e.boundary_components;
      if (b1 == 1 && bc == 1 && !e.orientable) return {ManifoldKind::MoebiusStrip, 2};
      if (b1 == 1 && bc == 2 && e.orientable) return {ManifoldKind::Annulus, 2};
      if (b1 == 2 && bc == 1 && e.orientable) return {ManifoldKind::TorusMinusDisk, 2};
    }
    return {ManifoldKind::OtherSurface, 2};
  }
  return {ManifoldKind::OtherManifold, d};
}

inline ManifoldClass classify(const Complex& c, const ManifoldVerdict& v, std::pair<FieldPrime, FieldPrime> primes = {FieldPrime(2), FieldPrime(3)}) {
  if (!v.is_manifold()) return {ManifoldKind::NotManifold, v.dimension};
  return classify(v, gather_evidence(c, v, primes.first, primes.second));
}

/// Everything the CLI and the search report about one complex.
struct ManifoldReport {
  ManifoldVerdict verdict;
  ManifoldVerdict cross_verdict;
  ManifoldClass cls;
  ClassEvidence evidence;
  FVector f;

  bool fields_agree() const noexcept {
    return verdict.status == cross_verdict.status && verdict.dimension == cross_verdict.dimension;
  }
};

inline ManifoldReport analyze(const Complex& c, const FieldPrime& p, const FieldPrime& cross) {
  ManifoldReport r;
  r.verdict = check_manifold(c, p);
  r.cross_verdict = check_manifold(c, cross);
  r.evidence = gather_evidence(c, r.verdict, p, cross);
  r.cls = classify(r.verdict, r.evidence);
  r.f = f_vector(c);
  return r;
}

}  // namespace mcx
