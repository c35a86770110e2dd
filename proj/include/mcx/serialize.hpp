#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mcx/catalog.hpp"
#include "mcx/complex.hpp"
#include "mcx/graph_io.hpp"
#include "mcx/homology.hpp"
#include "mcx/manifold.hpp"
#include "mcx/verify.hpp"

namespace mcx {

using Json = nlohmann::ordered_json;

/// {"p", "betti": [b_0 .. b_d], "reduced_minus_one": b_{-1}}
inline Json to_json(const BettiVector& b) {
  return Json{{"p", b.p}, {"betti", b.nonnegative()}, {"reduced_minus_one", b.at(-1)}};
}

inline Json to_json(const Complex& c) {
  if (c.is_void()) return Json{{"labels", Json::array()}, {"facets", Json::array()}, {"void", true}};
  return Json{{"labels", c.labels()}, {"facets", c.facet_labels()}, {"dimension", c.dimension()}};
}

inline Json to_json(const ManifoldClass& cls) { return Json(cls.label()); }

inline Json witness_json(const ManifoldVerdict& v) {
  Json j;
  j["witness_face"] = v.witness ? Json(v.witness->face) : Json(nullptr);
  j["witness_betti"] = v.witness ? to_json(v.witness->link_betti) : Json(nullptr);
  if (v.witness && v.witness->in_boundary) j["witness_in_boundary"] = true;
  return j;
}

inline Json to_json(const ManifoldReport& r) {
  Json j;
  j["status"] = std::string(to_string(r.verdict.status));
  j["dimension"] = r.verdict.dimension;
  j["p"] = r.verdict.p;
  j["class"] = r.cls.label();
  j["boundary_components"] = r.verdict.status == ManifoldStatus::ManifoldWithBoundary ? Json(r.evidence.boundary_components)
                             : r.verdict.status == ManifoldStatus::ClosedManifold     ? Json(0)
                                                                                       : Json(nullptr);
  j.update(witness_json(r.verdict));
  j["f_vector"] = r.f.nonempty();
  j["euler_characteristic"] = [&] {
    std::int64_t chi = 0;
    for (int k = 0; k <= r.f.dimension(); ++k) chi += (k % 2 == 0 ? 1 : -1) * r.f.f(k);
    return chi;
  }();
  j["homology"] = Json::array({to_json(r.evidence.first), to_json(r.evidence.second)});
  j["literal_ball"] = r.evidence.literal_ball;
  j["boundary_sphere"] = r.evidence.boundary_sphere;
  j["orientable"] = r.verdict.is_manifold() && r.verdict.dimension >= 1 ? Json(r.evidence.orientable) : Json(nullptr);
  j["cross_check"] = Json{{"p", r.cross_verdict.p}, {"status", std::string(to_string(r.cross_verdict.status))}, {"agrees", r.fields_agree()}};
  return j;
}

inline Json to_json(const BasicGraphKind& b) {
  Json j{{"kind", b.name()}, {"sphere", b.is_sphere()}, {"facet_size", b.facet_size()}};
  if (!b.note().empty()) j["note"] = b.note();
  return j;
}

inline Json to_json(const Prediction& p) {
  Json j;
  j["source"] = std::string(to_string(p.source));
  if (p.source == PredictionSource::Basic) {
    Json parts = Json::array();
    for (const auto& b : p.decomposition) parts.push_back(to_json(b));
    j["decomposition"] = parts;
  }
  if (p.source == PredictionSource::Exceptional) j["exceptional"] = p.exceptional_name;
  if (p.source != PredictionSource::None) {
    j["class"] = p.predicted_class.label();
    j["dimension"] = p.predicted_dimension;
  }
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

inline Json to_json(const ExceptionalEntry& e) {
  return Json{{"name", e.name},
              {"graph6", to_graph6(e.graph)},
              {"vertices", e.graph.vertex_count()},
              {"edges", e.graph.pairs()},
              {"expected_class", e.expected.label()},
              {"description", e.description},
              {"vertex_numbering", e.vertex_numbering},
              {"connected", e.connected_family}};
}

inline Json to_json(const SearchSpec& s) {
  return Json{{"target", s.target},
              {"max_edges", s.max_edges},
              {"max_vertices", s.max_vertices},
              {"connected_only", s.connected_only},
              {"p", s.p},
              {"cross_check_prime", s.cross_check_prime ? Json(*s.cross_check_prime) : Json(nullptr)},
              {"force", s.force}};
}

/// Report JSON; elapsed_ms is the only field that varies between identical runs.
inline Json to_json(const SearchReport& r, bool include_timing = true) {
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    Json jh{{"graph6", h.graph6}, {"vertices", h.vertices}, {"edges", h.edges}, {"class", h.cls.label()},
            {"status", std::string(to_string(h.status))}};
    jh["betti_p" + std::to_string(h.betti.p)] = h.betti.nonnegative();
    if (h.cross_betti) jh["betti_p" + std::to_string(h.cross_betti->p)] = h.cross_betti->nonnegative();
    if (!h.expected_name.empty()) jh["catalog_name"] = h.expected_name;
    hits.push_back(std::move(jh));
  }
  Json expected = Json::array();
  for (const auto& e : r.expected) {
    Json je{{"graph6", e.graph6}, {"vertices", e.vertices}, {"edges", e.edges}};
    if (!e.name.empty()) je["name"] = e.name;
    if (e.cls) je["class"] = e.cls->label();
    expected.push_back(std::move(je));
  }
  Json anomalies = Json::array();
  for (const auto& a : r.anomalies) anomalies.push_back(Json{{"graph6", a.graph6}, {"kind", a.kind}, {"detail", a.detail}});
  Json j;
  j["spec"] = to_json(r.spec);
  j["hits"] = std::move(hits);
  j["expected"] = std::move(expected);
  j["missing"] = r.missing;
  j["extra"] = r.extra;
  j["class_mismatch"] = r.class_mismatch;
  j["verdict"] = std::string(to_string(r.verdict));
  j["anomalies"] = std::move(anomalies);
  j["graphs_enumerated"] = r.graphs_enumerated;
  j["graphs_checked"] = r.graphs_checked;
  j["note"] = r.note;
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline Json to_json(const PropertyReport& r) {
  Json checked = Json::object();
  for (const auto& [name, n] : r.checked) checked[name] = n;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"property", f.property}, {"trial_seed", f.trial_seed}, {"graph6", f.graph6}, {"detail", f.detail}});
  }
  return Json{{"seed", r.seed}, {"trials", r.trials}, {"checked", checked}, {"failures", failures}, {"ok", r.ok()}};
}

}  // namespace mcx
