// mcx: command-line front end for matching complexes.
//
// Data goes to stdout (or --out FILE), diagnostics to stderr.
// Exit codes: 0 success / Match, 1 usage or input error, 2 mismatch or anomaly.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcx/mcx.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct InputOptions {
  std::string graph6;
  std::string edges_file;
  std::string name;
};

struct OutputOptions {
  std::string format = "json";
  std::string out;
};

struct Emitter {
  const OutputOptions& opts;

  bool table() const { return opts.format == "table"; }

  void write(const std::string& text) const {
    if (opts.out.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream f(opts.out);
    if (!f) throw mcx::Error(mcx::Errc::InvalidParameter, "cannot write " + opts.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }

  void json(const mcx::Json& j) const { write(j.dump(2)); }
};

void add_input(CLI::App* cmd, InputOptions& in) {
  auto* g = cmd->add_option("--graph6", in.graph6, "graph in graph6 format");
  auto* e = cmd->add_option("--edges", in.edges_file, "edge-list file: 'n m' then m lines 'u v'");
  auto* n = cmd->add_option("--name", in.name, "catalog or family name, e.g. K43, C7, 3P3, P2+Gamma");
  g->excludes(e)->excludes(n);
  e->excludes(n);
}

void add_output(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--out", out.out, "write the result to a file");
}

mcx::Graph load_graph(const InputOptions& in) {
  const int given = !in.graph6.empty() + !in.edges_file.empty() + !in.name.empty();
  if (given != 1) throw CLI::ValidationError("input", "exactly one of --graph6, --edges, --name is required");
  if (!in.graph6.empty()) return mcx::from_graph6(in.graph6);
  if (!in.name.empty()) return mcx::graph_by_name(in.name);
  std::ifstream f(in.edges_file);
  if (!f) throw mcx::Error(mcx::Errc::ParseError, "cannot open " + in.edges_file);
  return mcx::read_edge_list(f);
}

std::vector<mcx::FieldPrime> primes_from(const std::vector<std::uint32_t>& ps, std::vector<std::uint32_t> defaults) {
  std::vector<mcx::FieldPrime> out;
  for (auto p : ps.empty() ? defaults : ps) out.emplace_back(p);
  return out;
}

std::string join_numbers(const std::vector<std::int64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

std::string facet_text(const mcx::Complex& c) {
  std::ostringstream os;
  if (c.is_void()) {
    os << "void\n";
    return os.str();
  }
  os << "dim " << c.dimension() << ' ' << c.facets().size() << '\n';
  for (const auto& f : c.facet_labels()) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
    os << '\n';
  }
  return os.str();
}

mcx::Json graph_json(const mcx::Graph& g) {
  return mcx::Json{{"graph6", mcx::to_graph6(g)}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
}

int cmd_build(const mcx::Graph& g, bool emit_graph6, const Emitter& out) {
  if (emit_graph6) {
    out.write(mcx::canonical_form(g, mcx::Graph::kMaxVertices));
    return kExitOk;
  }
  const mcx::Complex c = mcx::matching_complex(g);
  if (out.table()) {
    out.write(facet_text(c));
    return kExitOk;
  }
  mcx::Json j = graph_json(g);
  j["complex"] = mcx::to_json(c);
  j["f_vector"] = mcx::f_vector(c).nonempty();
  out.json(j);
  return kExitOk;
}

int cmd_homology(const mcx::Graph& g, const std::vector<mcx::FieldPrime>& primes, const Emitter& out) {
  const mcx::Complex c = mcx::matching_complex(g);
  mcx::Json j = graph_json(g);
  j["homology"] = mcx::Json::array();
  std::ostringstream table;
  for (const auto& p : primes) {
    const auto b = mcx::betti_reduced(c, p);
    j["homology"].push_back(mcx::to_json(b));
    table << "p=" << p.value() << "  betti " << join_numbers(b.nonnegative()) << '\n';
  }
  if (out.table()) {
    out.write(table.str());
  } else {
    out.json(j);
  }
  return kExitOk;
}

int cmd_manifold(const mcx::Graph& g, const std::vector<mcx::FieldPrime>& primes, bool class_only, const Emitter& out) {
  const mcx::FieldPrime p = primes.at(0);
  const mcx::FieldPrime cross = primes.size() > 1 ? primes[1] : mcx::FieldPrime(p.value() == 3 ? 2 : 3);
  const mcx::Complex c = mcx::matching_complex(g);
  const mcx::ManifoldReport r = mcx::analyze(c, p, cross);
  mcx::Json j = graph_json(g);
  if (class_only) {
    j["class"] = r.cls.label();
    j["dimension"] = r.verdict.dimension;
  } else {
    j.update(mcx::to_json(r));
  }
  if (out.table()) {
    std::ostringstream t;
    t << "class   " << r.cls.label() << '\n';
    if (!class_only) {
      t << "status  " << mcx::to_string(r.verdict.status) << " (p=" << r.verdict.p << ")\n";
      t << "dim     " << r.verdict.dimension << '\n';
      t << "f       " << join_numbers(r.f.nonempty()) << '\n';
      t << "betti   p=" << r.evidence.first.p << ": " << join_numbers(r.evidence.first.nonnegative()) << "  p="
        << r.evidence.second.p << ": " << join_numbers(r.evidence.second.nonnegative()) << '\n';
      if (r.verdict.status == mcx::ManifoldStatus::ManifoldWithBoundary) {
        t << "boundary components " << r.evidence.boundary_components << '\n';
      }
      if (r.verdict.witness) {
        std::vector<std::int64_t> face(r.verdict.witness->face.begin(), r.verdict.witness->face.end());
        t << "witness face " << join_numbers(face) << "  link betti " << join_numbers(r.verdict.witness->link_betti.nonnegative())
          << '\n';
      }
      t << "cross   p=" << r.cross_verdict.p << " " << mcx::to_string(r.cross_verdict.status) << '\n';
    }
    out.write(t.str());
  } else {
    out.json(j);
  }
  return r.fields_agree() ? kExitOk : kExitMismatch;
}

int cmd_predict(const mcx::Graph& g, const Emitter& out) {
  const mcx::Prediction p = mcx::predict(g);
  mcx::Json j = graph_json(g);
  j["prediction"] = mcx::to_json(p);
  if (out.table()) {
    std::ostringstream t;
    t << "source  " << mcx::to_string(p.source) << '\n';
    if (p.source != mcx::PredictionSource::None) t << "class   " << p.predicted_class.label() << "\ndim     " << p.predicted_dimension << '\n';
    out.write(t.str());
  } else {
    out.json(j);
  }
  return kExitOk;
}

int cmd_catalog(const Emitter& out) {
  mcx::Json j;
  j["basic_sphere_graphs"] = mcx::Json::array();
  j["basic_ball_graphs"] = mcx::Json::array();
  for (auto k : {mcx::BasicKind::P3, mcx::BasicKind::C5, mcx::BasicKind::K32}) j["basic_sphere_graphs"].push_back(mcx::to_json(mcx::BasicGraphKind{k}));
  for (auto b : {mcx::BasicGraphKind{mcx::BasicKind::P2}, mcx::BasicGraphKind{mcx::BasicKind::Gamma}, mcx::BasicGraphKind{mcx::BasicKind::Spider, 2}}) {
    j["basic_ball_graphs"].push_back(mcx::to_json(b));
  }
  j["spiders"] = "Sp<k> for every k >= 2";
  j["exceptional"] = mcx::Json::array();
  std::ostringstream t;
  for (const auto& e : mcx::exceptional_table()) {
    j["exceptional"].push_back(mcx::to_json(e));
    t << e.name << "  " << e.graph.vertex_count() << "v " << e.graph.edge_count() << "e  " << e.expected.label() << "  "
      << e.description << '\n';
  }
  if (out.table()) {
    out.write(t.str());
  } else {
    out.json(j);
  }
  return kExitOk;
}

int cmd_verify(mcx::SearchSpec spec, const std::vector<std::uint32_t>& ps, const Emitter& out) {
  if (!ps.empty()) spec.p = ps[0];
  if (ps.size() > 1) spec.cross_check_prime = ps[1];
  const mcx::SearchReport r = mcx::run_search(spec);
  if (out.table()) {
    std::ostringstream t;
    t << "target " << spec.target << "  verdict " << mcx::to_string(r.verdict) << "  (" << r.graphs_enumerated << " graphs, "
      << r.elapsed_ms << " ms)\n";
    for (const auto& h : r.hits) t << h.graph6 << "  " << h.edges << "e  " << h.cls.label() << "  " << h.expected_name << '\n';
    for (const auto& m : r.missing) t << "missing " << m << '\n';
    for (const auto& a : r.anomalies) t << "anomaly " << a.kind << " " << a.graph6 << " " << a.detail << '\n';
    out.write(t.str());
  } else {
    out.json(mcx::to_json(r));
  }
  for (const auto& a : r.anomalies) std::cerr << "anomaly: " << a.kind << " " << a.graph6 << ": " << a.detail << '\n';
  return (r.verdict == mcx::SearchVerdict::Match && r.anomalies.empty()) ? kExitOk : kExitMismatch;
}

int cmd_props(std::uint64_t seed, int trials, const Emitter& out) {
  const mcx::PropertyReport r = mcx::property_suite(seed, trials);
  if (out.table()) {
    std::ostringstream t;
    for (const auto& [name, n] : r.checked) t << name << "  " << n << " checks\n";
    for (const auto& f : r.failures) t << "FAIL " << f.property << " seed " << f.trial_seed << " " << f.graph6 << " " << f.detail << '\n';
    out.write(t.str());
  } else {
    out.json(mcx::to_json(r));
  }
  return r.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching complexes of graphs: homology, manifold checks, classification searches"};
  app.require_subcommand(1);

  InputOptions in;
  OutputOptions outopts;
  std::vector<std::uint32_t> primes;
  bool emit_graph6 = false;
  mcx::SearchSpec spec;
  std::uint64_t seed = 1;
  int trials = 200;

  auto* build = app.add_subcommand("build", "build the matching complex");
  add_input(build, in);
  add_output(build, outopts);
  build->add_flag("--emit-graph6", emit_graph6, "print the canonical graph6 of the input instead");

  auto* homology = app.add_subcommand("homology", "reduced Betti numbers");
  add_input(homology, in);
  add_output(homology, outopts);
  homology->add_option("--p", primes, "prime field (repeatable)");

  auto* manifold = app.add_subcommand("manifold", "homology-manifold verdict, boundary and class");
  add_input(manifold, in);
  add_output(manifold, outopts);
  manifold->add_option("--p", primes, "primary prime, then the cross-check prime");

  auto* classify = app.add_subcommand("classify", "manifold class label only");
  add_input(classify, in);
  add_output(classify, outopts);
  classify->add_option("--p", primes, "the two primes used for the fingerprint");

  auto* predict = app.add_subcommand("predict", "closed-form prediction from the catalog");
  add_input(predict, in);
  add_output(predict, outopts);

  auto* catalog = app.add_subcommand("catalog", "catalog entries");
  add_output(catalog, outopts);
  catalog->add_subcommand("list", "list all entries")->fallthrough();
  catalog->require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "exhaustive search for a target class");
  add_output(verify, outopts);
  verify->add_option("--target", spec.target, "1-sphere, 2-sphere, closed-2-manifold, 2-manifold-with-boundary, "
                                              "connected-2-manifold-with-boundary, disconnected-2-manifold-with-boundary, "
                                              "disconnected-complex")
      ->required();
  verify->add_option("--max-edges", spec.max_edges, "edge bound")->capture_default_str();
  verify->add_option("--max-vertices", spec.max_vertices, "vertex bound")->capture_default_str();
  verify->add_flag("--connected", spec.connected_only, "connected graphs only");
  verify->add_option("--p", primes, "primary prime, then the cross-check prime");
  verify->add_option("--workers", spec.workers, "worker threads")->check(CLI::Range(1, 256));
  verify->add_flag("--force", spec.force, "lift the 12-edge / 10-vertex guard");

  auto* props = app.add_subcommand("props", "randomized property suite");
  add_output(props, outopts);
  props->add_option("--seed", seed, "base seed")->capture_default_str();
  props->add_option("--trials", trials, "number of random graphs")->check(CLI::Range(1, 1000000))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Emitter out{outopts};
  try {
    if (*catalog) return cmd_catalog(out);
    if (*verify) return cmd_verify(spec, primes, out);
    if (*props) return cmd_props(seed, trials, out);
    const mcx::Graph g = load_graph(in);
    if (*build) return cmd_build(g, emit_graph6, out);
    if (*homology) return cmd_homology(g, primes_from(primes, {2, 3}), out);
    if (*manifold) return cmd_manifold(g, primes_from(primes, {2, 3}), false, out);
    if (*classify) return cmd_manifold(g, primes_from(primes, {2, 3}), true, out);
    if (*predict) return cmd_predict(g, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mcx::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == mcx::Errc::CrossCheckMismatch ? kExitMismatch : kExitUsage;
  }
  return kExitUsage;
}
