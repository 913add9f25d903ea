#include "ptl/ptl.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>
#include <thread>

#include "json.hpp"

#include "blocks.hpp"
#include "construct.hpp"
#include "discharge.hpp"
#include "embed.hpp"
#include "search.hpp"

using nlohmann::json;

struct ptl_graph {
  ptl::Graph g;
};

struct ptl_plane {
  ptl::PlaneGraph pg;
};

namespace {

thread_local std::string last_error;

struct Failure : std::runtime_error {
  Failure(ptl_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  ptl_status status;
};

template <class F>
ptl_status guard(F&& body) {
  try {
    body();
    return PTL_OK;
  } catch (const Failure& e) {
    last_error = e.what();
    return e.status;
  } catch (const ptl::ParseError& e) {
    last_error = e.what();
    return PTL_ERR_PARSE;
  } catch (const ptl::BoundExceeded& e) {
    last_error = e.what();
    return PTL_ERR_BOUND;
  } catch (const ptl::EmbeddingError& e) {
    last_error = e.what();
    return PTL_ERR_ARGUMENT;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return PTL_ERR_ARGUMENT;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return PTL_ERR_ARGUMENT;
  } catch (const std::length_error& e) {
    last_error = e.what();
    return PTL_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PTL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return PTL_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw Failure(PTL_ERR_ARGUMENT, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json envelope(const char* kind) { return json{{"schema_version", PTL_SCHEMA_VERSION}, {"report", kind}}; }

ptl_verdict to_c(ptl::Verdict v) {
  switch (v) {
    case ptl::Verdict::Pass: return PTL_PASS;
    case ptl::Verdict::Fail: return PTL_FAIL;
    case ptl::Verdict::Precondition: return PTL_PRECONDITION;
    case ptl::Verdict::Report: return PTL_REPORT;
  }
  return PTL_REPORT;
}

json witness_json(const ptl::KuratowskiWitness& w) {
  return {{"kind", ptl::to_string(w.kind)}, {"branch", w.branch}, {"paths", w.paths}};
}

// Embeds g or throws PTL_ERR_NONPLANAR with the witness stored in *witness.
ptl::PlaneGraph embed(const ptl::Graph& g, char** witness) {
  if (g.order() == 0) throw Failure(PTL_ERR_ARGUMENT, "graph has no vertices");
  if (!g.is_connected()) throw Failure(PTL_ERR_ARGUMENT, "graph is disconnected");
  auto r = ptl::test_planarity(g);
  if (auto* w = std::get_if<ptl::KuratowskiWitness>(&r)) {
    if (witness) *witness = dup(witness_json(*w).dump());
    throw Failure(PTL_ERR_NONPLANAR, "graph is not planar: contains a " + ptl::to_string(w->kind) + " subdivision");
  }
  return std::get<ptl::PlaneGraph>(std::move(r));
}

bool looks_like_embedding(const std::string& text) {
  std::istringstream is(text.substr(0, text.find('\n')));
  long long x;
  int count = 0;
  while (is >> x) ++count;
  return count == 4 && is.eof();
}

json block_json(const ptl::TriangularBlock& b) {
  json j{{"class", ptl::to_string(b.cls)}, {"vertices", b.vertices}, {"edges", json::array()}};
  for (auto [u, v] : b.edges) j["edges"].push_back({u, v});
  if (!b.signature.empty()) j["signature"] = b.signature;
  return j;
}

json bound_chain_json(const ptl::BlockCountBound& r) {
  json steps = json::array();
  for (auto s : r.trace.steps) steps.push_back({{"vertex", s.vertex}, {"degree", s.degree}});
  json blocks = json::array();
  for (const auto& b : r.blocks)
    blocks.push_back({{"vertices", b.vertices}, {"edges", b.edges}, {"size_class", b.size_class},
                      {"value", b.value}, {"constant", b.constant}});
  return {{"n", r.n},
          {"e", r.e},
          {"value", r.value},
          {"reduction", {{"steps", steps}, {"survivors", r.trace.survivors}, {"removed_edges", r.trace.removed_edges()}}},
          {"core_empty", r.core_empty},
          {"core_value", r.core_value},
          {"n_plus_37", r.empty_branch},
          {"b2", r.b2},
          {"b3", r.b3},
          {"b4", r.b4},
          {"b5", r.b5},
          {"blocks", blocks},
          {"lower_bound", r.lower_bound},
          {"links",
           {{"reduction", r.reduction_link},
            {"block_constants", r.block_constants},
            {"core", r.core_link},
            {"chain", r.chain_link}}},
          {"violations", r.violations},
          {"verdict", ptl::to_string(r.verdict)}};
}

std::vector<ptl::LevelResult> parallel_levels(int max_n, const ptl::FamilySpec& fam, int workers) {
  std::vector<std::vector<ptl::LevelResult>> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i)
    pool.emplace_back([&, i] {
      try {
        parts[i] = ptl::search_levels(max_n, fam, ptl::Partition{i, workers});
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  try {
    parts[0] = ptl::search_levels(max_n, fam, ptl::Partition{0, workers});
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return ptl::merge_levels(parts);
}

}  // namespace

extern "C" {

const char* ptl_last_error(void) { return last_error.c_str(); }
const char* ptl_version(void) { return "1.0.0"; }
void ptl_string_free(char* s) { std::free(s); }

ptl_status ptl_graph_new(int n, ptl_graph** out) {
  return guard([&] {
    need(out, "out");
    if (n < 0) throw Failure(PTL_ERR_ARGUMENT, "negative vertex count");
    *out = new ptl_graph{ptl::Graph(n)};
  });
}

ptl_status ptl_graph_from_graph6(const char* text, ptl_graph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new ptl_graph{ptl::parse_graph6(text)};
  });
}

ptl_status ptl_graph_add_edge(ptl_graph* g, int u, int v) {
  return guard([&] {
    need(g, "graph");
    if (u < 0 || v < 0 || u >= g->g.order() || v >= g->g.order())
      throw Failure(PTL_ERR_ARGUMENT, "edge endpoint out of range");
    g->g.add_edge(u, v);
  });
}

ptl_status ptl_graph_order(const ptl_graph* g, int* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->g.order();
  });
}

ptl_status ptl_graph_size(const ptl_graph* g, int* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->g.size();
  });
}

ptl_status ptl_graph_has_edge(const ptl_graph* g, int u, int v, int* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    if (u < 0 || v < 0 || u >= g->g.order() || v >= g->g.order())
      throw Failure(PTL_ERR_ARGUMENT, "vertex out of range");
    *out = g->g.has_edge(u, v);
  });
}

ptl_status ptl_graph_to_graph6(const ptl_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(ptl::write_graph6(g->g));
  });
}

void ptl_graph_free(ptl_graph* g) { delete g; }

ptl_status ptl_plane_from_text(const char* text, ptl_plane** out, char** witness) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    std::string s(text);
    if (looks_like_embedding(s)) {
      try {
        *out = new ptl_plane{ptl::parse_embedding(s)};
      } catch (const ptl::EmbeddingError& e) {
        throw Failure(PTL_ERR_PARSE, std::string("invalid embedding: ") + e.what());
      }
      return;
    }
    *out = new ptl_plane{embed(ptl::parse_graph6(s), witness)};
  });
}

ptl_status ptl_plane_from_graph(const ptl_graph* g, ptl_plane** out, char** witness) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = new ptl_plane{embed(g->g, witness)};
  });
}

ptl_status ptl_plane_face_count(const ptl_plane* p, int* out) {
  return guard([&] {
    need(p, "plane");
    need(out, "out");
    *out = p->pg.face_count();
  });
}

ptl_status ptl_plane_outer(const ptl_plane* p, int* out) {
  return guard([&] {
    need(p, "plane");
    need(out, "out");
    *out = p->pg.outer();
  });
}

ptl_status ptl_plane_set_outer(ptl_plane* p, int face) {
  return guard([&] {
    need(p, "plane");
    p->pg.set_outer(face);
  });
}

ptl_status ptl_plane_graph(const ptl_plane* p, ptl_graph** out) {
  return guard([&] {
    need(p, "plane");
    need(out, "out");
    *out = new ptl_graph{p->pg.graph()};
  });
}

ptl_status ptl_plane_to_embedding(const ptl_plane* p, char** out) {
  return guard([&] {
    need(p, "plane");
    need(out, "out");
    *out = dup(ptl::write_embedding(p->pg));
  });
}

void ptl_plane_free(ptl_plane* p) { delete p; }

ptl_status ptl_faces_json(const ptl_plane* p, char** out) {
  return guard([&] {
    need(p, "plane");
    need(out, "out");
    const auto& pg = p->pg;
    json j = envelope("faces");
    j["n"] = pg.graph().order();
    j["e"] = pg.graph().size();
    j["f"] = pg.face_count();
    j["outer"] = pg.outer();
    j["faces"] = json::array();
    for (int f = 0; f < pg.face_count(); ++f)
      j["faces"].push_back({{"index", f}, {"length", pg.face_length(f)}, {"walk", pg.faces()[f]}});
    *out = dup(j.dump());
  });
}

ptl_status ptl_decompose_json(const ptl_plane* p, char** out) {
  return guard([&] {
    need(p, "plane");
    need(out, "out");
    auto dec = ptl::decompose(p->pg);
    json j = envelope("decompose");
    j["n"] = p->pg.graph().order();
    j["e"] = p->pg.graph().size();
    j["outer"] = p->pg.outer();
    j["blocks"] = json::array();
    for (const auto& b : dec.blocks) j["blocks"].push_back(block_json(b));
    j["counts"] = json::object();
    for (auto [cls, count] : dec.counts) j["counts"][ptl::to_string(cls)] = count;
    *out = dup(j.dump());
  });
}

ptl_status ptl_discharge_json(const ptl_plane* p, char** out, ptl_verdict* verdict) {
  return guard([&] {
    need(p, "plane");
    need(out, "out");
    const auto& pg = p->pg;
    auto lem = ptl::certificate_check(pg);
    auto chain = ptl::bound_chain(pg.graph());
    const auto& L = lem.ledger;

    json j = envelope("discharge");
    j["n"] = L.vertex_count;
    j["e"] = L.edge_count;
    j["f"] = L.face_count;
    j["outer"] = pg.outer();
    j["edges"] = json::array();
    for (const auto& r : L.edges)
      j["edges"].push_back({{"u", r.edge.first}, {"v", r.edge.second}, {"l1", r.len1}, {"l2", r.len2},
                            {"f", r.f.str()}, {"block", r.block}});
    j["blocks"] = json::array();
    for (const auto& b : L.blocks) {
      json row{{"class", ptl::to_string(b.cls)}, {"vertices", b.vertices}, {"e", b.edges},
               {"f", b.f.str()}, {"c", b.certificate.str()}};
      if (!b.signature.empty()) row["signature"] = b.signature;
      j["blocks"].push_back(row);
    }
    j["totals"] = {{"f", L.f_total.str()}, {"e", L.edge_count}, {"c", L.c_total.str()}};
    j["identities"] = {{"edges_partitioned", L.edges_partitioned},
                       {"faces_partitioned", L.faces_partitioned},
                       {"faces_normalized", L.faces_normalized},
                       {"certificates_add_up", L.certificates_add_up},
                       {"euler", L.euler}};
    j["violations"] = lem.violations;
    if (!lem.freeness.free)
      j["forbidden"] = {{"pattern", lem.freeness.pattern}, {"vertices", lem.freeness.occurrence}};
    if (lem.low_degree_vertex >= 0) j["low_degree_vertex"] = lem.low_degree_vertex;
    j["bound_chain"] = bound_chain_json(chain);
    j["verdict"] = ptl::to_string(lem.verdict);
    if (verdict) *verdict = to_c(lem.verdict);
    *out = dup(j.dump());
  });
}

ptl_status ptl_bound_chain_json(const ptl_graph* g, char** out, ptl_verdict* verdict) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    auto r = ptl::bound_chain(g->g);
    json j = envelope("bound_chain");
    j.update(bound_chain_json(r));
    if (verdict) *verdict = to_c(r.verdict);
    *out = dup(j.dump());
  });
}

ptl_status ptl_search_json(const char* family, int lo, int hi, const ptl_search_options* opts, char** out) {
  return guard([&] {
    need(family, "family");
    need(out, "out");
    ptl_search_options o = opts ? *opts : ptl_search_options{1, 10, 0};
    if (o.workers < 1) throw Failure(PTL_ERR_ARGUMENT, "worker count must be at least 1");
    auto fam = ptl::family_preset(family);
    ptl::SearchLimits limits{o.max_n, o.long_run != 0};
    auto rows = ptl::bound_table(lo, hi, fam, limits, [&](int max_n, const ptl::FamilySpec& f) {
      return parallel_levels(max_n, f, o.workers);
    });
    json j = envelope("search");
    j["family"] = fam.name;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json row{{"n", r.n},           {"ex", r.ex},           {"bound", r.bound},
               {"slack", r.slack},   {"flagged", r.flagged}, {"witness_only", r.witness_only},
               {"disconnected", r.disconnected}};
      if (!r.witness_only) {
        row["examined"] = r.examined;
        row["witnesses"] = r.witnesses;
      }
      j["rows"].push_back(row);
    }
    *out = dup(j.dump());
  });
}

ptl_status ptl_family_names_json(char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup(json(ptl::family_preset_names()).dump());
  });
}

ptl_status ptl_construct(int k, ptl_plane** out) {
  return guard([&] {
    need(out, "out");
    if (k < 0 || k > 3) throw Failure(PTL_ERR_ARGUMENT, "k must be in 0..3");
    try {
      *out = new ptl_plane{ptl::build_witness(k)};
    } catch (const std::runtime_error& e) {
      throw Failure(PTL_ERR_CONSTRUCT, e.what());
    }
  });
}

ptl_status ptl_verify_json(const ptl_plane* p, int k, char** out, int* pass) {
  return guard([&] {
    need(p, "plane");
    need(out, "out");
    if (k < 0) throw Failure(PTL_ERR_ARGUMENT, "k must be non-negative");
    auto r = ptl::verify_witness(p->pg, ptl::WitnessSpec{k});
    json j = envelope("verify");
    j["spec"] = {{"k", k}, {"n", r.spec.target_n()}, {"e", r.spec.target_e()}};
    j["n"] = r.n;
    j["e"] = r.e;
    j["f"] = r.f;
    j["tight"] = 11LL * r.e == 25LL * (r.n - 2);
    j["census"] = {{"diamonds", r.diamonds}, {"triangles", r.triangles}, {"pentagons", r.pentagons}};
    j["checks"] = json::array();
    for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["pass"] = r.pass();
    if (pass) *pass = r.pass();
    *out = dup(j.dump());
  });
}

}  // extern "C"
