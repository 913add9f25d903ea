#include "embed.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace ptl {

std::vector<std::vector<int>> trace_faces(const RotationSystem& rotation) {
  const int n = static_cast<int>(rotation.size());
  std::vector<std::vector<char>> used(n);
  for (int u = 0; u < n; ++u) used[u].assign(rotation[u].size(), 0);
  auto pos = [&](int u, int v) {
    const auto& r = rotation[u];
    return static_cast<int>(std::find(r.begin(), r.end(), v) - r.begin());
  };

  // Half-edges in lexicographic (u, v) order.
  std::vector<std::pair<int, int>> order;
  for (int u = 0; u < n; ++u)
    for (int v : rotation[u]) order.emplace_back(u, v);
  std::sort(order.begin(), order.end());

  std::vector<std::vector<int>> faces;
  for (auto [su, sv] : order) {
    if (used[su][pos(su, sv)]) continue;
    std::vector<int> walk;
    int u = su, v = sv;
    while (!used[u][pos(u, v)]) {
      used[u][pos(u, v)] = 1;
      walk.push_back(u);
      const auto& rv = rotation[v];
      int i = pos(v, u);
      int w = rv[(i + 1) % rv.size()];
      u = v;
      v = w;
    }
    faces.push_back(std::move(walk));
  }
  if (faces.empty()) faces.emplace_back();  // single vertex: one empty face
  return faces;
}

PlaneGraph::PlaneGraph(Graph g, RotationSystem rotation, int outer)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  const int n = graph_.order();
  if (n < 1) throw EmbeddingError("plane graph needs at least one vertex");
  if (static_cast<int>(rotation_.size()) != n) throw EmbeddingError("rotation size mismatch");
  for (int v = 0; v < n; ++v) {
    auto listed = rotation_[v];
    std::sort(listed.begin(), listed.end());
    if (std::adjacent_find(listed.begin(), listed.end()) != listed.end())
      throw EmbeddingError("vertex " + std::to_string(v) + " lists a neighbor twice");
    if (listed != graph_.neighbors(v))
      throw EmbeddingError("rotation at vertex " + std::to_string(v) + " does not match its neighbors");
  }
  if (!graph_.is_connected()) throw EmbeddingError("plane graph must be connected");

  faces_ = trace_faces(rotation_);
  if (n - graph_.size() + face_count() != 2)
    throw EmbeddingError("rotation system is not planar (Euler characteristic " +
                         std::to_string(n - graph_.size() + face_count()) + ")");

  face_at_.resize(n);
  for (int v = 0; v < n; ++v) face_at_[v].assign(rotation_[v].size(), -1);
  for (int f = 0; f < face_count(); ++f) {
    const auto& w = faces_[f];
    for (std::size_t i = 0; i < w.size(); ++i) face_at_[w[i]][slot(w[i], w[(i + 1) % w.size()])] = f;
  }
  set_outer(outer < 0 ? 0 : outer);
}

void PlaneGraph::set_outer(int f) {
  if (f < 0 || f >= face_count()) throw std::out_of_range("outer face index " + std::to_string(f));
  outer_ = f;
}

int PlaneGraph::slot(int u, int v) const {
  if (u < 0 || u >= graph_.order()) throw std::out_of_range("unknown vertex");
  const auto& r = rotation_[u];
  auto it = std::find(r.begin(), r.end(), v);
  if (it == r.end())
    throw std::out_of_range("unknown edge " + std::to_string(u) + "-" + std::to_string(v));
  return static_cast<int>(it - r.begin());
}

int PlaneGraph::face_of(int u, int v) const { return face_at_[u][slot(u, v)]; }

std::pair<int, int> PlaneGraph::faces_of_edge(int u, int v) const {
  return {face_length(face_of(u, v)), face_length(face_of(v, u))};
}

std::string to_string(KuratowskiWitness::Kind k) {
  return k == KuratowskiWitness::Kind::K5 ? "K5" : "K3,3";
}

std::string validate_witness(const Graph& g, const KuratowskiWitness& w) {
  const bool k5 = w.kind == KuratowskiWitness::Kind::K5;
  const std::size_t nb = k5 ? 5 : 6, np = k5 ? 10 : 9;
  if (w.branch.size() != nb) return "wrong number of branch vertices";
  if (w.paths.size() != np) return "wrong number of paths";
  std::set<int> branch(w.branch.begin(), w.branch.end());
  if (branch.size() != nb) return "repeated branch vertex";
  for (int b : branch)
    if (b < 0 || b >= g.order()) return "branch vertex out of range";

  std::set<int> interior;
  std::set<std::pair<int, int>> pairs;
  for (const auto& p : w.paths) {
    if (p.size() < 2) return "path too short";
    if (!branch.count(p.front()) || !branch.count(p.back())) return "path endpoint is not a branch vertex";
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= g.order() || p[i + 1] < 0 || p[i + 1] >= g.order())
        return "path vertex out of range";
      if (!g.has_edge(p[i], p[i + 1])) return "path uses a non-edge";
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (branch.count(p[i])) return "path passes through a branch vertex";
      if (!interior.insert(p[i]).second) return "paths are not internally disjoint";
    }
    auto key = std::minmax(p.front(), p.back());
    if (key.first == key.second) return "path is a loop";
    if (!pairs.insert(key).second) return "two paths join the same branch pair";
  }
  if (k5) return {};

  // K3,3: the branch pairs must form a complete bipartite graph.
  std::map<int, int> side;
  side[w.branch[0]] = 0;
  for (int round = 0; round < 6; ++round)
    for (auto [a, b] : pairs) {
      if (side.count(a) && !side.count(b)) side[b] = 1 - side[a];
      if (side.count(b) && !side.count(a)) side[a] = 1 - side[b];
    }
  if (side.size() != 6) return "branch pairs are not connected";
  int left = 0;
  for (auto [v, s] : side) left += s == 0;
  if (left != 3) return "bipartition is not 3+3";
  for (auto [a, b] : pairs)
    if (side[a] == side[b]) return "path joins two vertices on the same side";
  return {};
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.order());
  int idx = 0;
  for (auto [u, v] : g.edges()) {
    auto e = boost::add_edge(u, v, bg).first;
    boost::put(boost::edge_index, bg, e, idx++);
  }
  return bg;
}

KuratowskiWitness witness_from_edges(const Graph& g, const std::vector<Edge>& edges) {
  Graph sub(g.order(), edges);
  KuratowskiWitness w;
  for (int v = 0; v < sub.order(); ++v)
    if (sub.degree(v) >= 3) w.branch.push_back(v);
  w.kind = w.branch.size() == 5 ? KuratowskiWitness::Kind::K5 : KuratowskiWitness::Kind::K33;
  std::set<int> branch(w.branch.begin(), w.branch.end());
  std::set<std::pair<int, int>> used;
  for (int b : w.branch)
    for (int first : sub.neighbors(b)) {
      if (used.count({b, first})) continue;
      std::vector<int> path{b};
      int prev = b, cur = first;
      while (true) {
        used.insert({prev, cur});
        used.insert({cur, prev});
        path.push_back(cur);
        if (branch.count(cur)) break;
        auto nb = sub.neighbors(cur);
        int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      w.paths.push_back(std::move(path));
    }
  return w;
}

}  // namespace

std::variant<PlaneGraph, KuratowskiWitness> test_planarity(const Graph& g) {
  if (g.order() < 1) throw EmbeddingError("empty graph");
  if (!g.is_connected()) throw EmbeddingError("input graph is disconnected");
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> emb(g.order());
  std::vector<BoostEdge> kur;
  namespace bm = boost::boyer_myrvold_params;
  bool planar = boost::boyer_myrvold_planarity_test(bm::graph = bg, bm::embedding = emb.data(),
                                                    bm::kuratowski_subgraph = std::back_inserter(kur));
  if (planar) {
    RotationSystem rot(g.order());
    for (int v = 0; v < g.order(); ++v)
      for (const auto& e : emb[v]) {
        int a = static_cast<int>(boost::source(e, bg)), b = static_cast<int>(boost::target(e, bg));
        rot[v].push_back(a == v ? b : a);
      }
    return PlaneGraph(g, std::move(rot));
  }
  std::vector<Edge> edges;
  for (const auto& e : kur)
    edges.emplace_back(static_cast<int>(boost::source(e, bg)), static_cast<int>(boost::target(e, bg)));
  // The raw subgraph can carry extra edges; an edge-minimal nonplanar
  // subgraph is always a subdivision of K5 or K3,3.
  for (std::size_t i = edges.size(); i-- > 0;) {
    auto trial = edges;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (!is_planar(Graph(g.order(), trial))) edges = std::move(trial);
  }
  auto w = witness_from_edges(g, edges);
  if (auto why = validate_witness(g, w); !why.empty())
    throw std::logic_error("Kuratowski extraction produced an invalid witness: " + why);
  return w;
}

bool is_planar(const Graph& g) {
  const int n = g.order();
  if (n <= 4) return true;
  if (g.size() > 3 * n - 6) return false;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

namespace {

// Builds all planar rotation systems by inserting edges one at a time into
// a growing connected subgraph. A pendant edge goes into any corner of its
// old endpoint; an edge between two present vertices goes into any pair of
// corners lying on one common face. Every planar rotation system of the
// final graph arises exactly once.
class RotationEnumerator {
 public:
  RotationEnumerator(const Graph& g, const std::function<void(const RotationSystem&)>& visit)
      : g_(g), visit_(visit), rot_(g.order()) {
    const int n = g.order();
    std::vector<int> order{0}, seen(n, 0), parent(n, -1);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int w : g.neighbors(order[i]))
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = order[i];
          order.push_back(w);
        }
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    for (int i = 1; i < n; ++i) {
      int w = order[i];
      steps_.push_back({parent[w], w, true});
      for (int u : g.neighbors(w))
        if (u != parent[w] && rank[u] < i) steps_.push_back({u, w, false});
    }
  }

  void run() { step(0); }

 private:
  struct Step {
    int a, b;
    bool pendant;
  };

  static std::vector<int> normalized(const std::vector<int>& cyc, bool reverse) {
    std::vector<int> c = cyc;
    if (reverse) std::reverse(c.begin(), c.end());
    if (!c.empty()) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    return c;
  }

  void emit() {
    // Keep the lexicographically smaller of the rotation and its mirror.
    for (const auto& r : rot_) {
      if (r.size() < 3) continue;
      auto fwd = normalized(r, false), back = normalized(r, true);
      if (fwd == back) continue;
      if (fwd > back) return;
      break;
    }
    visit_(rot_);
  }

  void step(std::size_t i) {
    if (i == steps_.size()) {
      emit();
      return;
    }
    auto [a, b, pendant] = steps_[i];
    if (pendant) {
      rot_[b] = {a};
      auto& ra = rot_[a];
      const std::size_t slots = std::max<std::size_t>(ra.size(), 1);
      for (std::size_t j = 0; j < slots; ++j) {
        ra.insert(ra.begin() + (ra.empty() ? 0 : j + 1), b);
        step(i + 1);
        ra.erase(std::find(ra.begin(), ra.end(), b));
      }
      rot_[b].clear();
      return;
    }
    // Corner j at vertex x sits between rot[x][j] and its successor; it
    // belongs to the face of the half-edge rot[x][j] -> x.
    auto faces = trace_faces(rot_);
    std::map<std::pair<int, int>, int> face_of;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
      for (std::size_t k = 0; k < faces[f].size(); ++k)
        face_of[{faces[f][k], faces[f][(k + 1) % faces[f].size()]}] = f;
    const auto ca = rot_[a], cb = rot_[b];
    for (std::size_t ja = 0; ja < ca.size(); ++ja)
      for (std::size_t jb = 0; jb < cb.size(); ++jb) {
        if (face_of[{ca[ja], a}] != face_of[{cb[jb], b}]) continue;
        rot_[a].insert(rot_[a].begin() + ja + 1, b);
        rot_[b].insert(rot_[b].begin() + jb + 1, a);
        step(i + 1);
        rot_[a] = ca;
        rot_[b] = cb;
      }
  }

  const Graph& g_;
  const std::function<void(const RotationSystem&)>& visit_;
  RotationSystem rot_;
  std::vector<Step> steps_;
};

}  // namespace

void for_each_rotation(const Graph& g, const std::function<void(const RotationSystem&)>& visit, int max_n) {
  if (g.order() > max_n)
    throw std::length_error("embedding enumeration limited to " + std::to_string(max_n) + " vertices");
  if (g.order() < 1) return;
  if (!g.is_connected()) throw EmbeddingError("input graph is disconnected");
  RotationEnumerator(g, visit).run();
}

void for_each_embedding(const Graph& g, const std::function<void(const PlaneGraph&)>& visit, int max_n) {
  for_each_rotation(
      g,
      [&](const RotationSystem& rot) {
        PlaneGraph pg(g, rot);
        for (int f = 0; f < pg.face_count(); ++f) {
          pg.set_outer(f);
          visit(pg);
        }
      },
      max_n);
}

std::vector<PlaneGraph> all_embeddings(const Graph& g, int max_n) {
  std::vector<PlaneGraph> out;
  for_each_embedding(g, [&](const PlaneGraph& pg) { out.push_back(pg); }, max_n);
  return out;
}

std::string write_embedding(const PlaneGraph& pg) {
  std::ostringstream os;
  os << pg.graph().order() << ' ' << pg.graph().size() << ' ' << pg.face_count() << ' ' << pg.outer() << '\n';
  for (const auto& r : pg.rotation()) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
    os << '\n';
  }
  return os.str();
}

PlaneGraph parse_embedding(std::string_view text) {
  std::size_t pos = 0;
  auto next_line = [&](std::size_t& start) -> std::optional<std::string_view> {
    if (pos >= text.size()) return std::nullopt;
    start = pos;
    std::size_t nl = text.find('\n', pos);
    std::size_t stop = nl == std::string_view::npos ? text.size() : nl;
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    auto line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  };
  auto ints = [](std::string_view line, std::size_t base) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      long long v = 0;
      auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc() || (p != line.data() + line.size() && *p != ' ' && *p != '\t'))
        throw ParseError("expected an integer", base + i);
      out.push_back(v);
      i = static_cast<std::size_t>(p - line.data());
    }
    return out;
  };

  std::size_t start = 0;
  auto header_line = next_line(start);
  if (!header_line) throw ParseError("missing header", 0);
  auto header = ints(*header_line, start);
  if (header.size() != 4) throw ParseError("header must be \"n e f outer\"", start);
  const long long n = header[0];
  if (n < 1 || n > 1000000) throw ParseError("vertex count out of range", start);

  RotationSystem rot(n);
  std::vector<Edge> edges;
  for (long long v = 0; v < n; ++v) {
    auto line = next_line(start);
    if (!line) throw ParseError("missing rotation line for vertex " + std::to_string(v), text.size());
    for (long long w : ints(*line, start)) {
      if (w < 0 || w >= n || w == v) throw ParseError("bad neighbor " + std::to_string(w), start);
      rot[v].push_back(static_cast<int>(w));
      if (v < w) edges.emplace_back(static_cast<int>(v), static_cast<int>(w));
    }
  }
  while (auto extra = next_line(start))
    if (extra->find_first_not_of(" \t") != std::string_view::npos) throw ParseError("trailing content", start);

  Graph g(static_cast<int>(n), edges);
  for (long long v = 0; v < n; ++v)
    for (int w : rot[v])
      if (!g.has_edge(static_cast<int>(v), w)) throw EmbeddingError("asymmetric rotation system");
  if (g.size() != header[1]) throw EmbeddingError("edge count does not match header");
  PlaneGraph pg(std::move(g), std::move(rot));
  if (pg.face_count() != header[2]) throw EmbeddingError("face count does not match header");
  if (header[3] < 0 || header[3] >= pg.face_count()) throw EmbeddingError("outer face index out of range");
  pg.set_outer(static_cast<int>(header[3]));
  return pg;
}

}  // namespace ptl
