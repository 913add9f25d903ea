#include "construct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "blocks.hpp"
#include "discharge.hpp"
#include "patterns.hpp"

namespace ptl {

bool WitnessReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const WitnessCheck& c) { return c.pass; });
}

namespace {

// The witness is assembled from a skeleton plane graph Q: Q's vertices
// become the pentagons, Q's faces (triangles and squares) become the
// diamonds, and Q's edges become vertices shared by two diamonds. Each
// triangle of Q carries one extra "mark" vertex at one of its corners,
// which belongs to that diamond only. Every Q vertex must have degree plus
// marks equal to 5.
struct SkelFace {
  std::vector<int> v;
  int mark = -1;  // Q vertex carrying the mark, triangles only
};

void add_ring_tube(std::vector<SkelFace>& faces, int k) {
  auto ring = [](int j, int i) { return 4 + 8 * (j - 1) + ((i % 8) + 8) % 8; };
  const int rings = 4 * k;
  const int z0 = 4 + 8 * rings;
  auto a = [](int i) { return i % 4; };
  auto z = [&](int i) { return z0 + i % 4; };

  faces.push_back({{a(0), a(1), a(2), a(3)}});
  for (int i = 0; i < 4; ++i) {
    faces.push_back({{a(i), ring(1, 2 * i), ring(1, 2 * i + 1)}, a(i)});
    faces.push_back({{a(i), ring(1, 2 * i + 1), ring(1, 2 * i + 2), a(i + 1)}});
  }
  for (int j = 1; j < rings; ++j) {
    auto x = [&](int i) { return ring(j, i); };
    auto y = [&](int i) { return ring(j + 1, i); };
    if (j % 2 == 1) {
      for (int p = 0; p < 4; ++p) {
        faces.push_back({{x(2 * p), x(2 * p + 1), y(2 * p + 1), y(2 * p)}});
        faces.push_back({{x(2 * p + 1), x(2 * p + 2), y(2 * p + 1)}, x(2 * p + 1)});
        faces.push_back({{x(2 * p + 2), y(2 * p + 1), y(2 * p + 2)}, y(2 * p + 2)});
      }
    } else {
      for (int i = 0; i < 8; ++i) faces.push_back({{x(i), x(i + 1), y(i + 1), y(i)}});
    }
  }
  for (int i = 0; i < 4; ++i) {
    faces.push_back({{z(i), ring(rings, 2 * i), ring(rings, 2 * i + 1)}, z(i)});
    faces.push_back({{z(i), ring(rings, 2 * i + 1), ring(rings, 2 * i + 2), z(i + 1)}});
  }
  faces.push_back({{z(0), z(1), z(2), z(3)}});
}

std::vector<SkelFace> skeleton(int k) {
  std::vector<SkelFace> faces;
  if (k == 0) {
    // Square antiprism on rings u (0..3) and w (4..7).
    auto u = [](int i) { return i % 4; };
    auto w = [](int i) { return 4 + i % 4; };
    faces.push_back({{u(0), u(1), u(2), u(3)}});
    for (int i = 0; i < 4; ++i) {
      faces.push_back({{u(i), u(i + 1), w(i)}, u(i)});
      faces.push_back({{w(i), w(i + 1), u(i + 1)}, w(i)});
    }
    faces.push_back({{w(3), w(2), w(1), w(0)}});
  } else {
    add_ring_tube(faces, k);
  }
  return faces;
}

// Flips faces until every skeleton edge is traversed once in each direction.
void orient(std::vector<SkelFace>& faces) {
  std::map<Edge, std::vector<int>> by_edge;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const auto& v = faces[f].v;
    for (std::size_t i = 0; i < v.size(); ++i) {
      int p = v[i], q = v[(i + 1) % v.size()];
      by_edge[{std::min(p, q), std::max(p, q)}].push_back(f);
    }
  }
  auto has_dart = [&](int f, int p, int q) {
    const auto& v = faces[f].v;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == p && v[(i + 1) % v.size()] == q) return true;
    return false;
  };
  std::vector<char> done(faces.size(), 0);
  std::vector<int> queue{0};
  done[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int f = queue[h];
    const auto v = faces[f].v;
    for (std::size_t i = 0; i < v.size(); ++i) {
      int p = v[i], q = v[(i + 1) % v.size()];
      for (int g : by_edge[{std::min(p, q), std::max(p, q)}]) {
        if (g == f) continue;
        if (done[g]) {
          if (has_dart(g, p, q)) throw std::logic_error("skeleton is not orientable");
          continue;
        }
        if (has_dart(g, p, q)) std::reverse(faces[g].v.begin(), faces[g].v.end());
        done[g] = 1;
        queue.push_back(g);
      }
    }
  }
}

struct Diamond {
  std::vector<int> quad;  // boundary 4-cycle, oriented like its skeleton face
  int fixed_spine = -1;   // quad index of the spine's first end, or -1 if free
};

struct Assembly {
  int n = 0;
  std::vector<Diamond> diamonds;
  std::vector<std::vector<int>> pentagons;
};

Assembly assemble(const std::vector<SkelFace>& faces) {
  Assembly as;
  std::map<Edge, int> edge_vertex;
  auto ev = [&](int p, int q) {
    Edge key{std::min(p, q), std::max(p, q)};
    auto [it, fresh] = edge_vertex.try_emplace(key, as.n);
    if (fresh) ++as.n;
    return it->second;
  };
  for (const auto& F : faces)
    for (std::size_t i = 0; i < F.v.size(); ++i) ev(F.v[i], F.v[(i + 1) % F.v.size()]);

  // (skeleton vertex) -> chain segments of its pentagon
  std::map<int, std::vector<std::vector<int>>> segments;
  for (const auto& F : faces) {
    const int d = static_cast<int>(F.v.size());
    const int mark = F.mark >= 0 ? as.n++ : -1;
    Diamond D;
    for (int i = 0; i < d; ++i) {
      const int q = F.v[i];
      const int in = ev(F.v[(i + d - 1) % d], q), out = ev(q, F.v[(i + 1) % d]);
      std::vector<int> seg{out};
      if (q == F.mark) {
        D.fixed_spine = static_cast<int>(D.quad.size());
        D.quad.push_back(mark);
        seg.push_back(mark);
      }
      seg.push_back(in);
      D.quad.push_back(out);
      segments[q].push_back(seg);
    }
    if (D.quad.size() != 4) throw std::logic_error("skeleton face does not yield a diamond");
    as.diamonds.push_back(D);
  }

  for (auto& [q, segs] : segments) {
    std::vector<int> cycle;
    std::vector<char> used(segs.size(), 0);
    std::size_t cur = 0;
    for (std::size_t step = 0; step < segs.size(); ++step) {
      used[cur] = 1;
      cycle.insert(cycle.end(), segs[cur].begin(), segs[cur].end() - 1);
      const int tail = segs[cur].back();
      std::size_t next = segs.size();
      for (std::size_t s = 0; s < segs.size(); ++s)
        if (!used[s] && segs[s].front() == tail) next = s;
      if (next == segs.size()) {
        if (step + 1 != segs.size() || segs[0].front() != tail) throw std::logic_error("broken pentagon chain");
        break;
      }
      cur = next;
    }
    if (cycle.size() != 5) throw std::logic_error("skeleton vertex does not yield a pentagon");
    as.pentagons.push_back(cycle);
  }
  return as;
}

// Chooses the free spines so that the graph stays {K4, Theta5}-free.
std::vector<int> choose_spines(const Assembly& as) {
  const auto fam = family_preset("K4+Theta5");
  Graph g(as.n);
  for (const auto& D : as.diamonds) {
    for (int i = 0; i < 4; ++i) g.add_edge(D.quad[i], D.quad[(i + 1) % 4]);
    if (D.fixed_spine >= 0) g.add_edge(D.quad[D.fixed_spine], D.quad[(D.fixed_spine + 2) % 4]);
  }
  if (!is_family_free(g, fam).free) throw std::runtime_error("skeleton already contains a forbidden pattern");

  std::vector<int> spine(as.diamonds.size(), -1);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == as.diamonds.size()) return true;
    const auto& D = as.diamonds[i];
    if (D.fixed_spine >= 0) {
      spine[i] = D.fixed_spine;
      return place(i + 1);
    }
    for (int s = 0; s < 2; ++s) {
      const int u = D.quad[s], v = D.quad[s + 2];
      g.add_edge(u, v);
      if (is_family_free_through(g, fam, u).free && is_family_free_through(g, fam, v).free) {
        spine[i] = s;
        if (place(i + 1)) return true;
      }
      g.remove_edge(u, v);
    }
    return false;
  };
  if (!place(0)) throw std::runtime_error("no spine assignment avoids K4 and Theta5");
  return spine;
}

PlaneGraph realize(const Assembly& as, const std::vector<int>& spine) {
  Graph g(as.n);
  std::vector<std::vector<int>> walks;
  for (std::size_t i = 0; i < as.diamonds.size(); ++i) {
    const auto& x = as.diamonds[i].quad;
    const int s = spine[i];
    for (int j = 0; j < 4; ++j) g.add_edge(x[j], x[(j + 1) % 4]);
    g.add_edge(x[s], x[(s + 2) % 4]);
    walks.push_back({x[s], x[(s + 1) % 4], x[(s + 2) % 4]});
    walks.push_back({x[s], x[(s + 2) % 4], x[(s + 3) % 4]});
  }
  for (const auto& p : as.pentagons) walks.push_back(p);

  // Face walk x0 x1 ... means the neighbor after x_{i-1} around x_i is x_{i+1}.
  std::vector<std::map<int, int>> succ(as.n);
  for (const auto& w : walks) {
    const int len = static_cast<int>(w.size());
    for (int i = 0; i < len; ++i) {
      const int prev = w[(i + len - 1) % len], at = w[i], next = w[(i + 1) % len];
      if (!succ[at].emplace(prev, next).second) throw std::logic_error("half-edge used twice");
    }
  }
  RotationSystem rot(as.n);
  for (int v = 0; v < as.n; ++v) {
    const int deg = g.degree(v);
    if (static_cast<int>(succ[v].size()) != deg) throw std::logic_error("incomplete rotation");
    int x = succ[v].begin()->first;
    for (int i = 0; i < deg; ++i) {
      rot[v].push_back(x);
      x = succ[v].at(x);
    }
    if (x != rot[v].front()) throw std::logic_error("rotation is not a single cycle");
  }
  PlaneGraph pg(std::move(g), std::move(rot));
  for (int f = 0; f < pg.face_count(); ++f)
    if (pg.face_length(f) == 5) {
      pg.set_outer(f);
      break;
    }
  return pg;
}

}  // namespace

PlaneGraph build_witness(int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (k > 3) throw std::invalid_argument("k must be at most 3");
  auto faces = skeleton(k);
  orient(faces);
  auto as = assemble(faces);
  auto pg = realize(as, choose_spines(as));
  auto report = verify_witness(pg, WitnessSpec{k});
  if (!report.pass()) {
    std::string failed;
    for (const auto& c : report.checks)
      if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name + " (" + c.detail + ")";
    throw std::runtime_error("witness construction failed: " + failed);
  }
  return pg;
}

WitnessReport verify_witness(const PlaneGraph& pg, const WitnessSpec& spec) {
  WitnessReport r;
  r.spec = spec;
  const Graph& g = pg.graph();
  r.n = g.order();
  r.e = g.size();
  r.f = pg.face_count();
  for (int f = 0; f < pg.face_count(); ++f) {
    r.triangles += pg.face_length(f) == 3 && f != pg.outer();
    r.pentagons += pg.face_length(f) == 5;
  }
  auto add = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const bool boost_planar = is_planar(g);
  add("planarity", boost_planar && r.n - r.e + r.f == 2,
      boost_planar ? "embedding valid, n - e + f = " + std::to_string(r.n - r.e + r.f) : "graph is not planar");
  add("vertex-count", r.n == spec.target_n(),
      std::to_string(r.n) + " vs " + std::to_string(spec.target_n()));
  add("edge-count", r.e == spec.target_e(),
      std::to_string(r.e) + " vs " + std::to_string(spec.target_e()));

  auto occ_text = [](const Occurrence& occ) {
    std::string s;
    for (std::size_t i = 0; i < occ.size(); ++i) s += (i ? "," : "") + std::to_string(occ[i]);
    return s;
  };
  auto k4 = contains_subgraph(g, complete_pattern(4));
  add("K4-free", !k4, k4 ? "K4 on " + occ_text(*k4) : "none found");
  auto th = find_theta5(g);
  add("Theta5-free", !th, th ? "Theta5 on " + occ_text(*th) : "none found");

  auto dec = decompose(pg);
  int others = 0;
  for (const auto& b : dec.blocks) {
    if (b.cls == BlockClass::B4Diamond)
      ++r.diamonds;
    else
      ++others;
  }
  add("block-census", others == 0 && !dec.blocks.empty(),
      std::to_string(r.diamonds) + " diamonds, " + std::to_string(others) + " other blocks");

  int boundary = 0, bad = 0;
  for (const auto& b : dec.blocks) {
    if (b.cls != BlockClass::B4Diamond) continue;
    for (auto [u, v] : b.edges)
      for (int f : {pg.face_of(u, v), pg.face_of(v, u)}) {
        if (pg.face_length(f) == 3 && f != pg.outer()) continue;
        ++boundary;
        bad += pg.face_length(f) != 5;
      }
  }
  add("boundary-census", bad == 0 && boundary == 4 * r.diamonds,
      std::to_string(boundary) + " boundary sides, " + std::to_string(bad) + " not on a 5-face");

  auto ledger = build_ledger(pg);
  bool zero = ledger.c_total == Rational(0) && ledger.identities_hold();
  for (const auto& b : ledger.blocks) zero = zero && b.certificate == Rational(0);
  add("discharge-equality", zero, "c(G) = " + ledger.c_total.str());
  return r;
}

}  // namespace ptl
