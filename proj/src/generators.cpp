#include "outerspatial/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "outerspatial/embedding.hpp"

namespace outerspatial {

namespace {

using VertexCycle = std::vector<int>;

TwoComplex from_vertex_faces(const std::vector<std::string>& vertex_names, const std::vector<VertexCycle>& faces,
                             const std::vector<std::string>& face_names, const std::vector<std::pair<int, int>>& extra = {}) {
  std::set<std::pair<int, int>> edges(extra.begin(), extra.end());
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) edges.insert(std::minmax(f[i], f[(i + 1) % f.size()]));
  }
  Graph g;
  for (const auto& n : vertex_names) g.add_vertex(n);
  for (const auto& [u, v] : edges) g.add_edge(vertex_names[static_cast<std::size_t>(u)] + "-" + vertex_names[static_cast<std::size_t>(v)], u, v);
  std::vector<Face> out;
  for (std::size_t i = 0; i < faces.size(); ++i) out.push_back(face_from_vertices(g, face_names[i], faces[i]));
  return TwoComplex(std::move(g), std::move(out));
}

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

TwoComplex tetrahedron() {
  return from_vertex_faces({"a", "b", "c", "d"}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, {"abc", "abd", "acd", "bcd"});
}

TwoComplex bipyramid(int k) {
  if (k < 3) throw std::invalid_argument("bipyramid: need at least 3 equator vertices");
  std::vector<std::string> names{"n", "s"};
  for (int i = 0; i < k; ++i) names.push_back("e" + std::to_string(i));
  std::vector<VertexCycle> faces;
  std::vector<std::string> face_names;
  for (int apex = 0; apex < 2; ++apex) {
    for (int i = 0; i < k; ++i) {
      faces.push_back({apex, 2 + i, 2 + (i + 1) % k});
      face_names.push_back(names[static_cast<std::size_t>(apex)] + std::to_string(i));
    }
  }
  return from_vertex_faces(names, faces, face_names);
}

TwoComplex bipyramid_with_equator(int k) {
  const TwoComplex base = bipyramid(k);
  std::vector<Face> faces = base.faces();
  std::vector<int> equator;
  for (int i = 0; i < k; ++i) equator.push_back(2 + i);
  faces.push_back(face_from_vertices(base.graph(), "equator", equator));
  return TwoComplex(base.graph(), std::move(faces));
}

TwoComplex torus7() {
  std::vector<VertexCycle> faces;
  std::vector<std::string> names;
  for (int i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    names.push_back("a" + std::to_string(i));
  }
  for (int i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    names.push_back("b" + std::to_string(i));
  }
  return from_vertex_faces(numbered("", 7), faces, names);
}

TwoComplex projective_plane6() {
  const std::vector<VertexCycle> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                       {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  return from_vertex_faces(numbered("", 6), faces, numbered("t", 10));
}

Graph complete_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::string(1, static_cast<char>('a' + i)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(g.vertex_name(i) + g.vertex_name(j), i, j);
  }
  return g;
}

Graph k23() {
  Graph g;
  for (const char* n : {"a", "b", "x", "y", "z"}) g.add_vertex(n);
  for (int hub = 0; hub < 2; ++hub) {
    for (int leaf = 2; leaf < 5; ++leaf) g.add_edge(g.vertex_name(hub) + g.vertex_name(leaf), hub, leaf);
  }
  return g;
}

TwoComplex graph_cone(const Graph& g) { return cone(TwoComplex(g, {})); }

std::vector<Cycle> triangles(const Graph& g) {
  std::vector<Cycle> out;
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (int b = a + 1; b < g.vertex_count(); ++b) {
      if (!g.edge_between(a, b)) continue;
      for (int c = b + 1; c < g.vertex_count(); ++c) {
        if (g.edge_between(a, c) && g.edge_between(b, c)) out.push_back(make_cycle(g, {a, b, c}));
      }
    }
  }
  return out;
}

bool locally_2_connected(const TwoComplex& complex) {
  for (int v = 0; v < complex.vertex_count(); ++v) {
    const LinkGraph link = link_graph(complex, v);
    if (!link.graph.is_simple() || !is_2_connected(link.graph)) return false;
  }
  return true;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// Oriented faces of a random sphere: stacked triangulation plus flips and
// merges.
std::vector<VertexCycle> random_sphere(std::mt19937_64& rng, int n, int flips, int merges) {
  std::vector<VertexCycle> faces{{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  for (int x = 4; x < n; ++x) {
    const auto i = draw(rng, faces.size());
    const VertexCycle t = faces[i];
    faces[i] = {t[0], t[1], x};
    faces.push_back({t[1], t[2], x});
    faces.push_back({t[2], t[0], x});
  }
  const auto degree_of = [&](int v) {
    int d = 0;
    for (const auto& f : faces) d += static_cast<int>(std::count(f.begin(), f.end(), v));
    return d;
  };
  // Face containing the directed edge a -> b, with the position of a.
  const auto find_directed = [&](int a, int b) -> std::pair<int, int> {
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const auto& f = faces[i];
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (f[j] == a && f[(j + 1) % f.size()] == b) return {static_cast<int>(i), static_cast<int>(j)};
      }
    }
    return {-1, -1};
  };
  const auto adjacent = [&](int a, int b) { return find_directed(a, b).first != -1 || find_directed(b, a).first != -1; };
  const auto rotated = [](VertexCycle f, int start) {
    std::rotate(f.begin(), f.begin() + start, f.end());
    return f;
  };
  for (int k = 0; k < flips; ++k) {
    const auto i = draw(rng, faces.size());
    const auto j = static_cast<int>(draw(rng, faces[i].size()));
    const VertexCycle t1 = rotated(faces[i], j);
    if (t1.size() != 3) continue;
    const int u = t1[0], v = t1[1], w = t1[2];
    const auto [i2, j2] = find_directed(v, u);
    if (i2 == -1 || faces[static_cast<std::size_t>(i2)].size() != 3) continue;
    const int z = rotated(faces[static_cast<std::size_t>(i2)], j2)[2];
    if (adjacent(w, z) || degree_of(u) <= 3 || degree_of(v) <= 3) continue;
    faces[i] = {u, z, w};
    faces[static_cast<std::size_t>(i2)] = {z, v, w};
  }
  for (int k = 0; k < merges; ++k) {
    const auto i = draw(rng, faces.size());
    const auto j = static_cast<int>(draw(rng, faces[i].size()));
    const VertexCycle f1 = rotated(faces[i], j);
    const int u = f1[0], v = f1[1];
    const auto [i2, j2] = find_directed(v, u);
    if (i2 == -1 || degree_of(u) <= 3 || degree_of(v) <= 3) continue;
    const VertexCycle f2 = rotated(faces[static_cast<std::size_t>(i2)], j2);  // v, u, ...
    VertexCycle merged(f1.begin() + 1, f1.end());  // v ... back before u
    merged.push_back(u);
    merged.insert(merged.end(), f2.begin() + 2, f2.end());
    std::set<int> distinct(merged.begin(), merged.end());
    if (distinct.size() != merged.size()) continue;
    faces[i] = merged;
    faces.erase(faces.begin() + i2);
  }
  return faces;
}

using Corner = std::tuple<int, int, int>;  // (middle, lower end, upper end)

Corner corner(int before, int at, int after) { return {at, std::min(before, after), std::max(before, after)}; }

void add_corners(std::set<Corner>& corners, const VertexCycle& c) {
  for (std::size_t i = 0; i < c.size(); ++i) corners.insert(corner(c[(i + c.size() - 1) % c.size()], c[i], c[(i + 1) % c.size()]));
}

// Random cycle through edge (a, b) by randomized depth-first search for a
// path from b back to a. Corners already used by a face are avoided so that
// links stay simple.
std::optional<VertexCycle> random_cycle_through(std::mt19937_64& rng, const std::vector<std::vector<int>>& adj, int a, int b,
                                                std::size_t max_len, const std::set<Corner>& taken) {
  VertexCycle path{a, b};
  std::vector<bool> used(adj.size(), false);
  used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
  std::function<bool()> extend = [&]() -> bool {
    const int at = path.back();
    const int before = path[path.size() - 2];
    std::vector<int> nbrs = adj[static_cast<std::size_t>(at)];
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    for (int w : nbrs) {
      if (w == before || taken.count(corner(before, at, w))) continue;
      if (w == a) {
        if (path.size() >= 3 && !taken.count(corner(at, a, b))) return true;
        continue;
      }
      if (used[static_cast<std::size_t>(w)] || path.size() >= max_len) continue;
      used[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  if (!extend()) return std::nullopt;
  return path;
}

}  // namespace

TwoComplex random_complex(std::uint64_t seed, const RandomParams& params) {
  if (params.vertices < 4 || params.vertices > 12) throw std::invalid_argument("random: vertices must be in 4..12");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<VertexCycle> faces = random_sphere(rng, params.vertices, params.flips, params.merges);
    const auto n = static_cast<std::size_t>(params.vertices);
    std::set<std::pair<int, int>> edges;
    for (const auto& f : faces) {
      for (std::size_t i = 0; i < f.size(); ++i) edges.insert(std::minmax(f[i], f[(i + 1) % f.size()]));
    }
    std::vector<std::pair<int, int>> added;
    for (int k = 0; k < params.extra_edges; ++k) {
      const int a = static_cast<int>(draw(rng, n));
      const int b = static_cast<int>(draw(rng, n));
      if (a == b || edges.count(std::minmax(a, b))) continue;
      edges.insert(std::minmax(a, b));
      added.emplace_back(std::minmax(a, b));
    }
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::set<std::set<std::pair<int, int>>> seen;
    const auto key = [](const VertexCycle& c) {
      std::set<std::pair<int, int>> k;
      for (std::size_t i = 0; i < c.size(); ++i) k.insert(std::minmax(c[i], c[(i + 1) % c.size()]));
      return k;
    };
    std::set<Corner> corners;
    for (const auto& f : faces) {
      seen.insert(key(f));
      add_corners(corners, f);
    }
    std::vector<std::pair<int, int>> through;
    for (const auto& e : added) through.insert(through.end(), {e, e});
    for (int k = 0; k < params.extra_cycles; ++k) {
      const auto it = std::next(edges.begin(), static_cast<std::ptrdiff_t>(draw(rng, edges.size())));
      through.push_back(*it);
    }
    std::size_t realized = 0;
    for (const auto& [a, b] : through) {
      const auto c = random_cycle_through(rng, adj, a, b, 3 + draw(rng, 4), corners);
      if (c && seen.insert(key(*c)).second) {
        add_corners(corners, *c);
        faces.push_back(*c);
        ++realized;
      }
    }
    if (static_cast<int>(added.size()) != params.extra_edges || realized != through.size()) continue;
    std::vector<std::string> face_names = numbered("f", static_cast<int>(faces.size()));
    TwoComplex complex = from_vertex_faces(numbered("", params.vertices), faces, face_names, added);
    if (!is_valid(complex) || !locally_2_connected(complex)) continue;
    if (rotation_system_count(complex.graph()) > params.cap) continue;
    return complex;
  }
  throw std::runtime_error("random: no admissible complex drawn for these parameters");
}

Graph random_planar_graph(std::mt19937_64& rng, int vertices, int deletions) {
  const std::vector<VertexCycle> faces = random_sphere(rng, std::max(vertices, 4), 2 * vertices, 0);
  std::set<std::pair<int, int>> edges;
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) edges.insert(std::minmax(f[i], f[(i + 1) % f.size()]));
  }
  for (int k = 0; k < deletions && !edges.empty(); ++k) {
    edges.erase(std::next(edges.begin(), static_cast<std::ptrdiff_t>(draw(rng, edges.size()))));
  }
  return Graph::from_edge_list(std::max(vertices, 4), std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

}  // namespace outerspatial
