#include "outerspatial/complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace outerspatial {

namespace {

std::vector<int> walk_vertices(const Graph& g, const std::vector<HalfEdge>& walk) {
  std::vector<int> out;
  out.reserve(walk.size());
  for (const HalfEdge& d : walk) out.push_back(g.vertex_of(d));
  return out;
}

void check_closed(const Graph& g, const Face& face) {
  if (face.boundary.empty()) throw std::invalid_argument("face '" + face.name + "' has an empty boundary");
  for (const HalfEdge& d : face.boundary) {
    if (d.edge < 0 || d.edge >= g.edge_count() || (d.end != 0 && d.end != 1)) {
      throw std::invalid_argument("face '" + face.name + "' references an unknown edge");
    }
  }
  const std::size_t k = face.boundary.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int head = g.opposite(face.boundary[i]);
    const int next_tail = g.vertex_of(face.boundary[(i + 1) % k]);
    if (head != next_tail) throw std::invalid_argument("boundary of face '" + face.name + "' is not a closed walk");
  }
}

using WalkKey = std::pair<std::vector<int>, std::vector<int>>;

WalkKey key_of(const Graph& g, const std::vector<HalfEdge>& walk) {
  WalkKey key;
  for (const HalfEdge& d : walk) {
    key.first.push_back(g.vertex_of(d));
    key.second.push_back(d.edge);
  }
  return key;
}

std::string unique_name(const std::string& base, const auto& taken) {
  if (!taken(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!taken(candidate)) return candidate;
  }
}

}  // namespace

Face canonical_face(const Graph& g, Face face) {
  const std::size_t k = face.boundary.size();
  std::vector<HalfEdge> best;
  WalkKey best_key;
  std::vector<HalfEdge> candidate(k);
  for (int direction = 0; direction < 2; ++direction) {
    for (std::size_t start = 0; start < k; ++start) {
      for (std::size_t j = 0; j < k; ++j) {
        if (direction == 0) {
          candidate[j] = face.boundary[(start + j) % k];
        } else {
          // Walk backwards from the vertex at `start`.
          candidate[j] = face.boundary[(start + k - 1 - j) % k].twin();
        }
      }
      WalkKey key = key_of(g, candidate);
      if (best.empty() || key < best_key) {
        best = candidate;
        best_key = std::move(key);
      }
    }
  }
  face.boundary = std::move(best);
  return face;
}

TwoComplex::TwoComplex(Graph graph, std::vector<Face> faces) : graph_(std::move(graph)) {
  faces_.reserve(faces.size());
  for (Face& f : faces) {
    check_closed(graph_, f);
    faces_.push_back(canonical_face(graph_, std::move(f)));
  }
}

std::optional<int> TwoComplex::find_face(std::string_view name) const {
  for (int f = 0; f < face_count(); ++f) {
    if (faces_[static_cast<std::size_t>(f)].name == name) return f;
  }
  return std::nullopt;
}

std::vector<int> TwoComplex::face_vertices(int f) const { return walk_vertices(graph_, face(f).boundary); }

std::vector<int> TwoComplex::face_edges(int f) const {
  std::vector<int> out;
  for (const HalfEdge& d : face(f).boundary) out.push_back(d.edge);
  return out;
}

Cycle TwoComplex::face_cycle(int f) const { return {face_vertices(f), face_edges(f)}; }

bool TwoComplex::face_is_degenerate(int f) const {
  std::vector<int> vs = face_vertices(f);
  if (vs.size() < 3) return true;
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) != vs.end();
}

Face face_from_vertices(const Graph& g, std::string name, const std::vector<int>& vertices) {
  Face face{std::move(name), {}};
  const std::size_t k = vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int a = vertices[i];
    const int b = vertices[(i + 1) % k];
    const auto e = g.edge_between(a, b);
    if (!e) {
      throw std::invalid_argument("face '" + face.name + "': vertices " + g.vertex_name(a) + " and " +
                                  g.vertex_name(b) + " are not adjacent");
    }
    face.boundary.push_back({*e, g.edge(*e).u == a ? 0 : 1});
  }
  return face;
}

Face face_from_edges(const Graph& g, std::string name, const std::vector<int>& edges) {
  if (edges.empty()) throw std::invalid_argument("face '" + name + "' has no edges");
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("face '" + name + "' references an unknown edge");
  }
  for (int first_end = 0; first_end < 2; ++first_end) {
    const int start = first_end == 0 ? g.edge(edges[0]).u : g.edge(edges[0]).v;
    int at = start;
    Face face{name, {}};
    bool ok = true;
    for (int e : edges) {
      const Edge& ed = g.edge(e);
      if (ed.u == at) {
        face.boundary.push_back({e, 0});
        at = ed.v;
      } else if (ed.v == at) {
        face.boundary.push_back({e, 1});
        at = ed.u;
      } else {
        ok = false;
        break;
      }
    }
    if (ok && at == start) return face;
  }
  throw std::invalid_argument("edges of face '" + name + "' do not form a closed walk");
}

const char* to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::Loop: return "loop";
    case DiagnosticKind::ParallelEdge: return "parallel-edge";
    case DiagnosticKind::NonCycleFace: return "non-cycle-face";
    case DiagnosticKind::DuplicateFace: return "duplicate-face";
  }
  return "unknown";
}

std::vector<Diagnostic> validate(const TwoComplex& complex) {
  std::vector<Diagnostic> out;
  const Graph& g = complex.graph();
  std::map<std::pair<int, int>, int> first_edge;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) {
      out.push_back({DiagnosticKind::Loop, g.edge_name(e), "loop at " + g.vertex_name(ed.u)});
      continue;
    }
    const auto key = std::minmax(ed.u, ed.v);
    const auto [it, inserted] = first_edge.emplace(key, e);
    if (!inserted) {
      out.push_back({DiagnosticKind::ParallelEdge, g.edge_name(e),
                     "parallel to " + g.edge_name(it->second) + " between " + g.vertex_name(ed.u) + " and " +
                         g.vertex_name(ed.v)});
    }
  }
  std::map<WalkKey, int> seen;
  for (int f = 0; f < complex.face_count(); ++f) {
    const Face& face = complex.face(f);
    if (complex.face_is_degenerate(f)) {
      out.push_back({DiagnosticKind::NonCycleFace, face.name, "boundary of " + face.name + " is not a genuine cycle"});
    }
    const auto [it, inserted] = seen.emplace(key_of(g, face.boundary), f);
    if (!inserted) {
      out.push_back({DiagnosticKind::DuplicateFace, face.name,
                     face.name + " has the same boundary as " + complex.face(it->second).name});
    }
  }
  return out;
}

Graph skeleton(const TwoComplex& complex) { return complex.graph(); }

std::optional<int> LinkGraph::vertex_for(HalfEdge h) const {
  const auto it = std::find(half_edges.begin(), half_edges.end(), h);
  if (it == half_edges.end()) return std::nullopt;
  return static_cast<int>(it - half_edges.begin());
}

std::optional<int> LinkGraph::vertex_for_edge(int complex_edge) const {
  for (std::size_t i = 0; i < half_edges.size(); ++i) {
    if (half_edges[i].edge == complex_edge) return static_cast<int>(i);
  }
  return std::nullopt;
}

LinkGraph link_graph(const TwoComplex& complex, int v) {
  const Graph& g = complex.graph();
  if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("link_graph: unknown vertex");
  LinkGraph link;
  link.host = v;
  std::map<HalfEdge, int> index;
  for (const HalfEdge& h : g.half_edges_at(v)) {
    const Edge& e = g.edge(h.edge);
    std::string name = g.edge_name(h.edge);
    if (e.u == e.v) name += "#" + std::to_string(h.end);
    index[h] = link.graph.add_vertex(std::move(name));
    link.half_edges.push_back(h);
  }
  for (int f = 0; f < complex.face_count(); ++f) {
    const Face& face = complex.face(f);
    const std::size_t k = face.boundary.size();
    for (std::size_t i = 0; i < k; ++i) {
      const HalfEdge leaving = face.boundary[i];
      if (g.vertex_of(leaving) != v) continue;
      const HalfEdge arriving = face.boundary[(i + k - 1) % k].twin();
      link.graph.add_edge(face.name, index.at(arriving), index.at(leaving));
      link.faces.push_back(f);
    }
  }
  return link;
}

TwoComplex cone(const TwoComplex& complex) {
  const Graph& g = complex.graph();
  if (g.has_loops()) throw std::invalid_argument("cone: the complex has a loop");
  Graph out = g;
  const std::string top_name = unique_name("top", [&](const std::string& s) { return out.find_vertex(s).has_value(); });
  const int top = out.add_vertex(top_name);
  std::vector<int> spoke(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::string name =
        unique_name(top_name + "_" + g.vertex_name(v), [&](const std::string& s) { return out.find_edge(s).has_value(); });
    spoke[static_cast<std::size_t>(v)] = out.add_edge(name, top, v);
  }
  std::vector<Face> faces = complex.faces();
  std::vector<std::string> face_names;
  for (const Face& f : faces) face_names.push_back(f.name);
  const auto face_taken = [&](const std::string& s) {
    return std::find(face_names.begin(), face_names.end(), s) != face_names.end();
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    std::string name = unique_name(top_name + "_" + g.edge_name(e), face_taken);
    face_names.push_back(name);
    Face tri{std::move(name),
             {{spoke[static_cast<std::size_t>(ed.u)], 0}, {e, 0}, {spoke[static_cast<std::size_t>(ed.v)], 1}}};
    faces.push_back(std::move(tri));
  }
  return TwoComplex(std::move(out), std::move(faces));
}

namespace {

void check_path(const Graph& g, const Path& path) {
  if (path.vertices.empty() || path.edges.size() + 1 != path.vertices.size()) {
    throw std::invalid_argument("contract_path: not a path");
  }
  std::vector<int> sorted = path.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("contract_path: not a path (repeated vertex)");
  }
  for (int v : path.vertices) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("contract_path: unknown vertex");
  }
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const int e = path.edges[i];
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("contract_path: unknown edge");
    const Edge& ed = g.edge(e);
    const int a = path.vertices[i];
    const int b = path.vertices[i + 1];
    if (ed.u == ed.v) throw std::invalid_argument("contract_path: loop contraction attempted");
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) {
      throw std::invalid_argument("contract_path: not a path (edge does not join consecutive vertices)");
    }
  }
}

}  // namespace

std::string merged_vertex_name(const Graph& g, const Path& path) {
  std::string name = "[";
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i > 0) name += "-";
    name += g.vertex_name(path.vertices[i]);
  }
  return name + "]";
}

int merged_vertex_index(const TwoComplex& complex, const Path& path) {
  check_path(complex.graph(), path);
  return *std::min_element(path.vertices.begin(), path.vertices.end());
}

TwoComplex contract_path(const TwoComplex& complex, const Path& path) {
  const Graph& g = complex.graph();
  check_path(g, path);
  if (path.edges.empty()) return complex;

  const int merged_at = *std::min_element(path.vertices.begin(), path.vertices.end());
  std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v : path.vertices) on_path[static_cast<std::size_t>(v)] = true;
  std::vector<bool> contracted(static_cast<std::size_t>(g.edge_count()), false);
  for (int e : path.edges) contracted[static_cast<std::size_t>(e)] = true;

  Graph out;
  std::vector<int> vmap(static_cast<std::size_t>(g.vertex_count()), -1);
  int merged = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!on_path[static_cast<std::size_t>(v)]) {
      vmap[static_cast<std::size_t>(v)] = out.add_vertex(g.vertex_name(v));
    } else if (v == merged_at) {
      merged = out.add_vertex(merged_vertex_name(g, path));
    }
  }
  for (int v : path.vertices) vmap[static_cast<std::size_t>(v)] = merged;

  std::vector<int> emap(static_cast<std::size_t>(g.edge_count()), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (contracted[static_cast<std::size_t>(e)]) continue;
    const Edge& ed = g.edge(e);
    emap[static_cast<std::size_t>(e)] =
        out.add_edge(g.edge_name(e), vmap[static_cast<std::size_t>(ed.u)], vmap[static_cast<std::size_t>(ed.v)]);
  }

  std::vector<Face> faces;
  for (const Face& f : complex.faces()) {
    Face nf{f.name, {}};
    for (const HalfEdge& d : f.boundary) {
      if (contracted[static_cast<std::size_t>(d.edge)]) continue;
      nf.boundary.push_back({emap[static_cast<std::size_t>(d.edge)], d.end});
    }
    if (nf.boundary.empty()) throw std::logic_error("contract_path: face '" + f.name + "' vanished");
    faces.push_back(std::move(nf));
  }
  return TwoComplex(std::move(out), std::move(faces));
}

TwoComplex delete_faces(const TwoComplex& complex, const std::set<int>& faces) {
  const Graph& g = complex.graph();
  for (int f : faces) {
    if (f < 0 || f >= complex.face_count()) throw std::out_of_range("delete_faces: unknown face");
  }
  const auto nv = static_cast<std::size_t>(g.vertex_count());
  const auto ne = static_cast<std::size_t>(g.edge_count());
  std::vector<bool> edge_removed_face(ne, false), edge_kept_face(ne, false);
  std::vector<bool> vertex_removed_face(nv, false), vertex_kept_face(nv, false);
  for (int f = 0; f < complex.face_count(); ++f) {
    const bool removed = faces.count(f) > 0;
    for (const HalfEdge& d : complex.face(f).boundary) {
      const auto e = static_cast<std::size_t>(d.edge);
      const auto v = static_cast<std::size_t>(g.vertex_of(d));
      (removed ? edge_removed_face : edge_kept_face)[e] = true;
      (removed ? vertex_removed_face : vertex_kept_face)[v] = true;
    }
  }
  std::vector<bool> keep_edge(ne), keep_vertex(nv);
  for (std::size_t e = 0; e < ne; ++e) keep_edge[e] = !edge_removed_face[e] || edge_kept_face[e];
  std::vector<bool> has_kept_edge(nv, false);
  for (std::size_t e = 0; e < ne; ++e) {
    if (!keep_edge[e]) continue;
    has_kept_edge[static_cast<std::size_t>(g.edge(static_cast<int>(e)).u)] = true;
    has_kept_edge[static_cast<std::size_t>(g.edge(static_cast<int>(e)).v)] = true;
  }
  for (std::size_t v = 0; v < nv; ++v) {
    keep_vertex[v] = !vertex_removed_face[v] || vertex_kept_face[v] || has_kept_edge[v];
  }

  Graph out;
  std::vector<int> vmap(nv, -1), emap(ne, -1);
  for (std::size_t v = 0; v < nv; ++v) {
    if (keep_vertex[v]) vmap[v] = out.add_vertex(g.vertex_name(static_cast<int>(v)));
  }
  for (std::size_t e = 0; e < ne; ++e) {
    if (!keep_edge[e]) continue;
    const Edge& ed = g.edge(static_cast<int>(e));
    emap[e] = out.add_edge(g.edge_name(static_cast<int>(e)), vmap[static_cast<std::size_t>(ed.u)],
                           vmap[static_cast<std::size_t>(ed.v)]);
  }
  std::vector<Face> kept;
  for (int f = 0; f < complex.face_count(); ++f) {
    if (faces.count(f) > 0) continue;
    Face nf{complex.face(f).name, {}};
    for (const HalfEdge& d : complex.face(f).boundary) {
      nf.boundary.push_back({emap[static_cast<std::size_t>(d.edge)], d.end});
    }
    kept.push_back(std::move(nf));
  }
  return TwoComplex(std::move(out), std::move(kept));
}

TwoComplex face_subcomplex(const TwoComplex& complex, const std::vector<int>& faces) {
  const Graph& g = complex.graph();
  std::vector<bool> used_vertex(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<bool> used_edge(static_cast<std::size_t>(g.edge_count()), false);
  std::vector<int> sorted = faces;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int f : sorted) {
    if (f < 0 || f >= complex.face_count()) throw std::out_of_range("face_subcomplex: unknown face");
    for (const HalfEdge& d : complex.face(f).boundary) {
      used_edge[static_cast<std::size_t>(d.edge)] = true;
      used_vertex[static_cast<std::size_t>(g.edge(d.edge).u)] = true;
      used_vertex[static_cast<std::size_t>(g.edge(d.edge).v)] = true;
    }
  }
  Graph out;
  std::vector<int> vmap(used_vertex.size(), -1), emap(used_edge.size(), -1);
  for (std::size_t v = 0; v < used_vertex.size(); ++v) {
    if (used_vertex[v]) vmap[v] = out.add_vertex(g.vertex_name(static_cast<int>(v)));
  }
  for (std::size_t e = 0; e < used_edge.size(); ++e) {
    if (!used_edge[e]) continue;
    const Edge& ed = g.edge(static_cast<int>(e));
    emap[e] = out.add_edge(g.edge_name(static_cast<int>(e)), vmap[static_cast<std::size_t>(ed.u)],
                           vmap[static_cast<std::size_t>(ed.v)]);
  }
  std::vector<Face> kept;
  for (int f : sorted) {
    Face nf{complex.face(f).name, {}};
    for (const HalfEdge& d : complex.face(f).boundary) nf.boundary.push_back({emap[static_cast<std::size_t>(d.edge)], d.end});
    kept.push_back(std::move(nf));
  }
  return TwoComplex(std::move(out), std::move(kept));
}

Graph vertex_sum(const Graph& h1, int v1, const Graph& h2, int v2, const std::vector<std::pair<int, int>>& pairing) {
  const auto incident = [](const Graph& h, int v) {
    std::vector<int> es;
    for (const HalfEdge& he : h.half_edges_at(v)) {
      if (h.opposite(he) == v) throw std::invalid_argument("vertex_sum: loop at the summed vertex");
      es.push_back(he.edge);
    }
    std::sort(es.begin(), es.end());
    return es;
  };
  std::vector<int> left = incident(h1, v1);
  std::vector<int> right = incident(h2, v2);
  std::vector<int> paired_left, paired_right;
  for (const auto& [a, b] : pairing) {
    paired_left.push_back(a);
    paired_right.push_back(b);
  }
  std::sort(paired_left.begin(), paired_left.end());
  std::sort(paired_right.begin(), paired_right.end());
  if (paired_left != left || paired_right != right) {
    throw std::invalid_argument("vertex_sum: pairing is not a bijection between the incident edges");
  }

  Graph out;
  std::vector<int> map1(static_cast<std::size_t>(h1.vertex_count()), -1);
  std::vector<int> map2(static_cast<std::size_t>(h2.vertex_count()), -1);
  for (int v = 0; v < h1.vertex_count(); ++v) {
    if (v != v1) map1[static_cast<std::size_t>(v)] = out.add_vertex(h1.vertex_name(v));
  }
  for (int v = 0; v < h2.vertex_count(); ++v) {
    if (v == v2) continue;
    const std::string name =
        unique_name(h2.vertex_name(v), [&](const std::string& s) { return out.find_vertex(s).has_value(); });
    map2[static_cast<std::size_t>(v)] = out.add_vertex(name);
  }
  for (int e = 0; e < h1.edge_count(); ++e) {
    const Edge& ed = h1.edge(e);
    if (ed.u == v1 || ed.v == v1) continue;
    out.add_edge(h1.edge_name(e), map1[static_cast<std::size_t>(ed.u)], map1[static_cast<std::size_t>(ed.v)]);
  }
  for (int e = 0; e < h2.edge_count(); ++e) {
    const Edge& ed = h2.edge(e);
    if (ed.u == v2 || ed.v == v2) continue;
    out.add_edge(h2.edge_name(e), map2[static_cast<std::size_t>(ed.u)], map2[static_cast<std::size_t>(ed.v)]);
  }
  for (const auto& [a, b] : pairing) {
    const Edge& ea = h1.edge(a);
    const Edge& eb = h2.edge(b);
    const int x = ea.u == v1 ? ea.v : ea.u;
    const int y = eb.u == v2 ? eb.v : eb.u;
    const std::string name = h1.edge_name(a) == h2.edge_name(b) ? h1.edge_name(a) : h1.edge_name(a) + "|" + h2.edge_name(b);
    out.add_edge(name, map1[static_cast<std::size_t>(x)], map2[static_cast<std::size_t>(y)]);
  }
  return out;
}

TwoComplex associated_complex(const Graph& g, const std::vector<Cycle>& cycles, const std::vector<std::string>& names) {
  std::vector<Face> faces;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const Cycle& c = cycles[i];
    std::string name = i < names.size() ? names[i] : "c" + std::to_string(i);
    if (!is_genuine_cycle(g, c)) throw std::invalid_argument("associated_complex: '" + name + "' is not a cycle of the graph");
    Face f{std::move(name), {}};
    for (std::size_t j = 0; j < c.vertices.size(); ++j) {
      const int e = c.edges[j];
      f.boundary.push_back({e, g.edge(e).u == c.vertices[j] ? 0 : 1});
    }
    faces.push_back(std::move(f));
  }
  return TwoComplex(g, std::move(faces));
}

}  // namespace outerspatial
