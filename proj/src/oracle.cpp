#include "outerspatial/oracle.hpp"

#include <algorithm>
#include <variant>

namespace outerspatial {

double rotation_system_count(const Graph& g) {
  double total = 1.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int k = 2; k < g.degree(v); ++k) total *= k;
  }
  return total;
}

namespace {

// Every rotation system, in canonical order.
class Enumerator {
 public:
  Enumerator(const Graph& g, const std::function<bool(const RotationSystem&)>& visit) : g_(g), visit_(visit) {
    rot_.rotators.resize(static_cast<std::size_t>(g.vertex_count()));
  }

  std::uint64_t run() {
    descend(0);
    return count_;
  }

 private:
  void descend(int v) {
    if (stopped_) return;
    if (v == g_.vertex_count()) {
      ++count_;
      if (!visit_(rot_)) stopped_ = true;
      return;
    }
    const std::vector<HalfEdge>& hs = g_.half_edges_at(v);
    auto& rotator = rot_.rotators[static_cast<std::size_t>(v)];
    if (hs.empty()) {
      descend(v + 1);
      return;
    }
    std::vector<HalfEdge> rest(hs.begin() + 1, hs.end());
    do {
      rotator.clear();
      rotator.push_back(hs.front());
      rotator.insert(rotator.end(), rest.begin(), rest.end());
      descend(v + 1);
    } while (!stopped_ && std::next_permutation(rest.begin(), rest.end()));
  }

  const Graph& g_;
  const std::function<bool(const RotationSystem&)>& visit_;
  RotationSystem rot_;
  std::uint64_t count_ = 0;
  bool stopped_ = false;
};

// Genus-0 systems by inserting edges one at a time, each prefix connected:
// an edge to a new vertex may go into any corner, an edge inside the drawn
// part must split a face. Every genus-0 system arises exactly once.
class SphereSearch {
 public:
  explicit SphereSearch(const Graph& g) : g_(g), rot_(static_cast<std::size_t>(g.vertex_count())) {
    std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
    if (g.vertex_count() > 0) in[0] = true;
    for (int added = 0; added < g.edge_count(); ++added) {
      int pick = -1;
      for (int e = 0; e < g.edge_count() && pick == -1; ++e) {
        if (!used[static_cast<std::size_t>(e)] && (in[static_cast<std::size_t>(g.edge(e).u)] || in[static_cast<std::size_t>(g.edge(e).v)])) pick = e;
      }
      used[static_cast<std::size_t>(pick)] = true;
      in[static_cast<std::size_t>(g.edge(pick).u)] = in[static_cast<std::size_t>(g.edge(pick).v)] = true;
      order_.push_back(pick);
    }
  }

  std::vector<RotationSystem> run() {
    faces_ = 1;
    insert(0);
    std::sort(found_.begin(), found_.end(),
              [](const RotationSystem& a, const RotationSystem& b) { return a.rotators < b.rotators; });
    return std::move(found_);
  }

 private:
  int count_faces() const {
    std::vector<char> seen(static_cast<std::size_t>(2 * g_.edge_count()), 0);
    std::vector<int> next(seen.size(), -1);
    for (const auto& r : rot_) {
      for (std::size_t i = 0; i < r.size(); ++i) next[static_cast<std::size_t>(r[i].index())] = r[(i + 1) % r.size()].index();
    }
    int faces = 0;
    for (const auto& r : rot_) {
      for (const HalfEdge& h : r) {
        if (seen[static_cast<std::size_t>(h.index())] != 0) continue;
        ++faces;
        for (int d = h.index(); seen[static_cast<std::size_t>(d)] == 0; d = next[static_cast<std::size_t>(d ^ 1)]) {
          seen[static_cast<std::size_t>(d)] = 1;
        }
      }
    }
    return std::max(faces, 1);
  }

  void insert(std::size_t k) {
    if (k == order_.size()) {
      RotationSystem rs;
      rs.rotators = rot_;
      found_.push_back(rs.normalized());
      return;
    }
    const int e = order_[k];
    const HalfEdge h0{e, 0};
    const HalfEdge h1{e, 1};
    auto& ru = rot_[static_cast<std::size_t>(g_.vertex_of(h0))];
    auto& rv = rot_[static_cast<std::size_t>(g_.vertex_of(h1))];
    const bool joins_new = ru.empty() != rv.empty() || (ru.empty() && rv.empty() && g_.vertex_of(h0) != g_.vertex_of(h1));
    const int want = joins_new ? faces_ : faces_ + 1;
    const std::size_t gaps_u = std::max<std::size_t>(ru.size(), 1);
    for (std::size_t i = 0; i < gaps_u; ++i) {
      ru.insert(ru.begin() + static_cast<std::ptrdiff_t>(std::min(i + 1, ru.size())), h0);
      const std::size_t gaps_v = std::max<std::size_t>(rv.size(), 1);
      for (std::size_t j = 0; j < gaps_v; ++j) {
        rv.insert(rv.begin() + static_cast<std::ptrdiff_t>(std::min(j + 1, rv.size())), h1);
        const int f = count_faces();
        if (f == want) {
          const int saved = faces_;
          faces_ = f;
          insert(k + 1);
          faces_ = saved;
        }
        rv.erase(std::find(rv.begin(), rv.end(), h1));
      }
      ru.erase(std::find(ru.begin(), ru.end(), h0));
    }
  }

  const Graph& g_;
  std::vector<std::vector<HalfEdge>> rot_;
  std::vector<int> order_;
  std::vector<RotationSystem> found_;
  int faces_ = 1;
};

void check_cap(const Graph& g, double cap) {
  const double count = rotation_system_count(g);
  if (count > cap) {
    throw CapExceeded("cap exceeded: " + std::to_string(static_cast<long double>(count)) + " rotation systems");
  }
}

bool euler_excludes_sphere(const Graph& g) {
  return g.is_simple() && g.vertex_count() >= 3 && g.edge_count() > 3 * g.vertex_count() - 6;
}

}  // namespace

std::uint64_t enumerate_rotation_systems(const Graph& g, const std::function<bool(const RotationSystem&)>& visit,
                                         double cap) {
  check_cap(g, cap);
  return Enumerator(g, visit).run();
}

std::uint64_t enumerate_sphere_embeddings(const Graph& g, const std::function<bool(const RotationSystem&)>& visit,
                                          double cap) {
  if (!is_connected(g)) throw std::invalid_argument("enumerate_sphere_embeddings: graph is not connected");
  if (euler_excludes_sphere(g)) return 0;
  check_cap(g, cap);
  std::uint64_t visited = 0;
  for (const RotationSystem& rs : SphereSearch(g).run()) {
    ++visited;
    if (!visit(rs)) break;
  }
  return visited;
}

NestedSearch brute_force_nested(const Graph& g, const std::vector<Cycle>& cycles, double cap) {
  for (const Cycle& c : cycles) {
    if (!is_genuine_cycle(g, c)) throw std::invalid_argument("brute_force_nested: not a cycle of the graph");
  }
  NestedSearch out;
  int count = 0;
  const std::vector<int> comp = connected_components(g, &count);
  std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
  for (int v = 0; v < g.vertex_count(); ++v) members[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<Subgraph> parts;
  for (const auto& m : members) {
    parts.push_back(induced_subgraph(g, m));
    if (euler_excludes_sphere(parts.back().graph)) return out;
  }
  check_cap(g, cap);

  RotationSystem global;
  global.rotators.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int k = 0; k < count; ++k) {
    const Subgraph& part = parts[static_cast<std::size_t>(k)];
    std::vector<int> local_vertex(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> local_edge(static_cast<std::size_t>(g.edge_count()), -1);
    for (std::size_t i = 0; i < part.vertex_to_parent.size(); ++i) local_vertex[static_cast<std::size_t>(part.vertex_to_parent[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < part.edge_to_parent.size(); ++i) local_edge[static_cast<std::size_t>(part.edge_to_parent[i])] = static_cast<int>(i);
    std::vector<Cycle> local;
    for (const Cycle& c : cycles) {
      if (comp[static_cast<std::size_t>(c.vertices.front())] != k) continue;
      Cycle lc;
      for (int v : c.vertices) lc.vertices.push_back(local_vertex[static_cast<std::size_t>(v)]);
      for (int e : c.edges) lc.edges.push_back(local_edge[static_cast<std::size_t>(e)]);
      local.push_back(std::move(lc));
    }
    std::optional<RotationSystem> found;
    out.systems_examined += enumerate_sphere_embeddings(
        part.graph,
        [&](const RotationSystem& rs) {
          const TracedFaces tf = trace_faces(part.graph, rs);
          if (!std::holds_alternative<NestingForest>(nesting_forest(part.graph, tf, local))) return true;
          found = rs;
          return false;
        },
        cap);
    if (!found) return out;
    for (std::size_t i = 0; i < found->rotators.size(); ++i) {
      auto& target = global.rotators[static_cast<std::size_t>(part.vertex_to_parent[i])];
      for (const HalfEdge& h : found->rotators[i]) target.push_back({part.edge_to_parent[static_cast<std::size_t>(h.edge)], h.end});
    }
  }
  out.certificate = make_certificate(g, cycles, global);
  return out;
}

NestedSearch brute_force_outerspatial(const TwoComplex& complex, double cap) {
  return brute_force_nested(complex.graph(), face_cycles(complex), cap);
}

std::optional<AsphericalFound> find_aspherical_subcomplex(const TwoComplex& complex) {
  const int faces = complex.face_count();
  if (faces > kMaxSubsetFaces) {
    throw CapExceeded("cap exceeded: " + std::to_string(faces) + " faces (subset search allows " +
                      std::to_string(kMaxSubsetFaces) + ")");
  }
  std::vector<std::vector<int>> edges_of(static_cast<std::size_t>(faces));
  for (int f = 0; f < faces; ++f) edges_of[static_cast<std::size_t>(f)] = complex.face_edges(f);
  std::vector<int> uses(static_cast<std::size_t>(complex.edge_count()), 0);
  const std::uint32_t limit = faces == 0 ? 0U : (1U << static_cast<unsigned>(faces));
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::fill(uses.begin(), uses.end(), 0);
    std::vector<int> chosen;
    for (int f = 0; f < faces; ++f) {
      if ((mask >> static_cast<unsigned>(f) & 1U) == 0) continue;
      chosen.push_back(f);
      for (int e : edges_of[static_cast<std::size_t>(f)]) ++uses[static_cast<std::size_t>(e)];
    }
    if (std::any_of(uses.begin(), uses.end(), [](int u) { return u != 0 && u != 2; })) continue;
    const TwoComplex sub = face_subcomplex(complex, chosen);
    const SurfaceClass sc = classify_surface(sub);
    if (sc.components.size() != 1) continue;
    const ComponentSurface& s = sc.components.front();
    if (s.kind == SurfaceKind::NotASurface || s.euler == 2) continue;
    AsphericalFound found{chosen, s};
    found.surface.faces = chosen;
    std::vector<int> vertices;
    for (int v : s.vertices) vertices.push_back(*complex.graph().find_vertex(sub.graph().vertex_name(v)));
    found.surface.vertices = vertices;
    return found;
  }
  return std::nullopt;
}

}  // namespace outerspatial
