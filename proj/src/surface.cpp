#include "outerspatial/surface.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace outerspatial {

const char* to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::NotASurface: return "not-a-surface";
    case SurfaceKind::Sphere: return "sphere";
    case SurfaceKind::Orientable: return "orientable";
    case SurfaceKind::NonOrientable: return "non-orientable";
  }
  return "?";
}

namespace {

bool link_is_cycle(const TwoComplex& complex, int v) {
  const LinkGraph link = link_graph(complex, v);
  const Graph& lg = link.graph;
  if (lg.vertex_count() == 0) return false;
  for (int x = 0; x < lg.vertex_count(); ++x) {
    if (lg.degree(x) != 2) return false;
  }
  return is_connected(lg);
}

struct Components {
  std::vector<int> of_vertex;
  int count = 0;
  std::vector<std::vector<int>> vertices;
  std::vector<std::vector<int>> faces;
  std::vector<int> edges;  // edge count per component
};

Components components_of(const TwoComplex& complex) {
  Components c;
  c.of_vertex = connected_components(complex.graph(), &c.count);
  c.vertices.resize(static_cast<std::size_t>(c.count));
  c.faces.resize(static_cast<std::size_t>(c.count));
  c.edges.assign(static_cast<std::size_t>(c.count), 0);
  for (int v = 0; v < complex.vertex_count(); ++v) c.vertices[static_cast<std::size_t>(c.of_vertex[static_cast<std::size_t>(v)])].push_back(v);
  for (const Edge& e : complex.graph().edges()) ++c.edges[static_cast<std::size_t>(c.of_vertex[static_cast<std::size_t>(e.u)])];
  for (int f = 0; f < complex.face_count(); ++f) {
    const int v = complex.graph().vertex_of(complex.face(f).boundary.front());
    c.faces[static_cast<std::size_t>(c.of_vertex[static_cast<std::size_t>(v)])].push_back(f);
  }
  return c;
}

}  // namespace

std::vector<bool> is_closed_surface(const TwoComplex& complex) {
  const Components c = components_of(complex);
  std::vector<bool> out(static_cast<std::size_t>(c.count), true);
  for (int v = 0; v < complex.vertex_count(); ++v) {
    const auto k = static_cast<std::size_t>(c.of_vertex[static_cast<std::size_t>(v)]);
    if (out[k] && !link_is_cycle(complex, v)) out[k] = false;
  }
  return out;
}

std::optional<std::vector<int>> orient_faces(const TwoComplex& complex, int start_face) {
  const Graph& g = complex.graph();
  // Traversals per edge: (face, direction) with direction +1 along u->v.
  std::vector<std::vector<std::pair<int, int>>> uses(static_cast<std::size_t>(g.edge_count()));
  for (int f = 0; f < complex.face_count(); ++f) {
    for (const HalfEdge& d : complex.face(f).boundary) {
      uses[static_cast<std::size_t>(d.edge)].push_back({f, d.end == 0 ? 1 : -1});
    }
  }
  for (const auto& u : uses) {
    if (u.size() > 2) return std::nullopt;
    if (u.size() == 2 && u[0].first == u[1].first && u[0].second == u[1].second) return std::nullopt;
  }
  std::vector<int> sign(static_cast<std::size_t>(complex.face_count()), 0);
  std::vector<int> order;
  if (start_face >= 0 && start_face < complex.face_count()) order.push_back(start_face);
  for (int f = 0; f < complex.face_count(); ++f) order.push_back(f);
  for (int root : order) {
    if (sign[static_cast<std::size_t>(root)] != 0) continue;
    sign[static_cast<std::size_t>(root)] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      for (const HalfEdge& d : complex.face(f).boundary) {
        const auto& u = uses[static_cast<std::size_t>(d.edge)];
        if (u.size() != 2) continue;
        for (std::size_t i = 0; i < 2; ++i) {
          const auto [mine, my_dir] = u[i];
          const auto [other, other_dir] = u[1 - i];
          if (mine != f) continue;
          // Oriented directions must be opposite.
          const int want = -sign[static_cast<std::size_t>(f)] * my_dir * other_dir;
          if (other == f) {
            if (want != sign[static_cast<std::size_t>(f)]) return std::nullopt;
            continue;
          }
          int& s = sign[static_cast<std::size_t>(other)];
          if (s == 0) {
            s = want;
            queue.push_back(other);
          } else if (s != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return sign;
}

namespace {

ComponentSurface classify(const TwoComplex& complex, const Components& c, int k, bool surface) {
  ComponentSurface out;
  out.vertices = c.vertices[static_cast<std::size_t>(k)];
  out.faces = c.faces[static_cast<std::size_t>(k)];
  out.euler = static_cast<int>(out.vertices.size()) - c.edges[static_cast<std::size_t>(k)] +
              static_cast<int>(out.faces.size());
  if (!surface) return out;
  std::set<int> keep_faces(out.faces.begin(), out.faces.end());
  std::set<int> drop;
  for (int f = 0; f < complex.face_count(); ++f) {
    if (!keep_faces.count(f)) drop.insert(f);
  }
  const TwoComplex part = drop.empty() ? complex : delete_faces(complex, drop);
  const bool orientable = orient_faces(part).has_value();
  if (orientable) {
    out.kind = out.euler == 2 ? SurfaceKind::Sphere : SurfaceKind::Orientable;
    out.genus = (2 - out.euler) / 2;
  } else {
    out.kind = SurfaceKind::NonOrientable;
    out.genus = 2 - out.euler;
  }
  return out;
}

}  // namespace

SurfaceClass classify_surface(const TwoComplex& complex) {
  const Components c = components_of(complex);
  const std::vector<bool> closed = is_closed_surface(complex);
  SurfaceClass out;
  for (int k = 0; k < c.count; ++k) out.components.push_back(classify(complex, c, k, closed[static_cast<std::size_t>(k)]));
  return out;
}

ComponentSurface classify_component(const TwoComplex& complex, int component) {
  const Components c = components_of(complex);
  if (component < 0 || component >= c.count) throw std::invalid_argument("classify_component: unknown component");
  if (!is_closed_surface(complex)[static_cast<std::size_t>(component)]) {
    throw std::invalid_argument("classify_component: component is not a closed surface");
  }
  return classify(complex, c, component, true);
}

}  // namespace outerspatial
