#include "outerspatial/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace outerspatial {

int Graph::add_vertex(std::string name) {
  const int id = vertex_count();
  vertex_lookup_.emplace(name, id);
  vertex_names_.push_back(std::move(name));
  incidence_.emplace_back();
  return id;
}

int Graph::add_edge(std::string name, int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw std::out_of_range("edge '" + name + "' has an endpoint that is not a vertex");
  }
  const int id = edge_count();
  edges_.push_back({u, v});
  edge_lookup_.emplace(name, id);
  edge_names_.push_back(std::move(name));
  // Edge ids only grow, so appending keeps each list sorted by (edge, end).
  incidence_[static_cast<std::size_t>(u)].push_back({id, 0});
  incidence_[static_cast<std::size_t>(v)].push_back({id, 1});
  return id;
}

std::optional<int> Graph::find_vertex(std::string_view name) const {
  const auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Graph::find_edge(std::string_view name) const {
  const auto it = edge_lookup_.find(std::string(name));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Graph::edge_between(int u, int v) const {
  for (const HalfEdge& h : half_edges_at(u)) {
    if (opposite(h) == v) return h.edge;
  }
  return std::nullopt;
}

int Graph::edge_multiplicity(int u, int v) const {
  int count = 0;
  for (const Edge& e : edges_) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++count;
  }
  return count;
}

bool Graph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

bool Graph::has_parallel_edges() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (!seen.insert(std::minmax(e.u, e.v)).second) return true;
  }
  return false;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex(std::to_string(v));
  int i = 0;
  for (const auto& [u, v] : edges) g.add_edge("e" + std::to_string(i++), u, v);
  return g;
}

namespace {

std::vector<int> edges_along(const Graph& g, const std::vector<int>& vertices, bool closed) {
  std::set<int> distinct(vertices.begin(), vertices.end());
  if (distinct.size() != vertices.size()) throw std::invalid_argument("vertex sequence repeats a vertex");
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex sequence names an unknown vertex");
  }
  std::vector<int> edges;
  const std::size_t k = vertices.size();
  const std::size_t steps = closed ? k : (k == 0 ? 0 : k - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const int a = vertices[i];
    const int b = vertices[(i + 1) % k];
    const auto e = g.edge_between(a, b);
    if (!e) {
      throw std::invalid_argument("vertices " + g.vertex_name(a) + " and " + g.vertex_name(b) + " are not adjacent");
    }
    edges.push_back(*e);
  }
  return edges;
}

}  // namespace

Path make_path(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("a path needs at least one vertex");
  return {vertices, edges_along(g, vertices, false)};
}

Cycle make_cycle(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.size() < 3) throw std::invalid_argument("a cycle needs at least three vertices");
  return {vertices, edges_along(g, vertices, true)};
}

bool is_genuine_cycle(const Graph& g, const Cycle& c) {
  const std::size_t k = c.vertices.size();
  if (k < 3 || c.edges.size() != k) return false;
  std::set<int> vs(c.vertices.begin(), c.vertices.end());
  std::set<int> es(c.edges.begin(), c.edges.end());
  if (vs.size() != k || es.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (c.edges[i] < 0 || c.edges[i] >= g.edge_count()) return false;
    const Edge& e = g.edge(c.edges[i]);
    const int a = c.vertices[i];
    const int b = c.vertices[(i + 1) % k];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
  }
  return true;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const HalfEdge& h : g.half_edges_at(v)) {
        const int w = g.opposite(h);
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  Subgraph sub;
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v : sorted) {
    local[static_cast<std::size_t>(v)] = sub.graph.add_vertex(g.vertex_name(v));
    sub.vertex_to_parent.push_back(v);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const int a = local[static_cast<std::size_t>(ed.u)];
    const int b = local[static_cast<std::size_t>(ed.v)];
    if (a == -1 || b == -1) continue;
    sub.graph.add_edge(g.edge_name(e), a, b);
    sub.edge_to_parent.push_back(e);
  }
  return sub;
}

}  // namespace outerspatial
