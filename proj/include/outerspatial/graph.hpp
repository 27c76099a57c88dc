#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace outerspatial {

/// One end of an edge. For a loop both ends sit at the same vertex but are
/// still distinct half-edges.
struct HalfEdge {
  int edge = -1;
  int end = 0;

  auto operator<=>(const HalfEdge&) const = default;

  /// Dense index 2 * edge + end, shared with darts (a dart leaves through
  /// the half-edge with the same index).
  [[nodiscard]] int index() const { return 2 * edge + end; }
  [[nodiscard]] HalfEdge twin() const { return {edge, 1 - end}; }
  [[nodiscard]] static HalfEdge from_index(int i) { return {i / 2, i % 2}; }
};

struct Edge {
  int u = -1;
  int v = -1;
};

/// Undirected multigraph with named vertices and edges. Vertex and edge ids
/// are dense indices; names are carried along for reporting and I/O.
class Graph {
 public:
  Graph() = default;

  int add_vertex(std::string name);
  /// Throws std::out_of_range for an endpoint that is not a vertex.
  int add_edge(std::string name, int u, int v);

  [[nodiscard]] int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }

  [[nodiscard]] const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::string& vertex_name(int v) const { return vertex_names_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::string& edge_name(int e) const { return edge_names_.at(static_cast<std::size_t>(e)); }

  [[nodiscard]] std::optional<int> find_vertex(std::string_view name) const;
  [[nodiscard]] std::optional<int> find_edge(std::string_view name) const;

  /// Vertex the half-edge is attached to.
  [[nodiscard]] int vertex_of(HalfEdge h) const {
    const Edge& e = edge(h.edge);
    return h.end == 0 ? e.u : e.v;
  }
  /// Vertex at the far end of the half-edge's edge.
  [[nodiscard]] int opposite(HalfEdge h) const { return vertex_of(h.twin()); }

  /// Half-edges at v sorted by (edge, end).
  [[nodiscard]] const std::vector<HalfEdge>& half_edges_at(int v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }
  [[nodiscard]] int degree(int v) const { return static_cast<int>(half_edges_at(v).size()); }

  /// Lowest-index edge joining u and v, if any.
  [[nodiscard]] std::optional<int> edge_between(int u, int v) const;
  [[nodiscard]] int edge_multiplicity(int u, int v) const;

  [[nodiscard]] bool has_loops() const;
  [[nodiscard]] bool has_parallel_edges() const;
  [[nodiscard]] bool is_simple() const { return !has_loops() && !has_parallel_edges(); }

  /// Graph on vertices 0..n-1 named by their index, edges named e0, e1, ...
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<HalfEdge>> incidence_;
  std::unordered_map<std::string, int> vertex_lookup_;
  std::unordered_map<std::string, int> edge_lookup_;
};

/// Sequence of distinct vertices joined by the listed edges; a single vertex
/// with no edges is the trivial path.
struct Path {
  std::vector<int> vertices;
  std::vector<int> edges;
};

/// Closed walk given by its vertices and the edges between consecutive ones
/// (edges[i] joins vertices[i] and vertices[i + 1 mod k]).
struct Cycle {
  std::vector<int> vertices;
  std::vector<int> edges;
};

/// Builds a path through the listed vertices, taking the lowest-index edge
/// between consecutive ones. Throws std::invalid_argument when consecutive
/// vertices are not adjacent or a vertex repeats.
Path make_path(const Graph& g, const std::vector<int>& vertices);

/// Builds a cycle through the listed vertices; same edge choice and errors
/// as make_path, and at least three vertices are required.
Cycle make_cycle(const Graph& g, const std::vector<int>& vertices);

/// True iff the cycle's edges form a single genuine cycle of g.
bool is_genuine_cycle(const Graph& g, const Cycle& c);

/// Component index per vertex, numbered in order of smallest vertex.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

bool is_connected(const Graph& g);

/// Subgraph induced by a vertex set (kept in increasing order), with maps
/// back to the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<int> vertex_to_parent;
  std::vector<int> edge_to_parent;
};

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace outerspatial
