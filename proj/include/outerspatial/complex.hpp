#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "outerspatial/graph.hpp"

namespace outerspatial {

/// A face is a closed walk. Each boundary entry is the dart (half-edge) the
/// walk leaves through, so entry i leaves vertex_of(d_i) and arrives where
/// entry i + 1 leaves. Loops therefore keep a direction.
struct Face {
  std::string name;
  std::vector<HalfEdge> boundary;
};

/// Graph plus a set of faces. Every face boundary is stored in canonical
/// form: the rotation/reflection whose vertex sequence (then edge sequence)
/// is lexicographically smallest.
class TwoComplex {
 public:
  TwoComplex() = default;
  /// Throws std::invalid_argument if a boundary is empty, references an
  /// unknown edge or does not close up.
  TwoComplex(Graph graph, std::vector<Face> faces);

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] const std::vector<Face>& faces() const { return faces_; }
  [[nodiscard]] const Face& face(int f) const { return faces_.at(static_cast<std::size_t>(f)); }
  [[nodiscard]] int face_count() const { return static_cast<int>(faces_.size()); }
  [[nodiscard]] int vertex_count() const { return graph_.vertex_count(); }
  [[nodiscard]] int edge_count() const { return graph_.edge_count(); }

  [[nodiscard]] std::optional<int> find_face(std::string_view name) const;

  [[nodiscard]] std::vector<int> face_vertices(int f) const;
  [[nodiscard]] std::vector<int> face_edges(int f) const;
  [[nodiscard]] Cycle face_cycle(int f) const;
  /// True when the boundary repeats a vertex or is shorter than three.
  [[nodiscard]] bool face_is_degenerate(int f) const;

 private:
  Graph graph_;
  std::vector<Face> faces_;
};

/// Canonical rotation/reflection of a closed walk.
Face canonical_face(const Graph& g, Face face);

/// Face through the listed vertices using the lowest-index edge between
/// consecutive ones. Throws std::invalid_argument if two consecutive
/// vertices are not adjacent.
Face face_from_vertices(const Graph& g, std::string name, const std::vector<int>& vertices);

/// Face along the listed edges in order. Throws std::invalid_argument if the
/// edges do not form a closed walk.
Face face_from_edges(const Graph& g, std::string name, const std::vector<int>& edges);

enum class DiagnosticKind { Loop, ParallelEdge, NonCycleFace, DuplicateFace };

struct Diagnostic {
  DiagnosticKind kind;
  std::string element;  // name of the offending vertex, edge or face
  std::string message;
};

const char* to_string(DiagnosticKind kind);

/// Empty iff the complex is simple and every face is a genuine cycle, with no
/// two faces sharing a boundary.
std::vector<Diagnostic> validate(const TwoComplex& complex);

inline bool is_valid(const TwoComplex& complex) { return validate(complex).empty(); }

Graph skeleton(const TwoComplex& complex);

/// Link graph at a vertex. Link vertices are the half-edges at the host;
/// every face corner at the host contributes one link edge, named after the
/// face.
struct LinkGraph {
  int host = -1;
  Graph graph;
  std::vector<HalfEdge> half_edges;  // link vertex -> half-edge of the complex
  std::vector<int> faces;            // link edge -> face of the complex

  [[nodiscard]] std::optional<int> vertex_for(HalfEdge h) const;
  [[nodiscard]] std::optional<int> vertex_for_edge(int complex_edge) const;
};

/// Throws std::out_of_range for an unknown vertex.
LinkGraph link_graph(const TwoComplex& complex, int v);

/// 2-dimensional cone: a new top vertex, one edge to every vertex and one
/// triangle per edge. Throws std::invalid_argument if the complex has a loop.
TwoComplex cone(const TwoComplex& complex);

/// Merged vertex of a contracted path, named after the path.
std::string merged_vertex_name(const Graph& g, const Path& path);

/// Contracts the edges of a path into one vertex. Face boundaries lose the
/// contracted edges and stay closed walks (possibly degenerate). The merged
/// vertex sits at the position of the lowest path vertex. Throws
/// std::invalid_argument when the argument is not a path of the complex.
TwoComplex contract_path(const TwoComplex& complex, const Path& path);

/// Index of the merged vertex in contract_path(complex, path).
int merged_vertex_index(const TwoComplex& complex, const Path& path);

/// Removes the faces, then every edge and vertex that was incident with a
/// removed face and with nothing that remains. Throws std::out_of_range for
/// an unknown face.
TwoComplex delete_faces(const TwoComplex& complex, const std::set<int>& faces);

/// Subcomplex spanned by the listed faces: those faces with exactly the
/// vertices and edges on their boundaries, in the original order. Throws
/// std::out_of_range for an unknown face.
TwoComplex face_subcomplex(const TwoComplex& complex, const std::vector<int>& faces);

/// Vertex sum of h1 and h2 over v1 ~ v2: both copies of the vertex are
/// deleted and each pair (a, b) of the pairing (edge a at v1, edge b at v2)
/// becomes an edge between the far ends. Throws std::invalid_argument if the
/// pairing is not a bijection between the edges at v1 and at v2.
Graph vertex_sum(const Graph& h1, int v1, const Graph& h2, int v2,
                 const std::vector<std::pair<int, int>>& pairing);

/// Complex whose skeleton is g and whose faces are the cycles. Throws
/// std::invalid_argument for a cycle that is not a genuine cycle of g.
TwoComplex associated_complex(const Graph& g, const std::vector<Cycle>& cycles,
                              const std::vector<std::string>& names = {});

}  // namespace outerspatial
