#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "outerspatial/graph.hpp"

namespace outerspatial {

enum class MinorTarget { K4, K23 };

const char* to_string(MinorTarget target);

/// Model of K4 or K2,3 in a graph: disjoint connected branch sets plus one
/// graph edge per target edge. For K2,3 the first two branch sets are the
/// degree-3 side.
struct MinorWitness {
  MinorTarget target = MinorTarget::K4;
  std::vector<std::vector<int>> branch_sets;
  std::vector<int> connecting_edges;  // aligned with target_edges(target)
};

/// Target edges as pairs of branch-set indices.
const std::vector<std::pair<int, int>>& target_edges(MinorTarget target);

bool verify_witness(const Graph& g, const MinorWitness& witness);

bool has_k4_minor(const Graph& g);
bool has_k23_minor(const Graph& g);

/// Witness for the given target, or nullopt when g has no such minor.
std::optional<MinorWitness> find_minor(const Graph& g, MinorTarget target);

/// Boundary Hamilton cycle and chords of a 2-connected simple outerplanar
/// graph.
struct OuterplaneStructure {
  std::vector<int> boundary;        // vertices in cyclic order
  std::vector<int> boundary_edges;  // boundary_edges[i] joins boundary[i] and boundary[i + 1]
  std::vector<int> chords;          // sorted edge ids

  [[nodiscard]] bool is_chord(int edge) const;
  /// Position of a vertex on the boundary cycle, or -1.
  [[nodiscard]] int position(int vertex) const;
};

struct OuterplanarResult {
  bool outerplanar = false;
  std::optional<OuterplaneStructure> structure;  // when outerplanar, simple and 2-connected
  std::optional<MinorWitness> witness;           // when not outerplanar
};

/// Graph plus one apex joined to every vertex.
Graph apex_cone(const Graph& g);

/// Outerplanarity via planarity of the apex cone, cross-checked against
/// K4/K2,3 minor freeness (a disagreement throws std::logic_error). A K4
/// witness is preferred over a K2,3 one.
OuterplanarResult test_outerplanar(const Graph& g);

}  // namespace outerspatial
