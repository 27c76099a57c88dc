#pragma once

#include <utility>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "outerspatial/graph.hpp"

namespace outerspatial {

/// Cyclic order of the half-edges at every vertex.
struct RotationSystem {
  std::vector<std::vector<HalfEdge>> rotators;

  /// Every half-edge of g appears exactly once, in the rotator of its vertex.
  [[nodiscard]] bool is_valid_for(const Graph& g) const;

  /// successor[h.index()] is the half-edge following h at its vertex.
  [[nodiscard]] std::vector<int> successor_table(const Graph& g) const;

  /// Rotates each rotator so that its smallest half-edge comes first.
  [[nodiscard]] RotationSystem normalized() const;

  bool operator==(const RotationSystem&) const = default;
};

/// Set of traced faces (orbit indices).
using FaceSet = boost::dynamic_bitset<>;

/// Face-tracing orbits of a rotation system. A dart is identified with the
/// half-edge it leaves through; the dart after d is the rotator successor
/// of d's twin at the vertex d arrives at.
struct TracedFaces {
  std::vector<std::vector<HalfEdge>> orbits;
  std::vector<int> orbit_of_dart;     // indexed by HalfEdge::index()
  std::vector<int> vertex_component;  // component per vertex
  std::vector<int> orbit_component;   // component per orbit
  std::vector<int> genus;             // per component, from Euler's formula
  int component_count = 0;

  [[nodiscard]] int orbit_count() const { return static_cast<int>(orbits.size()); }
  [[nodiscard]] bool spherical() const;
  [[nodiscard]] FaceSet empty_set() const { return FaceSet(orbits.size()); }
};

/// Traces a connected graph. Throws std::invalid_argument for a disconnected
/// graph, a rotation system that does not match g, or a non-integral genus.
TracedFaces trace_faces(const Graph& g, const RotationSystem& rot);

/// Same as trace_faces, but accepts several components; genus is reported
/// per component and isolated vertices count as spheres.
TracedFaces trace_all_faces(const Graph& g, const RotationSystem& rot);

struct PlanarityResult {
  bool planar = false;
  RotationSystem rotation;            // genus 0 on every component when planar
  std::vector<int> kuratowski_edges;  // edges of a K5/K3,3 subdivision otherwise
};

/// Planarity test with embedding output; deterministic for a given graph.
PlanarityResult test_planar(const Graph& g);

/// Connected, at least three vertices, no loops and no cutvertex.
bool is_2_connected(const Graph& g);

/// The two sides of a cycle in a genus-0 tracing: the faces of the cycle's
/// component, split by removing the dual edges that cross the cycle. The
/// first side contains the component's lowest-indexed face. Throws
/// std::invalid_argument if the component's genus is not zero or c is not a
/// genuine cycle of g.
std::pair<FaceSet, FaceSet> cycle_sides(const Graph& g, const TracedFaces& tf, const Cycle& c);

/// True iff no side of c1 lies inside a side of c2. Cycles in different
/// components never cross.
bool cycles_cross(const Graph& g, const TracedFaces& tf, const Cycle& c1, const Cycle& c2);

/// Laminar family of cycle interiors with respect to one designated outer
/// face per component (its lowest-indexed orbit).
struct NestingForest {
  std::vector<int> outer_orbits;   // per component; -1 for an isolated vertex
  std::vector<FaceSet> interiors;  // per cycle
  std::vector<int> parent;         // per cycle; -1 for a root
};

struct CrossingPair {
  int first = -1;
  int second = -1;
};

using NestingResult = std::variant<NestingForest, CrossingPair>;

/// Returns the lexicographically first crossing pair if there is one,
/// otherwise the containment forest.
NestingResult nesting_forest(const Graph& g, const TracedFaces& tf, const std::vector<Cycle>& cycles);

/// Interiors with respect to explicitly chosen outer faces (one per
/// component), plus the parent links of their containment forest. Used to
/// re-check certificates. Throws like cycle_sides.
NestingForest nesting_with_outer(const Graph& g, const TracedFaces& tf, const std::vector<Cycle>& cycles,
                                 const std::vector<int>& outer_orbits);

/// True iff every pair of interiors is disjoint or nested.
bool is_laminar(const std::vector<FaceSet>& sets);

}  // namespace outerspatial
