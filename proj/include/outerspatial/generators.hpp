#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "outerspatial/complex.hpp"
#include "outerspatial/oracle.hpp"

namespace outerspatial {

/// Boundary of the tetrahedron on a, b, c, d.
TwoComplex tetrahedron();

/// Two apexes n and s over the equator cycle e0 ... e(k-1), k >= 3; the
/// second version adds the equator itself as a face.
TwoComplex bipyramid(int k);
TwoComplex bipyramid_with_equator(int k);

/// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
TwoComplex torus7();

/// A 6-vertex triangulation of the projective plane.
TwoComplex projective_plane6();

Graph complete_graph(int n);
/// K2,3 with sides {a, b} and {x, y, z}.
Graph k23();

/// 2-dimensional cone over the faceless complex on g.
TwoComplex graph_cone(const Graph& g);

/// Every triangle of a simple graph, in lexicographic vertex order.
std::vector<Cycle> triangles(const Graph& g);

struct RandomParams {
  int vertices = 6;      // 4..12
  int flips = 4;         // random edge flips of the stacked triangulation
  int merges = 1;        // faces merged across a deleted edge
  int extra_edges = 0;   // edges added off the sphere
  int extra_cycles = 2;  // random cycles added as faces
  double cap = kDefaultCap;
};

/// Random simple locally 2-connected complex: a random sphere (stacked
/// triangulation, flips, merged faces) with extra edges and cycles. Draws
/// until the result is locally 2-connected and within the cap. Deterministic
/// per seed; throws std::runtime_error if no draw succeeds.
TwoComplex random_complex(std::uint64_t seed, const RandomParams& params);

/// Random simple planar graph: a random triangulation with edges removed.
Graph random_planar_graph(std::mt19937_64& rng, int vertices, int deletions);

/// Every link simple and 2-connected.
bool locally_2_connected(const TwoComplex& complex);

}  // namespace outerspatial
