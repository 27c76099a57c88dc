#pragma once

#include <cstdint>
#include <vector>

#include "outerspatial/complex.hpp"

namespace outerspatial::support {

/// One complex per isomorphism class among those on at most five vertices
/// with one to six faces, the skeleton being the union of the face
/// boundaries. Classes where an edge lies on exactly one face are left out:
/// that edge is a degree-one vertex in two links, so they are never locally
/// 2-connected. The same goes for extra faceless edges or vertices. Built
/// once per process.
const std::vector<TwoComplex>& small_complex_corpus();

struct RandomCorpus {
  std::vector<TwoComplex> complexes;
  std::vector<std::uint64_t> seeds;
  int failures = 0;  // seeds for which the generator gave up
};

/// random_complex over consecutive seeds, 5 to 8 vertices, parameters cycling
/// with the seed.
RandomCorpus random_corpus(std::uint64_t first_seed, int seeds);

/// All simple graphs on n vertices, one per isomorphism class.
std::vector<Graph> graphs_up_to_iso(int n);

/// Graphs on n vertices with edge probability cycling through a few values.
std::vector<Graph> random_graphs(int count, int n, std::uint64_t seed);

}  // namespace outerspatial::support
