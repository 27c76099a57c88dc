#include <gtest/gtest.h>

#include "checks.hpp"
#include "corpus.hpp"
#include "outerspatial/generators.hpp"
#include "outerspatial/outerplanar.hpp"

using namespace outerspatial;

TEST(Outerplanar, SquareWithDiagonal) {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  const OuterplanarResult r = test_outerplanar(g);
  ASSERT_TRUE(r.outerplanar);
  ASSERT_TRUE(r.structure.has_value());
  EXPECT_EQ(r.structure->boundary, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(r.structure->chords, std::vector<int>{4});
  EXPECT_TRUE(r.structure->is_chord(4));
  EXPECT_FALSE(r.structure->is_chord(0));
  EXPECT_EQ(r.structure->position(2), 2);
}

TEST(Outerplanar, K4Witness) {
  const Graph g = complete_graph(4);
  const OuterplanarResult r = test_outerplanar(g);
  ASSERT_FALSE(r.outerplanar);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->target, MinorTarget::K4);
  EXPECT_TRUE(support::minor_model_holds(g, *r.witness));
}

TEST(Outerplanar, K23Witness) {
  const Graph g = k23();
  const OuterplanarResult r = test_outerplanar(g);
  ASSERT_FALSE(r.outerplanar);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->target, MinorTarget::K23);
  EXPECT_TRUE(support::minor_model_holds(g, *r.witness));
  EXPECT_FALSE(has_k4_minor(g));
}

TEST(Outerplanar, TamperedWitnessFails) {
  const Graph g = complete_graph(4);
  MinorWitness w = *test_outerplanar(g).witness;
  std::swap(w.connecting_edges[0], w.connecting_edges[5]);
  EXPECT_FALSE(verify_witness(g, w));
  EXPECT_FALSE(support::minor_model_holds(g, w));
}

TEST(Outerplanar, NotTwoConnectedHasNoStructure) {
  const Graph bowtie = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  const OuterplanarResult r = test_outerplanar(bowtie);
  EXPECT_TRUE(r.outerplanar);
  EXPECT_FALSE(r.structure.has_value());
}

// Cone planarity, minor freeness and the Hamilton-face search agree.
TEST(Outerplanar, TripleAgreementUpToSixVertices) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : support::graphs_up_to_iso(n)) {
      const OuterplanarResult r = test_outerplanar(g);
      const bool cone_planar = test_planar(apex_cone(g)).planar;
      const bool minor_free = !has_k4_minor(g) && !has_k23_minor(g);
      EXPECT_EQ(r.outerplanar, cone_planar);
      EXPECT_EQ(r.outerplanar, minor_free);
      if (is_2_connected(g)) EXPECT_EQ(r.outerplanar, support::hamilton_face_outerplanar(g));
      if (r.witness) {
        EXPECT_TRUE(support::minor_model_holds(g, *r.witness));
      }
      for (MinorTarget t : {MinorTarget::K4, MinorTarget::K23}) {
        if (const auto w = find_minor(g, t)) EXPECT_TRUE(support::minor_model_holds(g, *w));
      }
    }
  }
}

TEST(Outerplanar, GraphCountsUpToIsomorphism) {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(support::graphs_up_to_iso(n).size(), expected[static_cast<std::size_t>(n - 1)]);
}
