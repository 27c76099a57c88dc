#include <gtest/gtest.h>

#include <random>

#include "checks.hpp"
#include "corpus.hpp"
#include "outerspatial/decider.hpp"
#include "outerspatial/generators.hpp"
#include "outerspatial/io.hpp"

using namespace outerspatial;

namespace {

TwoComplex bundled(const std::string& name) { return parse_complex(read_text(std::string(OUTERSPATIAL_DATA_DIR) + "/" + name)); }

const NonOuterplanarLink& link_obstruction(const Verdict& v) {
  const auto& no = std::get<NotOuterspatial>(v);
  return std::get<NonOuterplanarLink>(no.obstruction);
}

std::vector<Cycle> crossing_pair(const Graph& b) {
  const auto id = [&](const char* n) { return *b.find_vertex(n); };
  return {make_cycle(b, {id("n"), id("e0"), id("s"), id("e2")}), make_cycle(b, {id("n"), id("e1"), id("s"), id("e3")})};
}

}  // namespace

TEST(Chordal, Examples) {
  const TwoComplex eq = bipyramid_with_equator(4);
  const auto faces = find_chordal_faces(eq);
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(eq.face(faces[0].face).name, "equator");
  std::vector<std::string> at;
  for (int v : faces[0].chord_at) at.push_back(eq.graph().vertex_name(v));
  EXPECT_EQ(at, (std::vector<std::string>{"e0", "e1", "e2", "e3"}));
  EXPECT_FALSE(check_perfectly_chordal(eq, faces[0].face).has_value());

  EXPECT_TRUE(find_chordal_faces(tetrahedron()).empty());
  EXPECT_TRUE(find_chordal_faces(bipyramid(4)).empty());
  EXPECT_THROW(find_chordal_faces(graph_cone(complete_graph(4))), std::invalid_argument);
  EXPECT_THROW(check_perfectly_chordal(tetrahedron(), 0), std::invalid_argument);
}

// Face c3 is a chord in the link at 3 but sits on the boundary cycle of the
// link at 2; contracting 3-2 gives a K2,3.
TEST(Chordal, FailureFixture) {
  const TwoComplex c = bundled("chordality.cx");
  const int f = *c.find_face("c3");
  const auto fail = check_perfectly_chordal(c, f);
  ASSERT_TRUE(fail.has_value());
  ASSERT_TRUE(fail->obstruction.has_value());
  EXPECT_EQ(fail->obstruction->witness.target, MinorTarget::K23);
  EXPECT_EQ(fail->obstruction->path.vertices.size(), 2u);
  std::string why;
  EXPECT_TRUE(support::obstruction_holds(c, *fail->obstruction, &why)) << why;

  const Verdict v = decide_outerspatial(c);
  const NonOuterplanarLink& nl = link_obstruction(v);
  EXPECT_EQ(nl.witness.target, MinorTarget::K23);
  EXPECT_EQ(nl.path.vertices.size(), 2u);
  EXPECT_FALSE(brute_force_outerspatial(c).certificate.has_value());
}

TEST(Decide, ConeOverK4) {
  const TwoComplex c = graph_cone(complete_graph(4));
  const Verdict v = decide_outerspatial(c);
  const NonOuterplanarLink& nl = link_obstruction(v);
  ASSERT_EQ(nl.path.vertices.size(), 1u);
  EXPECT_EQ(c.graph().vertex_name(nl.path.vertices[0]), "top");
  EXPECT_EQ(nl.witness.target, MinorTarget::K4);
  EXPECT_TRUE(support::obstruction_holds(c, std::get<NotOuterspatial>(v).obstruction));
}

TEST(Decide, ConeOverK23) {
  const TwoComplex c = graph_cone(k23());
  const Verdict v = decide_outerspatial(c);
  EXPECT_EQ(link_obstruction(v).witness.target, MinorTarget::K23);
  EXPECT_EQ(link_obstruction(v).path.vertices.size(), 1u);
}

TEST(Decide, Torus) {
  const TwoComplex c = torus7();
  const Verdict v = decide_outerspatial(c);
  const auto& as = std::get<AsphericalSubcomplex>(std::get<NotOuterspatial>(v).obstruction);
  EXPECT_EQ(as.faces.size(), 14u);
  EXPECT_EQ(as.surface.euler, 0);
  EXPECT_EQ(as.surface.kind, SurfaceKind::Orientable);
  EXPECT_TRUE(support::obstruction_holds(c, std::get<NotOuterspatial>(v).obstruction));
}

TEST(Decide, BipyramidWithEquator) {
  const TwoComplex c = bipyramid_with_equator(4);
  const Verdict v = decide_outerspatial(c);
  ASSERT_TRUE(std::holds_alternative<Outerspatial>(v));
  const NestedCertificate& cert = std::get<Outerspatial>(v).certificate;
  EXPECT_TRUE(support::certificate_holds(c.graph(), face_cycles(c), cert));
}

// Two chordal faces cross along the edge 1-7 of the sphere left after
// removing them; contracting that edge gives a K4 in the merged link.
TEST(Decide, CrossingFixture) {
  const TwoComplex c = bundled("crossing.cx");
  const Verdict v = decide_outerspatial(c);
  const NonOuterplanarLink& nl = link_obstruction(v);
  EXPECT_EQ(nl.witness.target, MinorTarget::K4);
  ASSERT_EQ(nl.path.vertices.size(), 2u);
  EXPECT_EQ(c.graph().vertex_name(nl.path.vertices[0]), "1");
  EXPECT_EQ(c.graph().vertex_name(nl.path.vertices[1]), "7");
  std::string why;
  EXPECT_TRUE(support::obstruction_holds(c, std::get<NotOuterspatial>(v).obstruction, &why)) << why;
  EXPECT_TRUE(locally_2_connected(c));
  EXPECT_FALSE(brute_force_outerspatial(c, 1e13).certificate.has_value());
}

TEST(Decide, RejectsInvalidInput) {
  const TwoComplex c = parse_complex_lenient("vertex v\nedge l v v\n");
  EXPECT_THROW(decide_outerspatial(c), std::invalid_argument);
}

TEST(Decide, ProjectivePlane) {
  const Verdict v = decide_outerspatial(projective_plane6());
  const auto& as = std::get<AsphericalSubcomplex>(std::get<NotOuterspatial>(v).obstruction);
  EXPECT_EQ(as.surface.kind, SurfaceKind::NonOrientable);
  EXPECT_EQ(as.surface.euler, 1);
}

// A bowtie is not locally 2-connected but still gets a checked certificate.
TEST(Decide, SoundAnswerWithoutTheHypothesis) {
  const Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  const TwoComplex c = associated_complex(g, {make_cycle(g, {0, 1, 2}), make_cycle(g, {0, 3, 4})});
  EXPECT_FALSE(locally_2_connected(c));
  EXPECT_TRUE(std::holds_alternative<Outerspatial>(decide_outerspatial(c)));
}

TEST(Decide, HypothesisViolated) {
  const Graph b = bipyramid(4).graph();
  const TwoComplex c = associated_complex(b, crossing_pair(b));
  const Verdict v = decide_outerspatial(c);
  ASSERT_TRUE(std::holds_alternative<HypothesisViolated>(v));
  EXPECT_FALSE(std::get<HypothesisViolated>(v).detail.empty());
}

TEST(NestedPlane, Examples) {
  const Graph k4 = complete_graph(4);
  EXPECT_TRUE(std::holds_alternative<Outerspatial>(decide_nested_plane(k4, triangles(k4))));

  const Graph b = bipyramid(4).graph();
  const Verdict cross = decide_nested_plane(b, crossing_pair(b));
  ASSERT_TRUE(std::holds_alternative<NotOuterspatial>(cross));
  EXPECT_TRUE(std::holds_alternative<ExhaustiveRefutation>(std::get<NotOuterspatial>(cross).obstruction));

  const Verdict refused = decide_nested_plane(b, crossing_pair(b), 1);
  ASSERT_TRUE(std::holds_alternative<HypothesisViolated>(refused));
  EXPECT_NE(std::get<HypothesisViolated>(refused).detail.find("cap"), std::string::npos);

  EXPECT_THROW(decide_nested_plane(b, {Cycle{{0, 1}, {0}}}), std::invalid_argument);
}

TEST(NestedPlane, PlanarGraphsWithAllTriangles) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_planar_graph(rng, 5 + i % 6, i % 4);
    EXPECT_TRUE(std::holds_alternative<Outerspatial>(decide_nested_plane(g, triangles(g))));
  }
}

// Properties over the small exhaustive corpus.
TEST(Properties, OverSmallCorpus) {
  for (const TwoComplex& c : support::small_complex_corpus()) {
    const Verdict v = decide_outerspatial(c);
    if (const auto* yes = std::get_if<Outerspatial>(&v)) {
      EXPECT_TRUE(support::certificate_holds(c.graph(), face_cycles(c), yes->certificate));
    } else if (const auto* no = std::get_if<NotOuterspatial>(&v)) {
      std::string why;
      EXPECT_TRUE(support::obstruction_holds(c, no->obstruction, &why)) << why;
    }
    if (!locally_2_connected(c)) continue;
    EXPECT_NE(v.index(), 2u);

    // simplicial inputs give the same verdict with and without the fast path
    bool simplicial = true;
    for (int f = 0; f < c.face_count(); ++f) simplicial = simplicial && c.face_edges(f).size() == 3;
    if (simplicial) EXPECT_EQ(decide_outerspatial(c, {.triangle_fast_path = false}).index(), v.index());

    bool links_outerplanar = true;
    for (int x = 0; x < c.vertex_count(); ++x) links_outerplanar = links_outerplanar && test_outerplanar(link_graph(c, x).graph).outerplanar;
    if (!links_outerplanar) continue;
    // removing the chordal faces only removes chords from links
    std::set<int> chordal;
    for (const ChordalFace& f : find_chordal_faces(c)) chordal.insert(f.face);
    const TwoComplex d = delete_faces(c, chordal);
    for (int x = 0; x < d.vertex_count(); ++x) EXPECT_TRUE(test_outerplanar(link_graph(d, x).graph).outerplanar);
    if (std::holds_alternative<Outerspatial>(v)) {
      for (int f : chordal) EXPECT_FALSE(check_perfectly_chordal(c, f).has_value());
    }
  }
}

TEST(Properties, FastPathAgreementOnRandomSpheres) {
  for (std::uint64_t s = 0; s < 80; ++s) {
    RandomParams p;
    p.vertices = 5 + static_cast<int>(s % 4);
    p.merges = 0;
    p.extra_cycles = 0;
    p.flips = static_cast<int>(s % 5);
    p.cap = 1e30;  // no oracle involved
    const TwoComplex c = random_complex(s, p);
    EXPECT_EQ(decide_outerspatial(c).index(), decide_outerspatial(c, {.triangle_fast_path = false}).index());
  }
}
