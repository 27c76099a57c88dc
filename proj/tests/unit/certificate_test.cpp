#include <gtest/gtest.h>

#include "checks.hpp"
#include "outerspatial/decider.hpp"
#include "outerspatial/generators.hpp"

using namespace outerspatial;

namespace {

NestedCertificate certificate_of(const TwoComplex& c) {
  const Verdict v = decide_outerspatial(c);
  EXPECT_TRUE(std::holds_alternative<Outerspatial>(v));
  return std::get<Outerspatial>(v).certificate;
}

}  // namespace

TEST(Certificate, TetrahedronRoundTrip) {
  const TwoComplex t = tetrahedron();
  const NestedCertificate cert = certificate_of(t);
  EXPECT_TRUE(verify_certificate(t, cert));
  EXPECT_TRUE(support::certificate_holds(t.graph(), face_cycles(t), cert));
}

TEST(Certificate, TransposedRotatorFails) {
  const TwoComplex t = tetrahedron();
  NestedCertificate cert = certificate_of(t);
  std::swap(cert.rotation.rotators[0][0], cert.rotation.rotators[0][1]);
  std::string why;
  EXPECT_FALSE(verify_certificate(t, cert, &why));
  EXPECT_FALSE(why.empty());
  EXPECT_FALSE(support::certificate_holds(t.graph(), face_cycles(t), cert));
}

TEST(Certificate, MissingFaceFails) {
  const TwoComplex t = tetrahedron();
  NestedCertificate cert = certificate_of(t);
  cert.parent.pop_back();
  EXPECT_FALSE(verify_certificate(t, cert));
}

TEST(Certificate, WrongParentFails) {
  const TwoComplex c = bipyramid_with_equator(4);
  NestedCertificate cert = certificate_of(c);
  for (int& p : cert.parent) p = -1;
  EXPECT_FALSE(verify_certificate(c, cert));
}

TEST(Certificate, EquatorContainsFourTriangles) {
  const TwoComplex c = bipyramid_with_equator(4);
  const NestedCertificate cert = certificate_of(c);
  const int eq = *c.find_face("equator");
  int children = 0;
  for (int p : cert.parent) children += p == eq ? 1 : 0;
  EXPECT_EQ(children, 4);
  EXPECT_TRUE(support::certificate_holds(c.graph(), face_cycles(c), cert));
}

TEST(Certificate, MakeCertificateRejectsCrossings) {
  const TwoComplex b = bipyramid(4);
  const Graph& g = b.graph();
  const auto id = [&](const char* n) { return *g.find_vertex(n); };
  const std::vector<Cycle> crossing{make_cycle(g, {id("n"), id("e0"), id("s"), id("e2")}),
                                    make_cycle(g, {id("n"), id("e1"), id("s"), id("e3")})};
  EXPECT_THROW(make_certificate(g, crossing, test_planar(g).rotation), std::invalid_argument);
}
