#include "outerspatial/certificate.hpp"

#include <stdexcept>
#include <variant>

namespace outerspatial {

std::vector<Cycle> face_cycles(const TwoComplex& complex) {
  std::vector<Cycle> cycles;
  cycles.reserve(static_cast<std::size_t>(complex.face_count()));
  for (int f = 0; f < complex.face_count(); ++f) cycles.push_back(complex.face_cycle(f));
  return cycles;
}

NestedCertificate make_certificate(const Graph& g, const std::vector<Cycle>& cycles, const RotationSystem& rot) {
  const TracedFaces tf = trace_all_faces(g, rot);
  if (!tf.spherical()) throw std::invalid_argument("make_certificate: rotation system is not genus 0");
  const NestingResult res = nesting_forest(g, tf, cycles);
  const auto* forest = std::get_if<NestingForest>(&res);
  if (forest == nullptr) throw std::invalid_argument("make_certificate: cycles cross");
  NestedCertificate cert;
  cert.rotation = rot;
  for (int orbit : forest->outer_orbits) {
    cert.outer_darts.push_back(orbit < 0 ? HalfEdge{-1, 0} : tf.orbits[static_cast<std::size_t>(orbit)].front());
  }
  cert.parent = forest->parent;
  return cert;
}

namespace {

bool fail(std::string* why, std::string reason) {
  if (why != nullptr) *why = std::move(reason);
  return false;
}

}  // namespace

bool verify_nested(const Graph& g, const std::vector<Cycle>& cycles, const NestedCertificate& cert, std::string* why) {
  if (!cert.rotation.is_valid_for(g)) return fail(why, "rotation system does not match the skeleton");
  TracedFaces tf;
  try {
    tf = trace_all_faces(g, cert.rotation);
  } catch (const std::exception& e) {
    return fail(why, e.what());
  }
  for (int c = 0; c < tf.component_count; ++c) {
    if (tf.genus[static_cast<std::size_t>(c)] != 0) {
      return fail(why, "component " + std::to_string(c) + " traces to genus " + std::to_string(tf.genus[static_cast<std::size_t>(c)]));
    }
  }
  if (cert.outer_darts.size() != static_cast<std::size_t>(tf.component_count)) return fail(why, "one outer face per component expected");
  std::vector<bool> has_edges(static_cast<std::size_t>(tf.component_count), false);
  for (const Edge& e : g.edges()) has_edges[static_cast<std::size_t>(tf.vertex_component[static_cast<std::size_t>(e.u)])] = true;
  std::vector<int> outer;
  for (int c = 0; c < tf.component_count; ++c) {
    const HalfEdge d = cert.outer_darts[static_cast<std::size_t>(c)];
    if (!has_edges[static_cast<std::size_t>(c)]) {
      if (d.edge != -1) return fail(why, "outer dart given for an isolated vertex");
      outer.push_back(-1);
      continue;
    }
    if (d.edge < 0 || d.edge >= g.edge_count() || d.end < 0 || d.end > 1) return fail(why, "outer dart out of range");
    if (tf.vertex_component[static_cast<std::size_t>(g.vertex_of(d))] != c) return fail(why, "outer dart in the wrong component");
    outer.push_back(tf.orbit_of_dart[static_cast<std::size_t>(d.index())]);
  }
  for (const Cycle& c : cycles) {
    if (!is_genuine_cycle(g, c)) return fail(why, "a boundary is not a cycle of the skeleton");
  }
  if (cert.parent.size() != cycles.size()) return fail(why, "forest does not cover every boundary");
  const NestingForest forest = nesting_with_outer(g, tf, cycles, outer);
  if (!is_laminar(forest.interiors)) return fail(why, "interiors are not laminar");
  if (forest.parent != cert.parent) return fail(why, "forest parents do not match the embedding");
  return true;
}

bool verify_certificate(const TwoComplex& complex, const NestedCertificate& cert, std::string* why) {
  return verify_nested(complex.graph(), face_cycles(complex), cert, why);
}

}  // namespace outerspatial
