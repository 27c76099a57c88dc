#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "outerspatial/certificate.hpp"
#include "outerspatial/complex.hpp"
#include "outerspatial/oracle.hpp"
#include "outerspatial/outerplanar.hpp"
#include "outerspatial/surface.hpp"

namespace outerspatial {

/// A path P of the complex whose contraction leaves a non-outerplanar link
/// at the merged vertex. `link` is that link in C/P and the witness lives in
/// link.graph.
struct NonOuterplanarLink {
  Path path;
  LinkGraph link;
  MinorWitness witness;
};

/// Faces of the complex that form a closed surface other than the sphere.
struct AsphericalSubcomplex {
  std::vector<int> faces;
  ComponentSurface surface;
};

/// Every genus-0 rotation system of the skeleton was tried and all have a
/// crossing pair. Only produced by the oracle fallback of
/// decide_nested_plane.
struct ExhaustiveRefutation {
  std::uint64_t systems_examined = 0;
};

using Obstruction = std::variant<NonOuterplanarLink, AsphericalSubcomplex, ExhaustiveRefutation>;

struct Outerspatial {
  NestedCertificate certificate;
};

struct NotOuterspatial {
  Obstruction obstruction;
};

struct HypothesisViolated {
  std::string detail;
};

using Verdict = std::variant<Outerspatial, NotOuterspatial, HypothesisViolated>;

const char* verdict_name(const Verdict& v);

struct ChordalFace {
  int face = -1;
  std::vector<int> chord_at;  // vertices whose link has this face as a chord
};

/// Chordal faces in face order. Throws std::invalid_argument if some link is
/// not simple, 2-connected and outerplanar.
std::vector<ChordalFace> find_chordal_faces(const TwoComplex& complex);

/// An edge ux of a chordal face f where f is a chord in the link at u but not
/// at x. The obstruction is the link of C/ux when it is not outerplanar.
struct ChordalityFailure {
  int u = -1;
  int x = -1;
  int edge = -1;
  std::optional<NonOuterplanarLink> obstruction;
};

/// Walks f's boundary from the first vertex at which f is a chord and
/// reports the first chord/non-chord transition, or nullopt when f is a
/// chord at every vertex. Throws std::invalid_argument if f is a chord
/// nowhere or a link of one of its vertices has no outerplane structure.
std::optional<ChordalityFailure> check_perfectly_chordal(const TwoComplex& complex, int face);

struct DecideOptions {
  bool triangle_fast_path = true;
};

/// Decides whether a validated complex is outerspatial. Certificates and
/// obstructions are checked before being returned. Throws
/// std::invalid_argument for a complex that does not validate.
Verdict decide_outerspatial(const TwoComplex& complex, const DecideOptions& options = {});

/// Nested plane embedding of g for the cycles, through the associated
/// complex. Undecided inputs fall back to the oracle within the cap. Throws
/// std::invalid_argument for a non-simple graph, a non-cycle or a repeated
/// cycle.
Verdict decide_nested_plane(const Graph& g, const std::vector<Cycle>& cycles, double cap = kDefaultCap);

/// Recomputes an obstruction against the complex.
bool verify_obstruction(const TwoComplex& complex, const Obstruction& obstruction, std::string* why = nullptr,
                        double cap = kDefaultCap);

}  // namespace outerspatial
