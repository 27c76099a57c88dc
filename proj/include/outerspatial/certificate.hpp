#pragma once

#include <string>
#include <vector>

#include "outerspatial/complex.hpp"
#include "outerspatial/embedding.hpp"

namespace outerspatial {

/// Nested plane embedding: a genus-0 rotation system of the skeleton, one
/// outer face per component (named by a dart on it) and the containment
/// forest of all cycle interiors.
struct NestedCertificate {
  RotationSystem rotation;
  std::vector<HalfEdge> outer_darts;  // per component; {-1, 0} for an isolated vertex
  std::vector<int> parent;            // per cycle; -1 for a root

  bool operator==(const NestedCertificate&) const = default;
};

/// Face boundaries of a complex as cycles of its skeleton.
std::vector<Cycle> face_cycles(const TwoComplex& complex);

/// Certificate for a rotation system whose lowest-indexed orbit per component
/// is taken as the outer face. Throws std::invalid_argument if the system is
/// not genus 0 or two cycles cross.
NestedCertificate make_certificate(const Graph& g, const std::vector<Cycle>& cycles, const RotationSystem& rot);

/// Re-traces the rotation system, checks genus 0, recomputes interiors
/// against the designated outer faces, checks laminarity over every cycle and
/// compares the forest. On failure the reason goes to *why.
bool verify_nested(const Graph& g, const std::vector<Cycle>& cycles, const NestedCertificate& cert,
                   std::string* why = nullptr);

bool verify_certificate(const TwoComplex& complex, const NestedCertificate& cert, std::string* why = nullptr);

}  // namespace outerspatial
