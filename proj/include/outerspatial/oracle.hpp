#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "outerspatial/certificate.hpp"
#include "outerspatial/surface.hpp"

namespace outerspatial {

inline constexpr double kDefaultCap = 1e7;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Product over vertices of (deg(v) - 1)!, the number of rotation systems
/// (as a double; it overflows integers quickly).
double rotation_system_count(const Graph& g);

/// Visits every rotation system of g in canonical order: vertices by index,
/// each rotator starting at its smallest half-edge with the rest advancing
/// lexicographically. Returns the number visited; the visitor may stop the
/// walk by returning false. Throws CapExceeded above the cap.
std::uint64_t enumerate_rotation_systems(const Graph& g, const std::function<bool(const RotationSystem&)>& visit,
                                         double cap = kDefaultCap);

/// As above, restricted to genus-0 systems (partial assignments that cannot
/// reach genus 0 are pruned). g must be connected (std::invalid_argument).
/// Simple graphs with E > 3V - 6 yield nothing without touching the cap.
std::uint64_t enumerate_sphere_embeddings(const Graph& g, const std::function<bool(const RotationSystem&)>& visit,
                                          double cap = kDefaultCap);

struct NestedSearch {
  std::optional<NestedCertificate> certificate;
  std::uint64_t systems_examined = 0;
};

/// First genus-0 system (per component, in canonical order) under which no
/// two cycles cross. Throws std::invalid_argument for a non-cycle and
/// CapExceeded when a component is over the cap.
NestedSearch brute_force_nested(const Graph& g, const std::vector<Cycle>& cycles, double cap = kDefaultCap);

NestedSearch brute_force_outerspatial(const TwoComplex& complex, double cap = kDefaultCap);

struct AsphericalFound {
  std::vector<int> faces;
  ComponentSurface surface;
};

inline constexpr int kMaxSubsetFaces = 20;

/// First connected face subset (in increasing bitmask order, face 0 being
/// the lowest bit) forming a closed surface with Euler characteristic other
/// than 2. Throws CapExceeded above kMaxSubsetFaces faces.
std::optional<AsphericalFound> find_aspherical_subcomplex(const TwoComplex& complex);

}  // namespace outerspatial
