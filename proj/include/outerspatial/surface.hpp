#pragma once

#include <optional>
#include <vector>

#include "outerspatial/complex.hpp"

namespace outerspatial {

enum class SurfaceKind { NotASurface, Sphere, Orientable, NonOrientable };

const char* to_string(SurfaceKind kind);

/// Classification of one connected component of a complex.
struct ComponentSurface {
  SurfaceKind kind = SurfaceKind::NotASurface;
  int euler = 0;  // V - E + F
  int genus = 0;  // handles when orientable, cross-caps when not
  std::vector<int> vertices;
  std::vector<int> faces;
};

struct SurfaceClass {
  std::vector<ComponentSurface> components;  // numbered like connected_components
};

/// Per component: every link graph is a single cycle. Isolated vertices are
/// not surfaces.
std::vector<bool> is_closed_surface(const TwoComplex& complex);

/// Classifies every component; non-surface components keep their Euler
/// characteristic and are marked NotASurface.
SurfaceClass classify_surface(const TwoComplex& complex);

/// Classification of a single component, which must be a closed surface.
/// Throws std::invalid_argument otherwise.
ComponentSurface classify_component(const TwoComplex& complex, int component);

/// Signs (+1/-1) per face under which every edge is traversed once in each
/// direction, searching breadth-first from each component's first face; or
/// nullopt. Faces that traverse an edge twice in the same direction, or
/// edges with more than two traversals, make the complex non-orientable.
std::optional<std::vector<int>> orient_faces(const TwoComplex& complex, int start_face = -1);

}  // namespace outerspatial
