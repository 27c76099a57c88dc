#pragma once

#include <string>
#include <vector>

#include "outerspatial/certificate.hpp"

namespace outerspatial {

enum class RenderFormat { Dot, Svg };

/// Straight-line drawing of a certificate embedding: the outer face of each
/// component on a circle, the remaining vertices placed by barycentric
/// relaxation. Dot output pins positions for neato.
std::string render_embedding(const Graph& g, const NestedCertificate& cert, RenderFormat format);

/// Link graph drawn with its vertices on a circle, in boundary order when the
/// link is outerplanar and 2-connected.
std::string render_link(const LinkGraph& link, RenderFormat format);

}  // namespace outerspatial
