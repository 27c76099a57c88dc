#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "outerspatial/decider.hpp"

namespace outerspatial {

/// Text report of a verdict. Certificates list rotators by edge name, the
/// outer face of each component as a vertex sequence and the nesting forest
/// as an indented tree of cycle names.
std::string format_verdict(const Graph& g, const std::vector<std::string>& cycle_names, const Verdict& verdict);
std::string format_verdict(const TwoComplex& complex, const Verdict& verdict);

std::string format_certificate(const Graph& g, const std::vector<std::string>& cycle_names, const NestedCertificate& cert);

/// Reads the certificate section of a report back. Throws ParseError.
NestedCertificate parse_certificate(const Graph& g, const std::vector<std::string>& cycle_names, std::string_view report);

std::string format_surface(const TwoComplex& complex, const SurfaceClass& sc);

/// Every link graph with its outerplanarity status.
std::string format_links(const TwoComplex& complex);

std::vector<std::string> face_names(const TwoComplex& complex);

}  // namespace outerspatial
