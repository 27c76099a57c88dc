#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "outerspatial/complex.hpp"

namespace outerspatial {

/// Parse failure with the 1-based line it refers to (0 when not tied to a
/// line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

/// Reads the line format:
///   vertex <id>
///   edge <id> <u> <v>
///   face <id> <v1> ... <vk>     (lowest-index edge between consecutive vertices)
///   facee <id> <e1> ... <ek>    (explicit edges, for multigraphs)
/// '#' starts a comment. Unknown directives, dangling references and
/// duplicate ids are errors. The strict version also rejects complexes that
/// do not validate, reporting the line of the offending element.
TwoComplex parse_complex(std::string_view text);
TwoComplex parse_complex_lenient(std::string_view text);

/// Inverse of parse_complex: parse_complex(print_complex(c)) == c.
std::string print_complex(const TwoComplex& complex);

/// Cycle list `cycle <id> <v1> ... <vk>` over the vertices of g.
struct NamedCycles {
  std::vector<std::string> names;
  std::vector<Cycle> cycles;
};
NamedCycles parse_cycles(const Graph& g, std::string_view text);

/// File helpers; I/O failures throw std::runtime_error.
std::string read_text(const std::filesystem::path& path);

bool operator==(const Graph& a, const Graph& b);
bool operator==(const TwoComplex& a, const TwoComplex& b);

}  // namespace outerspatial
