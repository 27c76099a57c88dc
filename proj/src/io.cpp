#include "outerspatial/io.hpp"

#include <fstream>
#include <algorithm>
#include <map>
#include <sstream>

namespace outerspatial {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

struct Parsed {
  TwoComplex complex;
  std::map<std::string, int> line_of;  // element name -> line
};

Parsed parse(std::string_view text) {
  Graph g;
  std::vector<Face> faces;
  std::map<std::string, int> face_lines, vertex_lines, edge_lines;
  std::istringstream in{std::string(text)};
  int number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    const auto vertex = [&](const std::string& name) {
      const auto v = g.find_vertex(name);
      if (!v) throw ParseError(number, "unknown vertex '" + name + "'");
      return *v;
    };
    if (kind == "vertex") {
      if (tok.size() != 2) throw ParseError(number, "expected: vertex <id>");
      if (g.find_vertex(tok[1])) throw ParseError(number, "duplicate vertex '" + tok[1] + "'");
      g.add_vertex(tok[1]);
      vertex_lines[tok[1]] = number;
    } else if (kind == "edge") {
      if (tok.size() != 4) throw ParseError(number, "expected: edge <id> <u> <v>");
      if (g.find_edge(tok[1])) throw ParseError(number, "duplicate edge '" + tok[1] + "'");
      g.add_edge(tok[1], vertex(tok[2]), vertex(tok[3]));
      edge_lines[tok[1]] = number;
    } else if (kind == "face" || kind == "facee") {
      if (tok.size() < 3) throw ParseError(number, "expected: " + kind + " <id> <...>");
      if (face_lines.count(tok[1])) throw ParseError(number, "duplicate face '" + tok[1] + "'");
      std::vector<int> ids;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        if (kind == "face") {
          ids.push_back(vertex(tok[i]));
        } else {
          const auto e = g.find_edge(tok[i]);
          if (!e) throw ParseError(number, "unknown edge '" + tok[i] + "'");
          ids.push_back(*e);
        }
      }
      try {
        faces.push_back(kind == "face" ? face_from_vertices(g, tok[1], ids) : face_from_edges(g, tok[1], ids));
      } catch (const std::invalid_argument& e) {
        throw ParseError(number, e.what());
      }
      face_lines[tok[1]] = number;
    } else {
      throw ParseError(number, "unknown directive '" + kind + "'");
    }
  }
  Parsed out;
  try {
    out.complex = TwoComplex(std::move(g), std::move(faces));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  // Faces first: their names are the most specific element a diagnostic can
  // point at.
  for (auto* m : {&vertex_lines, &edge_lines, &face_lines}) {
    for (const auto& [name, line] : *m) out.line_of[name] = line;
  }
  return out;
}

}  // namespace

TwoComplex parse_complex_lenient(std::string_view text) { return parse(text).complex; }

TwoComplex parse_complex(std::string_view text) {
  Parsed p = parse(text);
  const auto diags = validate(p.complex);
  if (!diags.empty()) {
    const auto it = p.line_of.find(diags.front().element);
    throw ParseError(it == p.line_of.end() ? 0 : it->second, diags.front().message);
  }
  return std::move(p.complex);
}

std::string print_complex(const TwoComplex& complex) {
  const Graph& g = complex.graph();
  std::ostringstream out;
  for (int v = 0; v < g.vertex_count(); ++v) out << "vertex " << g.vertex_name(v) << '\n';
  for (int e = 0; e < g.edge_count(); ++e) {
    out << "edge " << g.edge_name(e) << ' ' << g.vertex_name(g.edge(e).u) << ' ' << g.vertex_name(g.edge(e).v) << '\n';
  }
  for (const Face& f : complex.faces()) {
    bool by_vertices = f.boundary.size() >= 3;
    for (const HalfEdge& d : f.boundary) {
      const int a = g.vertex_of(d);
      const int b = g.opposite(d);
      if (a == b || g.edge_between(a, b) != d.edge) by_vertices = false;
    }
    out << (by_vertices ? "face " : "facee ") << f.name;
    for (const HalfEdge& d : f.boundary) out << ' ' << (by_vertices ? g.vertex_name(g.vertex_of(d)) : g.edge_name(d.edge));
    out << '\n';
  }
  return out.str();
}

NamedCycles parse_cycles(const Graph& g, std::string_view text) {
  NamedCycles out;
  std::istringstream in{std::string(text)};
  int number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok[0] != "cycle") throw ParseError(number, "unknown directive '" + tok[0] + "'");
    if (tok.size() < 5) throw ParseError(number, "expected: cycle <id> <v1> <v2> <v3> ...");
    if (std::find(out.names.begin(), out.names.end(), tok[1]) != out.names.end()) {
      throw ParseError(number, "duplicate cycle '" + tok[1] + "'");
    }
    std::vector<int> vs;
    for (std::size_t i = 2; i < tok.size(); ++i) {
      const auto v = g.find_vertex(tok[i]);
      if (!v) throw ParseError(number, "unknown vertex '" + tok[i] + "'");
      vs.push_back(*v);
    }
    try {
      out.cycles.push_back(make_cycle(g, vs));
    } catch (const std::invalid_argument& e) {
      throw ParseError(number, e.what());
    }
    out.names.push_back(tok[1]);
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (int v = 0; v < a.vertex_count(); ++v) {
    if (a.vertex_name(v) != b.vertex_name(v)) return false;
  }
  for (int e = 0; e < a.edge_count(); ++e) {
    if (a.edge_name(e) != b.edge_name(e) || a.edge(e).u != b.edge(e).u || a.edge(e).v != b.edge(e).v) return false;
  }
  return true;
}

bool operator==(const TwoComplex& a, const TwoComplex& b) {
  if (!(a.graph() == b.graph()) || a.face_count() != b.face_count()) return false;
  for (int f = 0; f < a.face_count(); ++f) {
    if (a.face(f).name != b.face(f).name || a.face(f).boundary != b.face(f).boundary) return false;
  }
  return true;
}

}  // namespace outerspatial
