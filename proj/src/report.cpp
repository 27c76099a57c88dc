#include "outerspatial/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "outerspatial/io.hpp"

namespace outerspatial {

std::vector<std::string> face_names(const TwoComplex& complex) {
  std::vector<std::string> out;
  for (const Face& f : complex.faces()) out.push_back(f.name);
  return out;
}

std::string format_certificate(const Graph& g, const std::vector<std::string>& cycle_names, const NestedCertificate& cert) {
  std::ostringstream out;
  out << "certificate\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  rotator " << g.vertex_name(v);
    for (const HalfEdge& h : cert.rotation.rotators[static_cast<std::size_t>(v)]) out << ' ' << g.edge_name(h.edge);
    out << '\n';
  }
  const TracedFaces tf = trace_all_faces(g, cert.rotation);
  for (std::size_t c = 0; c < cert.outer_darts.size(); ++c) {
    out << "  outer";
    const HalfEdge d = cert.outer_darts[c];
    if (d.edge < 0) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (tf.vertex_component[static_cast<std::size_t>(v)] == static_cast<int>(c)) out << ' ' << g.vertex_name(v);
      }
    } else {
      const auto& orbit = tf.orbits[static_cast<std::size_t>(tf.orbit_of_dart[static_cast<std::size_t>(d.index())])];
      const auto start = std::find(orbit.begin(), orbit.end(), d) - orbit.begin();
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        out << ' ' << g.vertex_name(g.vertex_of(orbit[(static_cast<std::size_t>(start) + i) % orbit.size()]));
      }
    }
    out << '\n';
  }
  out << "  forest\n";
  std::vector<std::vector<int>> children(cert.parent.size());
  std::vector<int> roots;
  for (std::size_t i = 0; i < cert.parent.size(); ++i) {
    if (cert.parent[i] < 0) {
      roots.push_back(static_cast<int>(i));
    } else {
      children[static_cast<std::size_t>(cert.parent[i])].push_back(static_cast<int>(i));
    }
  }
  std::function<void(int, int)> show = [&](int node, int depth) {
    out << std::string(static_cast<std::size_t>(2 * depth + 4), ' ') << cycle_names[static_cast<std::size_t>(node)] << '\n';
    for (int ch : children[static_cast<std::size_t>(node)]) show(ch, depth + 1);
  };
  for (int r : roots) show(r, 0);
  return out.str();
}

NestedCertificate parse_certificate(const Graph& g, const std::vector<std::string>& cycle_names, std::string_view report) {
  NestedCertificate cert;
  cert.rotation.rotators.resize(static_cast<std::size_t>(g.vertex_count()));
  cert.parent.assign(cycle_names.size(), -2);
  std::map<std::string, int> cycle_index;
  for (std::size_t i = 0; i < cycle_names.size(); ++i) cycle_index[cycle_names[i]] = static_cast<int>(i);
  std::istringstream in{std::string(report)};
  int number = 0;
  bool inside = false;
  bool in_forest = false;
  std::vector<std::pair<std::size_t, int>> stack;  // (indent, cycle)
  std::vector<std::pair<int, std::vector<int>>> outer_lines;  // (line, vertices)
  for (std::string line; std::getline(in, line);) {
    ++number;
    const std::size_t indent = line.find_first_not_of(' ');
    if (indent == std::string::npos) continue;
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (!inside) {
      inside = tok[0] == "certificate" && indent == 0;
      continue;
    }
    if (indent == 0) break;
    if (in_forest) {
      const auto it = cycle_index.find(tok[0]);
      if (tok.size() != 1 || it == cycle_index.end()) throw ParseError(number, "unknown cycle '" + tok[0] + "'");
      while (!stack.empty() && stack.back().first >= indent) stack.pop_back();
      if (cert.parent[static_cast<std::size_t>(it->second)] != -2) throw ParseError(number, "cycle listed twice");
      cert.parent[static_cast<std::size_t>(it->second)] = stack.empty() ? -1 : stack.back().second;
      stack.emplace_back(indent, it->second);
      continue;
    }
    const auto vertex = [&](const std::string& name) {
      const auto v = g.find_vertex(name);
      if (!v) throw ParseError(number, "unknown vertex '" + name + "'");
      return *v;
    };
    if (tok[0] == "rotator") {
      if (tok.size() < 2) throw ParseError(number, "rotator without a vertex");
      const int v = vertex(tok[1]);
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const auto e = g.find_edge(tok[i]);
        if (!e) throw ParseError(number, "unknown edge '" + tok[i] + "'");
        if (g.edge(*e).u != v && g.edge(*e).v != v) throw ParseError(number, "edge '" + tok[i] + "' is not at the vertex");
        cert.rotation.rotators[static_cast<std::size_t>(v)].push_back({*e, g.edge(*e).u == v ? 0 : 1});
      }
    } else if (tok[0] == "outer") {
      if (tok.size() < 2) throw ParseError(number, "outer without vertices");
      if (tok.size() == 2) {
        cert.outer_darts.push_back({-1, 0});
      } else {
        const int a = vertex(tok[1]);
        const int b = vertex(tok[2]);
        const auto e = g.edge_between(a, b);
        if (!e) throw ParseError(number, "outer face uses a missing edge");
        cert.outer_darts.push_back({*e, g.edge(*e).u == a ? 0 : 1});
        std::vector<int> seq;
        for (std::size_t i = 1; i < tok.size(); ++i) seq.push_back(vertex(tok[i]));
        outer_lines.emplace_back(number, std::move(seq));
      }
    } else if (tok[0] == "forest") {
      in_forest = true;
    } else {
      throw ParseError(number, "unexpected '" + tok[0] + "' in certificate");
    }
  }
  if (!inside) throw ParseError(0, "no certificate section");
  for (int p : cert.parent) {
    if (p == -2) throw ParseError(0, "forest does not list every cycle");
  }
  // an outer face must be spelled out in full; a broken rotation is left to the verifier
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<HalfEdge> r = cert.rotation.rotators[static_cast<std::size_t>(v)];
    std::sort(r.begin(), r.end());
    if (r != g.half_edges_at(v)) return cert;
  }
  const TracedFaces tf = trace_all_faces(g, cert.rotation);
  std::size_t k = 0;
  for (const HalfEdge& d : cert.outer_darts) {
    if (d.edge < 0) continue;
    const auto& [line, seq] = outer_lines[k++];
    const auto& orbit = tf.orbits[static_cast<std::size_t>(tf.orbit_of_dart[static_cast<std::size_t>(d.index())])];
    const auto start = static_cast<std::size_t>(std::find(orbit.begin(), orbit.end(), d) - orbit.begin());
    bool same = orbit.size() == seq.size();
    for (std::size_t i = 0; same && i < seq.size(); ++i) same = g.vertex_of(orbit[(start + i) % orbit.size()]) == seq[i];
    if (!same) throw ParseError(line, "outer face does not match the rotation");
  }
  return cert;
}

namespace {

void format_witness(std::ostream& out, const Graph& lg, const MinorWitness& w) {
  out << "  minor " << to_string(w.target) << '\n';
  for (std::size_t i = 0; i < w.branch_sets.size(); ++i) {
    out << "  branch-set " << i;
    for (int v : w.branch_sets[i]) out << ' ' << lg.vertex_name(v);
    out << '\n';
  }
  const auto& pairs = target_edges(w.target);
  for (std::size_t k = 0; k < w.connecting_edges.size(); ++k) {
    const int e = w.connecting_edges[k];
    out << "  connecting " << pairs[k].first << ' ' << pairs[k].second << ' ' << lg.edge_name(e) << ' '
        << lg.vertex_name(lg.edge(e).u) << ' ' << lg.vertex_name(lg.edge(e).v) << '\n';
  }
}

}  // namespace

std::string format_verdict(const Graph& g, const std::vector<std::string>& cycle_names, const Verdict& verdict) {
  std::ostringstream out;
  out << "verdict " << verdict_name(verdict) << '\n';
  if (const auto* o = std::get_if<Outerspatial>(&verdict)) {
    out << format_certificate(g, cycle_names, o->certificate);
  } else if (const auto* n = std::get_if<NotOuterspatial>(&verdict)) {
    if (const auto* nl = std::get_if<NonOuterplanarLink>(&n->obstruction)) {
      out << "obstruction NonOuterplanarLink\n  path";
      for (int v : nl->path.vertices) out << ' ' << g.vertex_name(v);
      out << "\n  merged-vertex " << merged_vertex_name(g, nl->path) << '\n';
      const Graph& lg = nl->link.graph;
      out << "  link-vertices";
      for (int v = 0; v < lg.vertex_count(); ++v) out << ' ' << lg.vertex_name(v);
      out << '\n';
      for (int e = 0; e < lg.edge_count(); ++e) {
        out << "  link-edge " << lg.edge_name(e) << ' ' << lg.vertex_name(lg.edge(e).u) << ' ' << lg.vertex_name(lg.edge(e).v) << '\n';
      }
      format_witness(out, lg, nl->witness);
    } else if (const auto* as = std::get_if<AsphericalSubcomplex>(&n->obstruction)) {
      out << "obstruction AsphericalSubcomplex\n  faces";
      for (int f : as->faces) out << ' ' << cycle_names[static_cast<std::size_t>(f)];
      out << "\n  surface " << to_string(as->surface.kind) << " euler " << as->surface.euler
          << (as->surface.kind == SurfaceKind::NonOrientable ? " crosscaps " : " genus ") << as->surface.genus << '\n';
    } else {
      const auto& ex = std::get<ExhaustiveRefutation>(n->obstruction);
      out << "obstruction ExhaustiveRefutation\n  systems-examined " << ex.systems_examined << '\n';
    }
  } else {
    out << "detail " << std::get<HypothesisViolated>(verdict).detail << '\n';
  }
  return out.str();
}

std::string format_verdict(const TwoComplex& complex, const Verdict& verdict) {
  return format_verdict(complex.graph(), face_names(complex), verdict);
}

std::string format_surface(const TwoComplex& complex, const SurfaceClass& sc) {
  std::ostringstream out;
  for (std::size_t c = 0; c < sc.components.size(); ++c) {
    const ComponentSurface& s = sc.components[c];
    out << "component " << c << ": " << to_string(s.kind) << " euler " << s.euler;
    if (s.kind == SurfaceKind::Orientable || s.kind == SurfaceKind::Sphere) out << " genus " << s.genus;
    if (s.kind == SurfaceKind::NonOrientable) out << " crosscaps " << s.genus;
    out << " vertices " << s.vertices.size() << " faces " << s.faces.size() << '\n';
  }
  (void)complex;
  return out.str();
}

std::string format_links(const TwoComplex& complex) {
  std::ostringstream out;
  const Graph& g = complex.graph();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const LinkGraph link = link_graph(complex, v);
    const Graph& lg = link.graph;
    const OuterplanarResult op = test_outerplanar(lg);
    out << "link " << g.vertex_name(v) << ": " << lg.vertex_count() << " vertices, " << lg.edge_count() << " edges, "
        << (lg.is_simple() ? "simple" : "not simple") << ", " << (is_2_connected(lg) ? "2-connected" : "not 2-connected")
        << ", " << (op.outerplanar ? "outerplanar" : "not outerplanar") << '\n';
    for (int e = 0; e < lg.edge_count(); ++e) {
      out << "  edge " << lg.edge_name(e) << ' ' << lg.vertex_name(lg.edge(e).u) << ' ' << lg.vertex_name(lg.edge(e).v) << '\n';
    }
    if (op.structure) {
      out << "  boundary";
      for (int x : op.structure->boundary) out << ' ' << lg.vertex_name(x);
      out << "\n  chords";
      for (int e : op.structure->chords) out << ' ' << lg.edge_name(e);
      out << '\n';
    }
    if (op.witness) format_witness(out, lg, *op.witness);
  }
  return out.str();
}

}  // namespace outerspatial
