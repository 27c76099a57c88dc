#include "outerspatial/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "outerspatial/outerplanar.hpp"

namespace outerspatial {
namespace {

constexpr double kBox = 320.0;
constexpr double kRadius = 130.0;
constexpr int kRelaxRounds = 500;

struct Point {
  double x = 0;
  double y = 0;
};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string escaped(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void place_on_circle(const std::vector<int>& ring, Point centre, std::vector<Point>& pos) {
  const double n = static_cast<double>(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / n - std::numbers::pi / 2;
    pos[static_cast<std::size_t>(ring[i])] = {centre.x + kRadius * std::cos(a), centre.y + kRadius * std::sin(a)};
  }
}

std::string draw(const Graph& g, const std::vector<Point>& pos, int components, RenderFormat format,
                 const std::string& title) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  if (format == RenderFormat::Dot) {
    out << "graph " << quoted(title) << " {\n  layout=neato;\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
      const Point p = pos[static_cast<std::size_t>(v)];
      // neato takes points with y growing upwards
      out << "  " << quoted(g.vertex_name(v)) << " [pos=\"" << p.x / 72 << ',' << (kBox - p.y) / 72 << "!\"];\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      out << "  " << quoted(g.vertex_name(g.edge(e).u)) << " -- " << quoted(g.vertex_name(g.edge(e).v))
          << " [label=" << quoted(g.edge_name(e)) << "];\n";
    }
    out << "}\n";
    return out.str();
  }
  const double width = kBox * std::max(components, 1);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << kBox
      << "\" viewBox=\"0 0 " << width << ' ' << kBox << "\">\n"
      << "  <title>" << escaped(title) << "</title>\n"
      << "  <g stroke=\"black\" stroke-width=\"1.5\">\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    const Point a = pos[static_cast<std::size_t>(g.edge(e).u)];
    const Point b = pos[static_cast<std::size_t>(g.edge(e).v)];
    out << "    <line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y << "\"><title>"
        << escaped(g.edge_name(e)) << "</title></line>\n";
  }
  out << "  </g>\n  <g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Point p = pos[static_cast<std::size_t>(v)];
    out << "    <circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"9\" fill=\"white\" stroke=\"black\"/>\n"
        << "    <text x=\"" << p.x << "\" y=\"" << p.y + 4 << "\">" << escaped(g.vertex_name(v)) << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace

std::string render_embedding(const Graph& g, const NestedCertificate& cert, RenderFormat format) {
  const TracedFaces tf = trace_all_faces(g, cert.rotation);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Point> pos(n);
  std::vector<bool> fixed(n, false);
  for (int c = 0; c < tf.component_count; ++c) {
    const Point centre{kBox * c + kBox / 2, kBox / 2};
    std::vector<int> ring;
    const HalfEdge d = c < static_cast<int>(cert.outer_darts.size()) ? cert.outer_darts[static_cast<std::size_t>(c)]
                                                                     : HalfEdge{-1, 0};
    if (d.edge >= 0) {
      const auto& orbit = tf.orbits[static_cast<std::size_t>(tf.orbit_of_dart[static_cast<std::size_t>(d.index())])];
      const auto start = static_cast<std::size_t>(std::find(orbit.begin(), orbit.end(), d) - orbit.begin());
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        const int v = g.vertex_of(orbit[(start + i) % orbit.size()]);
        if (std::find(ring.begin(), ring.end(), v) == ring.end()) ring.push_back(v);
      }
    }
    std::vector<int> members;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (tf.vertex_component[static_cast<std::size_t>(v)] == c) members.push_back(v);
    }
    if (ring.size() < 3) ring = members;
    if (ring.size() == 1) {
      pos[static_cast<std::size_t>(ring[0])] = centre;
    } else {
      place_on_circle(ring, centre, pos);
    }
    for (int v : ring) fixed[static_cast<std::size_t>(v)] = true;
    for (int v : members) {
      if (!fixed[static_cast<std::size_t>(v)]) pos[static_cast<std::size_t>(v)] = centre;
    }
  }
  for (int round = 0; round < kRelaxRounds; ++round) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (fixed[static_cast<std::size_t>(v)]) continue;
      Point sum;
      int deg = 0;
      for (const HalfEdge& h : g.half_edges_at(v)) {
        const Point p = pos[static_cast<std::size_t>(g.vertex_of(h.twin()))];
        sum.x += p.x;
        sum.y += p.y;
        ++deg;
      }
      if (deg > 0) pos[static_cast<std::size_t>(v)] = {sum.x / deg, sum.y / deg};
    }
  }
  return draw(g, pos, tf.component_count, format, "embedding");
}

std::string render_link(const LinkGraph& link, RenderFormat format) {
  const Graph& lg = link.graph;
  std::vector<int> ring;
  if (const OuterplanarResult op = test_outerplanar(lg); op.structure) {
    ring = op.structure->boundary;
  } else {
    for (int v = 0; v < lg.vertex_count(); ++v) ring.push_back(v);
  }
  std::vector<Point> pos(static_cast<std::size_t>(lg.vertex_count()));
  if (!ring.empty()) place_on_circle(ring, {kBox / 2, kBox / 2}, pos);
  return draw(lg, pos, 1, format, "link");
}

}  // namespace outerspatial
