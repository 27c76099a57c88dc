#include "outerspatial/decider.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace outerspatial {

const char* verdict_name(const Verdict& v) {
  switch (v.index()) {
    case 0: return "Outerspatial";
    case 1: return "NotOuterspatial";
    default: return "HypothesisViolated";
  }
}

namespace {

struct VertexLink {
  LinkGraph link;
  OuterplanarResult outerplanar;
  bool hypothesis_ok = false;  // simple and 2-connected
};

VertexLink analyse_link(const TwoComplex& complex, int v) {
  VertexLink out;
  out.link = link_graph(complex, v);
  out.hypothesis_ok = out.link.graph.is_simple() && is_2_connected(out.link.graph);
  out.outerplanar = test_outerplanar(out.link.graph);
  return out;
}

const OuterplaneStructure& structure_or_throw(const VertexLink& vl, const TwoComplex& complex) {
  if (!vl.outerplanar.structure) {
    throw std::invalid_argument("link at '" + complex.graph().vertex_name(vl.link.host) +
                                "' is not simple, 2-connected and outerplanar");
  }
  return *vl.outerplanar.structure;
}

// Boundary of a 2-outerplane link as edge ids of the complex.
std::vector<int> boundary_edges_of(const VertexLink& vl, const OuterplaneStructure& st) {
  std::vector<int> out;
  for (int lv : st.boundary) out.push_back(vl.link.half_edges[static_cast<std::size_t>(lv)].edge);
  return out;
}

bool face_is_chord_at(const VertexLink& vl, const OuterplaneStructure& st, int face) {
  for (int le = 0; le < vl.link.graph.edge_count(); ++le) {
    if (vl.link.faces[static_cast<std::size_t>(le)] == face && st.is_chord(le)) return true;
  }
  return false;
}

// The other edge of `face` at vertex v, given one edge e of the face at v.
std::optional<int> other_edge_at(const TwoComplex& complex, int face, int v, int e) {
  const Graph& g = complex.graph();
  for (int fe : complex.face_edges(face)) {
    if (fe != e && (g.edge(fe).u == v || g.edge(fe).v == v)) return fe;
  }
  return std::nullopt;
}

std::vector<int> faces_through(const TwoComplex& complex, int edge) {
  std::vector<int> out;
  for (int f = 0; f < complex.face_count(); ++f) {
    const auto es = complex.face_edges(f);
    if (std::find(es.begin(), es.end(), edge) != es.end()) out.push_back(f);
  }
  return out;
}

// The K2,3 of the vertex sum L(u) + L(x) at e = ux: hubs f_u and g_x, with
// paths through f, g and k.
std::optional<MinorWitness> explicit_k23(const TwoComplex& complex, int f, int u, int x, int e, const VertexLink& lu,
                                         const VertexLink& lx, const TwoComplex& contracted, const LinkGraph& merged) {
  const OuterplaneStructure& su = *lu.outerplanar.structure;
  const OuterplaneStructure& sx = *lx.outerplanar.structure;
  const std::vector<int> pu = boundary_edges_of(lu, su);
  const std::vector<int> px = boundary_edges_of(lx, sx);
  const auto at = [](const std::vector<int>& cyc, int edge) {
    return static_cast<int>(std::find(cyc.begin(), cyc.end(), edge) - cyc.begin());
  };
  const int nu = static_cast<int>(pu.size());
  const int nx = static_cast<int>(px.size());
  const int iu = at(pu, e);
  const int ix = at(px, e);
  if (iu == nu || ix == nx) return std::nullopt;

  const auto fu = other_edge_at(complex, f, u, e);
  const auto fx = other_edge_at(complex, f, x, e);
  if (!fu || !fx) return std::nullopt;

  // P_x without e, starting at f_x and ending at k_x.
  std::vector<int> wx;
  const int step_x = px[static_cast<std::size_t>((ix + 1) % nx)] == *fx ? 1 : -1;
  for (int i = 1; i < nx; ++i) wx.push_back(px[static_cast<std::size_t>(((ix + step_x * i) % nx + nx) % nx)]);
  if (wx.front() != *fx) return std::nullopt;
  const int kx = wx.back();

  // g: chord of L(x) at e, boundary edge of L(u), with g_x closest to f_x.
  std::optional<int> g;
  std::size_t g_pos = wx.size();
  std::optional<int> k;
  for (int h : faces_through(complex, e)) {
    const auto hx = other_edge_at(complex, h, x, e);
    if (!hx) continue;
    if (*hx == kx) k = h;
    if (!face_is_chord_at(lx, sx, h) || face_is_chord_at(lu, su, h)) continue;
    const auto pos = static_cast<std::size_t>(std::find(wx.begin(), wx.end(), *hx) - wx.begin());
    if (pos < g_pos) {
      g_pos = pos;
      g = h;
    }
  }
  if (!g || !k || g_pos == 0 || g_pos + 1 >= wx.size()) return std::nullopt;
  const auto gu = other_edge_at(complex, *g, u, e);
  const auto ku = other_edge_at(complex, *k, u, e);
  if (!gu || !ku) return std::nullopt;

  // P_u without e.
  std::vector<int> q;
  for (int i = 1; i < nu; ++i) q.push_back(pu[static_cast<std::size_t>((iu + i) % nu)]);
  const auto qf = static_cast<int>(std::find(q.begin(), q.end(), *fu) - q.begin());
  if (qf == static_cast<int>(q.size())) return std::nullopt;
  int toward_g;
  if (q.front() == *gu) {
    toward_g = -1;
  } else if (q.back() == *gu) {
    toward_g = 1;
  } else {
    return std::nullopt;
  }
  std::vector<int> m2, m3u;
  for (int i = qf + toward_g; i >= 0 && i < static_cast<int>(q.size()); i += toward_g) m2.push_back(q[static_cast<std::size_t>(i)]);
  bool reached_k = false;
  for (int i = qf - toward_g; i >= 0 && i < static_cast<int>(q.size()); i -= toward_g) {
    m3u.push_back(q[static_cast<std::size_t>(i)]);
    if (q[static_cast<std::size_t>(i)] == *ku) {
      reached_k = true;
      break;
    }
  }
  if (!reached_k || m2.empty()) return std::nullopt;

  std::vector<int> m1(wx.begin(), wx.begin() + static_cast<std::ptrdiff_t>(g_pos));
  std::vector<int> m3x(wx.begin() + static_cast<std::ptrdiff_t>(g_pos) + 1, wx.end());

  const Graph& cg = complex.graph();
  const Graph& pg = contracted.graph();
  std::optional<int> missing;
  const auto lv = [&](int complex_edge) {
    const auto id = pg.find_edge(cg.edge_name(complex_edge));
    const auto v = id ? merged.vertex_for_edge(*id) : std::nullopt;
    if (!v) missing = complex_edge;
    return v.value_or(0);
  };
  const auto map_all = [&](const std::vector<int>& es) {
    std::vector<int> out;
    for (int ce : es) out.push_back(lv(ce));
    return out;
  };
  MinorWitness w;
  w.target = MinorTarget::K23;
  std::vector<int> m3 = map_all(m3u);
  for (int v : map_all(m3x)) m3.push_back(v);
  w.branch_sets = {{lv(*fu)}, {lv(wx[g_pos])},
                   map_all(m1), map_all(m2), m3};
  if (missing) return std::nullopt;
  const Graph& lg = merged.graph;
  const auto join = [&](int a, int b) { return lg.edge_between(a, b).value_or(-1); };
  const int a = w.branch_sets[0].front();
  const int b = w.branch_sets[1].front();
  w.connecting_edges = {join(a, w.branch_sets[2].front()), join(a, w.branch_sets[3].front()),
                        join(a, w.branch_sets[4].front()), join(b, w.branch_sets[2].back()),
                        join(b, w.branch_sets[3].back()),  join(b, lv(m3x.front()))};
  if (!verify_witness(lg, w)) return std::nullopt;
  return w;
}

// Link of C/P at the merged vertex with a minor witness, if not outerplanar.
std::optional<NonOuterplanarLink> contracted_link_obstruction(const TwoComplex& complex, const Path& path,
                                                             std::optional<MinorTarget> prefer) {
  const TwoComplex contracted = contract_path(complex, path);
  LinkGraph link = link_graph(contracted, merged_vertex_index(complex, path));
  const OuterplanarResult op = test_outerplanar(link.graph);
  if (op.outerplanar) return std::nullopt;
  MinorWitness w = *op.witness;
  if (prefer && w.target != *prefer) {
    if (auto alt = find_minor(link.graph, *prefer)) w = std::move(*alt);
  }
  return NonOuterplanarLink{path, std::move(link), std::move(w)};
}

}  // namespace

std::vector<ChordalFace> find_chordal_faces(const TwoComplex& complex) {
  std::map<int, std::vector<int>> chord_at;
  for (int v = 0; v < complex.vertex_count(); ++v) {
    const VertexLink vl = analyse_link(complex, v);
    const OuterplaneStructure& st = structure_or_throw(vl, complex);
    for (int le : st.chords) chord_at[vl.link.faces[static_cast<std::size_t>(le)]].push_back(v);
  }
  std::vector<ChordalFace> out;
  for (auto& [f, vs] : chord_at) out.push_back({f, std::move(vs)});
  return out;
}

std::optional<ChordalityFailure> check_perfectly_chordal(const TwoComplex& complex, int face) {
  const std::vector<int> vs = complex.face_vertices(face);
  const std::vector<int> es = complex.face_edges(face);
  const std::size_t n = vs.size();
  std::vector<VertexLink> links;
  std::vector<bool> chord(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    links.push_back(analyse_link(complex, vs[i]));
    chord[i] = face_is_chord_at(links[i], structure_or_throw(links[i], complex), face);
  }
  const auto first = std::find(chord.begin(), chord.end(), true);
  if (first == chord.end()) throw std::invalid_argument("check_perfectly_chordal: face is not chordal");
  const auto start = static_cast<std::size_t>(first - chord.begin());
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = (start + step) % n;
    const std::size_t j = (i + 1) % n;
    if (!chord[i] || chord[j]) continue;
    ChordalityFailure fail{vs[i], vs[j], es[i], std::nullopt};
    const Path path = make_path(complex.graph(), {vs[i], vs[j]});
    const TwoComplex contracted = contract_path(complex, path);
    LinkGraph merged = link_graph(contracted, merged_vertex_index(complex, path));
    if (auto w = explicit_k23(complex, face, vs[i], vs[j], es[i], links[i], links[j], contracted, merged)) {
      fail.obstruction = NonOuterplanarLink{path, std::move(merged), std::move(*w)};
    } else {
      fail.obstruction = contracted_link_obstruction(complex, path, MinorTarget::K23);
    }
    return fail;
  }
  return std::nullopt;
}

namespace {

// Rotation system read off a complex whose every link is a cycle: orient the
// faces consistently and let each face corner give a rotator step.
std::optional<RotationSystem> rotation_from_surface(const TwoComplex& d) {
  const auto signs = orient_faces(d);
  if (!signs) return std::nullopt;
  const Graph& g = d.graph();
  std::vector<int> rsucc(static_cast<std::size_t>(2 * g.edge_count()), -1);
  for (int f = 0; f < d.face_count(); ++f) {
    std::vector<HalfEdge> darts = d.face(f).boundary;
    if ((*signs)[static_cast<std::size_t>(f)] < 0) {
      std::reverse(darts.begin(), darts.end());
      for (HalfEdge& h : darts) h = h.twin();
    }
    for (std::size_t i = 0; i < darts.size(); ++i) {
      int& slot = rsucc[static_cast<std::size_t>(darts[i].twin().index())];
      if (slot != -1) return std::nullopt;
      slot = darts[(i + 1) % darts.size()].index();
    }
  }
  RotationSystem rot;
  rot.rotators.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& hs = g.half_edges_at(v);
    if (hs.empty()) continue;
    HalfEdge h = hs.front();
    do {
      rot.rotators[static_cast<std::size_t>(v)].push_back(h);
      const int next = rsucc[static_cast<std::size_t>(h.index())];
      if (next == -1) return std::nullopt;
      h = HalfEdge::from_index(next);
    } while (h != hs.front() && rot.rotators[static_cast<std::size_t>(v)].size() <= hs.size());
    if (rot.rotators[static_cast<std::size_t>(v)].size() != hs.size()) return std::nullopt;
  }
  return rot;
}

// Subpaths p' of c2 between consecutive edges lying on different sides of
// c1, in order of the scan starting at c2's first edge off c1.
std::vector<Path> transversal_paths(const Graph& g, const TracedFaces& tf, const Cycle& c1, const Cycle& c2) {
  const auto [side_a, side_b] = cycle_sides(g, tf, c1);
  (void)side_b;
  std::set<int> on_c1(c1.edges.begin(), c1.edges.end());
  const std::size_t n = c2.edges.size();
  std::vector<int> side(n, -1);  // -1 on c1, 0 first side, 1 second side
  for (std::size_t i = 0; i < n; ++i) {
    const int e = c2.edges[i];
    if (on_c1.count(e)) continue;
    side[i] = side_a.test(static_cast<std::size_t>(tf.orbit_of_dart[static_cast<std::size_t>(2 * e)])) ? 0 : 1;
  }
  std::vector<Path> out;
  const auto first = std::find_if(side.begin(), side.end(), [](int s) { return s != -1; });
  if (first == side.end()) return out;
  const auto start = static_cast<std::size_t>(first - side.begin());
  std::size_t last_off = start;
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t i = (start + step) % n;
    if (side[i] == -1) continue;
    if (side[i] != side[last_off]) {
      // Edges strictly between last_off and i lie on c1; the path runs from
      // the vertex after last_off to the vertex before i.
      Path p;
      std::size_t at = (last_off + 1) % n;
      p.vertices.push_back(c2.vertices[at]);
      while (at != i) {
        p.edges.push_back(c2.edges[at]);
        at = (at + 1) % n;
        p.vertices.push_back(c2.vertices[at]);
      }
      out.push_back(std::move(p));
    }
    last_off = i;
  }
  return out;
}

std::optional<NonOuterplanarLink> crossing_obstruction(const TwoComplex& complex, const TracedFaces& tf,
                                                       const std::vector<Cycle>& cycles, int i, int j) {
  const Graph& g = complex.graph();
  for (const auto& [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
    for (const Path& p : transversal_paths(g, tf, cycles[static_cast<std::size_t>(a)], cycles[static_cast<std::size_t>(b)])) {
      auto ob = contracted_link_obstruction(complex, p, MinorTarget::K4);
      if (ob && verify_obstruction(complex, Obstruction{*ob})) return ob;
    }
  }
  return std::nullopt;
}

Verdict checked(const TwoComplex& complex, Verdict v) {
  std::string why;
  if (const auto* o = std::get_if<Outerspatial>(&v)) {
    if (!verify_certificate(complex, o->certificate, &why)) throw std::logic_error("certificate failed verification: " + why);
  } else if (const auto* n = std::get_if<NotOuterspatial>(&v)) {
    if (!verify_obstruction(complex, n->obstruction, &why)) throw std::logic_error("obstruction failed verification: " + why);
  }
  return v;
}

std::optional<Verdict> aspherical_component(const TwoComplex& complex, const TwoComplex& part) {
  const SurfaceClass sc = classify_surface(part);
  for (const ComponentSurface& s : sc.components) {
    if (s.kind == SurfaceKind::NotASurface || s.kind == SurfaceKind::Sphere) continue;
    AsphericalSubcomplex ob;
    ob.surface = s;
    for (int f : s.faces) ob.faces.push_back(*complex.find_face(part.face(f).name));
    std::sort(ob.faces.begin(), ob.faces.end());
    ob.surface.faces = ob.faces;
    ob.surface.vertices.clear();
    for (int v : s.vertices) ob.surface.vertices.push_back(*complex.graph().find_vertex(part.graph().vertex_name(v)));
    return NotOuterspatial{std::move(ob)};
  }
  return std::nullopt;
}

std::optional<Verdict> certificate_from(const TwoComplex& complex, const RotationSystem& rot) {
  try {
    NestedCertificate cert = make_certificate(complex.graph(), face_cycles(complex), rot);
    if (verify_certificate(complex, cert)) return Outerspatial{std::move(cert)};
  } catch (const std::invalid_argument&) {
  }
  return std::nullopt;
}

}  // namespace

Verdict decide_outerspatial(const TwoComplex& complex, const DecideOptions& options) {
  if (const auto diags = validate(complex); !diags.empty()) {
    throw std::invalid_argument("decide_outerspatial: invalid complex: " + diags.front().message);
  }
  const Graph& g = complex.graph();

  if (options.triangle_fast_path) {
    const bool triangles = std::all_of(complex.faces().begin(), complex.faces().end(),
                                       [](const Face& f) { return f.boundary.size() == 3; });
    if (triangles) {
      const PlanarityResult pr = test_planar(g);
      if (pr.planar) {
        if (auto v = certificate_from(complex, pr.rotation)) return checked(complex, std::move(*v));
      }
    }
  }

  std::vector<std::string> violations;
  std::vector<VertexLink> links;
  for (int v = 0; v < g.vertex_count(); ++v) {
    links.push_back(analyse_link(complex, v));
    const VertexLink& vl = links.back();
    if (!vl.outerplanar.outerplanar) {
      return checked(complex, NotOuterspatial{NonOuterplanarLink{make_path(g, {v}), vl.link, *vl.outerplanar.witness}});
    }
    if (!vl.hypothesis_ok) {
      violations.push_back("link at '" + g.vertex_name(v) + "' is not " +
                           (vl.link.graph.is_simple() ? "2-connected" : "simple"));
    }
  }

  if (!violations.empty()) {
    std::string detail;
    for (const auto& s : violations) detail += (detail.empty() ? "" : "; ") + s;
    const PlanarityResult pr = test_planar(g);
    if (pr.planar) {
      if (auto v = certificate_from(complex, pr.rotation)) return checked(complex, std::move(*v));
    }
    if (auto v = aspherical_component(complex, complex)) return checked(complex, std::move(*v));
    return HypothesisViolated{detail};
  }

  // Chordal faces must be chords at every vertex.
  std::set<int> chordal;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const OuterplaneStructure& st = *links[static_cast<std::size_t>(v)].outerplanar.structure;
    for (int le : st.chords) chordal.insert(links[static_cast<std::size_t>(v)].link.faces[static_cast<std::size_t>(le)]);
  }
  for (int f : chordal) {
    const auto fail = check_perfectly_chordal(complex, f);
    if (!fail) continue;
    if (fail->obstruction) return checked(complex, NotOuterspatial{*fail->obstruction});
    return HypothesisViolated{"face '" + complex.face(f).name + "' is a chord at '" + g.vertex_name(fail->u) +
                              "' but not at '" + g.vertex_name(fail->x) + "', and the link of the contraction is outerplanar"};
  }

  // Without the chordal faces every link is a cycle.
  const TwoComplex d = delete_faces(complex, chordal);
  if (d.vertex_count() != g.vertex_count() || d.edge_count() != g.edge_count()) {
    return HypothesisViolated{"removing the chordal faces removes part of the skeleton"};
  }
  const std::vector<bool> closed = is_closed_surface(d);
  if (std::find(closed.begin(), closed.end(), false) != closed.end()) {
    return HypothesisViolated{"removing the chordal faces does not leave a closed surface"};
  }
  if (auto v = aspherical_component(complex, d)) return checked(complex, std::move(*v));

  const auto rot = rotation_from_surface(d);
  if (!rot) throw std::logic_error("decide_outerspatial: sphere without a consistent orientation");
  const TracedFaces tf = trace_all_faces(g, *rot);
  const std::vector<Cycle> cycles = face_cycles(complex);
  const NestingResult nr = nesting_forest(g, tf, cycles);
  if (std::holds_alternative<NestingForest>(nr)) {
    if (auto v = certificate_from(complex, *rot)) return checked(complex, std::move(*v));
    throw std::logic_error("decide_outerspatial: nested embedding did not certify");
  }
  const CrossingPair cp = std::get<CrossingPair>(nr);
  if (auto ob = crossing_obstruction(complex, tf, cycles, cp.first, cp.second)) return checked(complex, NotOuterspatial{*ob});
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(cycles.size()); ++j) {
      if (!cycles_cross(g, tf, cycles[static_cast<std::size_t>(i)], cycles[static_cast<std::size_t>(j)])) continue;
      if (auto ob = crossing_obstruction(complex, tf, cycles, i, j)) return checked(complex, NotOuterspatial{*ob});
    }
  }
  return HypothesisViolated{"face boundaries '" + complex.face(cp.first).name + "' and '" + complex.face(cp.second).name +
                            "' cross, and no contraction along them gives a non-outerplanar link"};
}

Verdict decide_nested_plane(const Graph& g, const std::vector<Cycle>& cycles, double cap) {
  if (!g.is_simple()) throw std::invalid_argument("decide_nested_plane: graph is not simple");
  for (const Cycle& c : cycles) {
    if (!is_genuine_cycle(g, c)) throw std::invalid_argument("decide_nested_plane: not a cycle of the graph");
  }
  const TwoComplex complex = associated_complex(g, cycles);
  if (const auto diags = validate(complex); !diags.empty()) {
    throw std::invalid_argument("decide_nested_plane: " + diags.front().message);
  }
  Verdict v = decide_outerspatial(complex);
  auto* hv = std::get_if<HypothesisViolated>(&v);
  if (hv == nullptr) return v;
  try {
    const NestedSearch found = brute_force_nested(g, cycles, cap);
    if (found.certificate) return checked(complex, Outerspatial{*found.certificate});
    return NotOuterspatial{ExhaustiveRefutation{found.systems_examined}};
  } catch (const CapExceeded& e) {
    hv->detail += "; oracle fallback refused: " + std::string(e.what());
  }
  return v;
}

bool verify_obstruction(const TwoComplex& complex, const Obstruction& obstruction, std::string* why, double cap) {
  const auto fail = [&](std::string reason) {
    if (why != nullptr) *why = std::move(reason);
    return false;
  };
  if (const auto* nl = std::get_if<NonOuterplanarLink>(&obstruction)) {
    TwoComplex contracted;
    int merged = -1;
    try {
      contracted = contract_path(complex, nl->path);
      merged = merged_vertex_index(complex, nl->path);
    } catch (const std::exception& e) {
      return fail(std::string("path: ") + e.what());
    }
    const LinkGraph link = link_graph(contracted, merged);
    const Graph& a = link.graph;
    const Graph& b = nl->link.graph;
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return fail("link size differs");
    for (int v = 0; v < a.vertex_count(); ++v) {
      if (a.vertex_name(v) != b.vertex_name(v)) return fail("link vertices differ");
    }
    for (int e = 0; e < a.edge_count(); ++e) {
      if (a.edge_name(e) != b.edge_name(e) || a.edge(e).u != b.edge(e).u || a.edge(e).v != b.edge(e).v) return fail("link edges differ");
    }
    if (!verify_witness(a, nl->witness)) return fail("minor witness does not verify");
    return true;
  }
  if (const auto* as = std::get_if<AsphericalSubcomplex>(&obstruction)) {
    if (as->faces.empty()) return fail("empty face set");
    for (int f : as->faces) {
      if (f < 0 || f >= complex.face_count()) return fail("unknown face");
    }
    const SurfaceClass sc = classify_surface(face_subcomplex(complex, as->faces));
    if (sc.components.size() != 1) return fail("faces do not form one component");
    const ComponentSurface& s = sc.components.front();
    if (s.kind == SurfaceKind::NotASurface) return fail("faces do not form a closed surface");
    if (s.euler == 2) return fail("faces form a sphere");
    if (s.kind != as->surface.kind || s.euler != as->surface.euler || s.genus != as->surface.genus) {
      return fail("recorded classification differs");
    }
    return true;
  }
  const auto& ex = std::get<ExhaustiveRefutation>(obstruction);
  try {
    const NestedSearch found = brute_force_outerspatial(complex, cap);
    if (found.certificate) return fail("the oracle finds a nested embedding");
    if (found.systems_examined != ex.systems_examined) return fail("systems examined differ");
  } catch (const CapExceeded& e) {
    return fail(e.what());
  }
  return true;
}

}  // namespace outerspatial
