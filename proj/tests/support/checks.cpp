#include "checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "outerspatial/io.hpp"

namespace outerspatial::support {
namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool connected_within(const Graph& g, const std::vector<int>& set) {
  if (set.empty()) return false;
  const std::set<int> in(set.begin(), set.end());
  std::set<int> seen{set[0]};
  std::vector<int> stack{set[0]};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const HalfEdge& h : g.half_edges_at(v)) {
      const int w = g.opposite(h);
      if (in.count(w) && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == in.size();
}

}  // namespace

bool minor_model_holds(const Graph& g, const MinorWitness& w, std::string* why) {
  const std::size_t sets = w.target == MinorTarget::K4 ? 4 : 5;
  if (w.branch_sets.size() != sets) return fail(why, "wrong number of branch sets");
  std::map<int, int> owner;
  for (std::size_t i = 0; i < sets; ++i) {
    for (int v : w.branch_sets[i]) {
      if (v < 0 || v >= g.vertex_count()) return fail(why, "branch vertex out of range");
      if (!owner.emplace(v, static_cast<int>(i)).second) return fail(why, "branch sets overlap");
    }
    if (!connected_within(g, w.branch_sets[i])) return fail(why, "branch set " + std::to_string(i) + " not connected");
  }
  std::vector<std::pair<int, int>> wanted;
  if (w.target == MinorTarget::K4) {
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) wanted.emplace_back(a, b);
    }
  } else {
    for (int a = 0; a < 2; ++a) {
      for (int b = 2; b < 5; ++b) wanted.emplace_back(a, b);
    }
  }
  if (w.connecting_edges.size() != wanted.size()) return fail(why, "wrong number of connecting edges");
  for (std::size_t k = 0; k < wanted.size(); ++k) {
    const int e = w.connecting_edges[k];
    if (e < 0 || e >= g.edge_count()) return fail(why, "connecting edge out of range");
    const auto a = owner.find(g.edge(e).u);
    const auto b = owner.find(g.edge(e).v);
    if (a == owner.end() || b == owner.end()) return fail(why, "connecting edge leaves the branch sets");
    const std::pair<int, int> got = std::minmax(a->second, b->second);
    if (got != wanted[k]) return fail(why, "connecting edge joins the wrong branch sets");
  }
  return true;
}

int euler_characteristic(const TwoComplex& complex) {
  return complex.vertex_count() - complex.edge_count() + complex.face_count();
}

bool hamilton_face_outerplanar(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !g.is_simple()) return false;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    if (order[1] > order[static_cast<std::size_t>(n - 1)]) continue;  // each cycle once per direction
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    bool hamilton = true;
    for (int i = 0; i < n && hamilton; ++i) {
      hamilton = g.edge_between(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>((i + 1) % n)]).has_value();
    }
    if (!hamilton) continue;
    std::vector<std::pair<int, int>> chords;
    for (const Edge& e : g.edges()) {
      int a = pos[static_cast<std::size_t>(e.u)];
      int b = pos[static_cast<std::size_t>(e.v)];
      if (a > b) std::swap(a, b);
      if (b - a != 1 && !(a == 0 && b == n - 1)) chords.emplace_back(a, b);
    }
    bool clean = true;
    for (std::size_t i = 0; i < chords.size() && clean; ++i) {
      for (std::size_t j = i + 1; j < chords.size() && clean; ++j) {
        const auto [a, b] = chords[i];
        const auto [c, d] = chords[j];
        clean = !((a < c && c < b && b < d) || (c < a && a < d && d < b));
      }
    }
    if (clean) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

bool certificate_holds(const Graph& g, const std::vector<Cycle>& cycles, const NestedCertificate& cert,
                       std::string* why) {
  const int n = g.vertex_count();
  const int darts = 2 * g.edge_count();
  if (static_cast<int>(cert.rotation.rotators.size()) != n) return fail(why, "rotator count");
  // next half-edge around each vertex
  std::vector<int> succ(static_cast<std::size_t>(darts), -1);
  for (int v = 0; v < n; ++v) {
    const auto& rot = cert.rotation.rotators[static_cast<std::size_t>(v)];
    if (static_cast<int>(rot.size()) != g.degree(v)) return fail(why, "rotator size");
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (g.vertex_of(rot[i]) != v || succ[static_cast<std::size_t>(rot[i].index())] != -1) return fail(why, "rotator content");
      succ[static_cast<std::size_t>(rot[i].index())] = rot[(i + 1) % rot.size()].index();
    }
  }
  std::vector<int> face_of(static_cast<std::size_t>(darts), -1);
  int faces = 0;
  for (int d = 0; d < darts; ++d) {
    if (face_of[static_cast<std::size_t>(d)] >= 0) continue;
    for (int x = d; face_of[static_cast<std::size_t>(x)] < 0; x = succ[static_cast<std::size_t>(x ^ 1)]) {
      face_of[static_cast<std::size_t>(x)] = faces;
    }
    ++faces;
  }
  // components by union over edges
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = comps;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const HalfEdge& h : g.half_edges_at(v)) {
        const int w = g.opposite(h);
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = comps;
          stack.push_back(w);
        }
      }
    }
    ++comps;
  }
  std::vector<int> vcount(static_cast<std::size_t>(comps), 0);
  std::vector<int> ecount(static_cast<std::size_t>(comps), 0);
  std::vector<std::set<int>> fset(static_cast<std::size_t>(comps));
  for (int v = 0; v < n; ++v) ++vcount[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
  for (int e = 0; e < g.edge_count(); ++e) {
    const int c = comp[static_cast<std::size_t>(g.edge(e).u)];
    ++ecount[static_cast<std::size_t>(c)];
    fset[static_cast<std::size_t>(c)].insert(face_of[static_cast<std::size_t>(2 * e)]);
    fset[static_cast<std::size_t>(c)].insert(face_of[static_cast<std::size_t>(2 * e + 1)]);
  }
  for (int c = 0; c < comps; ++c) {
    const int f = ecount[static_cast<std::size_t>(c)] == 0 ? 1 : static_cast<int>(fset[static_cast<std::size_t>(c)].size());
    if (vcount[static_cast<std::size_t>(c)] - ecount[static_cast<std::size_t>(c)] + f != 2) return fail(why, "component not spherical");
  }
  if (static_cast<int>(cert.outer_darts.size()) != comps) return fail(why, "outer face count");
  std::vector<int> outer(static_cast<std::size_t>(comps), -1);
  for (int c = 0; c < comps; ++c) {
    const HalfEdge d = cert.outer_darts[static_cast<std::size_t>(c)];
    if (ecount[static_cast<std::size_t>(c)] == 0) {
      if (d.edge >= 0) return fail(why, "outer dart on an isolated vertex");
      continue;
    }
    if (d.edge < 0 || d.edge >= g.edge_count() || comp[static_cast<std::size_t>(g.vertex_of(d))] != c) return fail(why, "outer dart");
    outer[static_cast<std::size_t>(c)] = face_of[static_cast<std::size_t>(d.index())];
  }
  // interiors: faces of the component not reachable from the outer face without crossing the cycle
  std::vector<std::set<int>> inside;
  for (const Cycle& cy : cycles) {
    const std::set<int> cut(cy.edges.begin(), cy.edges.end());
    const int c = comp[static_cast<std::size_t>(cy.vertices.at(0))];
    std::set<int> reach{outer[static_cast<std::size_t>(c)]};
    std::queue<int> q;
    q.push(outer[static_cast<std::size_t>(c)]);
    while (!q.empty()) {
      const int f = q.front();
      q.pop();
      for (int d = 0; d < darts; ++d) {
        if (face_of[static_cast<std::size_t>(d)] != f || cut.count(d / 2)) continue;
        const int other = face_of[static_cast<std::size_t>(d ^ 1)];
        if (reach.insert(other).second) q.push(other);
      }
    }
    std::set<int> in;
    for (int f : fset[static_cast<std::size_t>(c)]) {
      if (!reach.count(f)) in.insert(f);
    }
    if (in.empty()) return fail(why, "cycle with empty interior");
    inside.push_back(in);
  }
  const auto subset = [](const std::set<int>& a, const std::set<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  if (cert.parent.size() != cycles.size()) return fail(why, "forest size");
  for (std::size_t i = 0; i < inside.size(); ++i) {
    int parent = -1;
    for (std::size_t j = 0; j < inside.size(); ++j) {
      if (i == j) continue;
      std::vector<int> common;
      std::set_intersection(inside[i].begin(), inside[i].end(), inside[j].begin(), inside[j].end(), std::back_inserter(common));
      if (!common.empty() && !subset(inside[i], inside[j]) && !subset(inside[j], inside[i])) return fail(why, "interiors cross");
      if (inside[i] != inside[j] && subset(inside[i], inside[j]) &&
          (parent < 0 || inside[j].size() < inside[static_cast<std::size_t>(parent)].size())) {
        parent = static_cast<int>(j);
      }
    }
    if (cert.parent[i] != parent) return fail(why, "parent of cycle " + std::to_string(i));
  }
  return true;
}

bool obstruction_holds(const TwoComplex& complex, const Obstruction& ob, std::string* why) {
  if (const auto* nl = std::get_if<NonOuterplanarLink>(&ob)) {
    const TwoComplex contracted = contract_path(complex, nl->path);
    const int merged = merged_vertex_index(complex, nl->path);
    const LinkGraph link = link_graph(contracted, merged);
    if (!(link.graph == nl->link.graph)) return fail(why, "reported link differs from the recomputed one");
    return minor_model_holds(link.graph, nl->witness, why);
  }
  if (const auto* as = std::get_if<AsphericalSubcomplex>(&ob)) {
    const TwoComplex sub = face_subcomplex(complex, as->faces);
    for (int v = 0; v < sub.vertex_count(); ++v) {
      const Graph lg = link_graph(sub, v).graph;
      // a circle, possibly a digon when the vertex has degree two
      bool cycle = lg.vertex_count() >= 2 && lg.edge_count() == lg.vertex_count() && is_connected(lg);
      for (int x = 0; x < lg.vertex_count() && cycle; ++x) cycle = lg.degree(x) == 2;
      if (!cycle) return fail(why, "link at " + sub.graph().vertex_name(v) + " is not a cycle");
    }
    if (!is_connected(sub.graph())) return fail(why, "subcomplex not connected");
    const int chi = euler_characteristic(sub);
    if (chi == 2) return fail(why, "Euler characteristic 2");
    if (chi != as->surface.euler) return fail(why, "reported Euler characteristic is wrong");
    return true;
  }
  return fail(why, "exhaustive refutations carry nothing to re-check");
}

}  // namespace outerspatial::support
