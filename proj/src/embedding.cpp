#include "outerspatial/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace outerspatial {

bool RotationSystem::is_valid_for(const Graph& g) const {
  if (rotators.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  std::vector<bool> seen(static_cast<std::size_t>(2 * g.edge_count()), false);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = rotators[static_cast<std::size_t>(v)];
    if (rot.size() != g.half_edges_at(v).size()) return false;
    for (const HalfEdge& h : rot) {
      if (h.edge < 0 || h.edge >= g.edge_count() || (h.end != 0 && h.end != 1)) return false;
      if (g.vertex_of(h) != v) return false;
      const auto slot = static_cast<std::size_t>(h.index());
      if (seen[slot]) return false;
      seen[slot] = true;
    }
  }
  return true;
}

std::vector<int> RotationSystem::successor_table(const Graph& g) const {
  std::vector<int> next(static_cast<std::size_t>(2 * g.edge_count()), -1);
  for (const auto& rot : rotators) {
    for (std::size_t i = 0; i < rot.size(); ++i) {
      next[static_cast<std::size_t>(rot[i].index())] = rot[(i + 1) % rot.size()].index();
    }
  }
  return next;
}

RotationSystem RotationSystem::normalized() const {
  RotationSystem out = *this;
  for (auto& rot : out.rotators) {
    if (rot.empty()) continue;
    std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
  }
  return out;
}

bool TracedFaces::spherical() const {
  return std::all_of(genus.begin(), genus.end(), [](int g) { return g == 0; });
}

TracedFaces trace_all_faces(const Graph& g, const RotationSystem& rot) {
  if (!rot.is_valid_for(g)) throw std::invalid_argument("trace_faces: rotation system does not match the graph");
  TracedFaces tf;
  tf.vertex_component = connected_components(g, &tf.component_count);
  const std::vector<int> next = rot.successor_table(g);
  const int darts = 2 * g.edge_count();
  tf.orbit_of_dart.assign(static_cast<std::size_t>(darts), -1);
  for (int start = 0; start < darts; ++start) {
    if (tf.orbit_of_dart[static_cast<std::size_t>(start)] != -1) continue;
    const int id = tf.orbit_count();
    std::vector<HalfEdge> orbit;
    int d = start;
    do {
      tf.orbit_of_dart[static_cast<std::size_t>(d)] = id;
      orbit.push_back(HalfEdge::from_index(d));
      d = next[static_cast<std::size_t>(d ^ 1)];
    } while (d != start);
    tf.orbits.push_back(std::move(orbit));
    tf.orbit_component.push_back(tf.vertex_component[static_cast<std::size_t>(g.vertex_of(HalfEdge::from_index(start)))]);
  }
  const auto nc = static_cast<std::size_t>(tf.component_count);
  std::vector<int> vertices(nc, 0), edges(nc, 0), faces(nc, 0);
  for (int v = 0; v < g.vertex_count(); ++v) ++vertices[static_cast<std::size_t>(tf.vertex_component[static_cast<std::size_t>(v)])];
  for (const Edge& e : g.edges()) ++edges[static_cast<std::size_t>(tf.vertex_component[static_cast<std::size_t>(e.u)])];
  for (int c : tf.orbit_component) ++faces[static_cast<std::size_t>(c)];
  tf.genus.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    // An isolated vertex has no darts but bounds one face.
    const int f = edges[c] == 0 ? 1 : faces[c];
    const int twice = 2 - vertices[c] + edges[c] - f;
    if (twice < 0 || twice % 2 != 0) throw std::logic_error("trace_faces: Euler count is not 2 - 2g");
    tf.genus[c] = twice / 2;
  }
  return tf;
}

TracedFaces trace_faces(const Graph& g, const RotationSystem& rot) {
  if (!is_connected(g)) throw std::invalid_argument("trace_faces: graph is disconnected");
  return trace_all_faces(g, rot);
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

PlanarityResult test_planar(const Graph& g) {
  PlanarityResult result;
  const int n = g.vertex_count();

  // Boyer-Myrvold runs on the simple underlying graph; loops and parallel
  // copies are threaded back in afterwards next to their representative.
  BoostGraph bg(static_cast<std::size_t>(n));
  std::vector<int> representative;  // simple edge -> graph edge
  std::map<std::pair<int, int>, int> simple_of;
  std::vector<int> parallel_to(static_cast<std::size_t>(g.edge_count()), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) continue;
    const auto key = std::minmax(ed.u, ed.v);
    const auto it = simple_of.find(key);
    if (it != simple_of.end()) {
      parallel_to[static_cast<std::size_t>(e)] = representative[static_cast<std::size_t>(it->second)];
      continue;
    }
    const int idx = static_cast<int>(representative.size());
    simple_of.emplace(key, idx);
    representative.push_back(e);
    const auto [be, ok] = boost::add_edge(static_cast<std::size_t>(ed.u), static_cast<std::size_t>(ed.v), bg);
    boost::put(boost::edge_index, bg, be, idx);
  }

  std::vector<std::vector<BoostEdge>> embedding(static_cast<std::size_t>(n));
  result.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
  if (!result.planar) {
    std::vector<BoostEdge> kuratowski;
    boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    for (const BoostEdge& be : kuratowski) {
      result.kuratowski_edges.push_back(representative[static_cast<std::size_t>(boost::get(boost::edge_index, bg, be))]);
    }
    std::sort(result.kuratowski_edges.begin(), result.kuratowski_edges.end());
    return result;
  }

  result.rotation.rotators.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& rot = result.rotation.rotators[static_cast<std::size_t>(v)];
    for (const BoostEdge& be : embedding[static_cast<std::size_t>(v)]) {
      const int e = representative[static_cast<std::size_t>(boost::get(boost::edge_index, bg, be))];
      rot.push_back({e, g.edge(e).u == v ? 0 : 1});
    }
  }
  // A parallel copy goes right after its representative at u and right
  // before it at v, bounding a digon; a loop's two halves sit side by side.
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    auto& at_u = result.rotation.rotators[static_cast<std::size_t>(ed.u)];
    if (ed.u == ed.v) {
      at_u.push_back({e, 0});
      at_u.push_back({e, 1});
      continue;
    }
    const int rep = parallel_to[static_cast<std::size_t>(e)];
    if (rep == -1) continue;
    auto& at_v = result.rotation.rotators[static_cast<std::size_t>(ed.v)];
    const HalfEdge rep_u{rep, g.edge(rep).u == ed.u ? 0 : 1};
    const HalfEdge rep_v = rep_u.twin();
    at_u.insert(std::find(at_u.begin(), at_u.end(), rep_u) + 1, HalfEdge{e, 0});
    at_v.insert(std::find(at_v.begin(), at_v.end(), rep_v), HalfEdge{e, 1});
  }
  result.rotation = result.rotation.normalized();
  return result;
}

bool is_2_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || g.has_loops() || !is_connected(g)) return false;
  // Iterative lowpoint DFS; parent edges are skipped by id so parallel
  // edges count as back edges.
  std::vector<int> order(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, -1, 0}};
  order[0] = low[0] = 0;
  int counter = 1;
  int root_children = 0;
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const auto& inc = g.half_edges_at(fr.v);
    if (fr.next < inc.size()) {
      const HalfEdge h = inc[fr.next++];
      if (h.edge == fr.parent_edge) continue;
      const int w = g.opposite(h);
      if (order[static_cast<std::size_t>(w)] == -1) {
        order[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
        if (fr.v == 0) ++root_children;
        stack.push_back({w, h.edge, 0});
      } else {
        low[static_cast<std::size_t>(fr.v)] = std::min(low[static_cast<std::size_t>(fr.v)], order[static_cast<std::size_t>(w)]);
      }
      continue;
    }
    const int v = fr.v;
    stack.pop_back();
    if (stack.empty()) break;
    const int u = stack.back().v;
    low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
    if (u != 0 && low[static_cast<std::size_t>(v)] >= order[static_cast<std::size_t>(u)]) return false;
  }
  return root_children <= 1;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

std::pair<FaceSet, FaceSet> cycle_sides(const Graph& g, const TracedFaces& tf, const Cycle& c) {
  if (!is_genuine_cycle(g, c)) throw std::invalid_argument("cycle_sides: not a cycle of the graph");
  const int comp = tf.vertex_component.at(static_cast<std::size_t>(c.vertices.front()));
  if (tf.genus.at(static_cast<std::size_t>(comp)) != 0) throw std::invalid_argument("cycle_sides: tracing is not genus 0");

  std::vector<bool> on_cycle(static_cast<std::size_t>(g.edge_count()), false);
  for (int e : c.edges) on_cycle[static_cast<std::size_t>(e)] = true;
  std::vector<int> parent(static_cast<std::size_t>(tf.orbit_count()));
  std::iota(parent.begin(), parent.end(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (on_cycle[static_cast<std::size_t>(e)]) continue;
    if (tf.vertex_component[static_cast<std::size_t>(g.edge(e).u)] != comp) continue;
    const int a = find_root(parent, tf.orbit_of_dart[static_cast<std::size_t>(2 * e)]);
    const int b = find_root(parent, tf.orbit_of_dart[static_cast<std::size_t>(2 * e + 1)]);
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  FaceSet first = tf.empty_set();
  FaceSet second = tf.empty_set();
  int first_root = -1;
  int second_root = -1;
  for (int o = 0; o < tf.orbit_count(); ++o) {
    if (tf.orbit_component[static_cast<std::size_t>(o)] != comp) continue;
    const int r = find_root(parent, o);
    if (first_root == -1 || r == first_root) {
      first_root = r;
      first.set(static_cast<std::size_t>(o));
    } else if (second_root == -1 || r == second_root) {
      second_root = r;
      second.set(static_cast<std::size_t>(o));
    } else {
      throw std::logic_error("cycle_sides: more than two sides in a genus-0 tracing");
    }
  }
  if (second_root == -1) throw std::logic_error("cycle_sides: cycle does not separate a genus-0 tracing");
  return {std::move(first), std::move(second)};
}

bool cycles_cross(const Graph& g, const TracedFaces& tf, const Cycle& c1, const Cycle& c2) {
  const int comp1 = tf.vertex_component.at(static_cast<std::size_t>(c1.vertices.front()));
  const int comp2 = tf.vertex_component.at(static_cast<std::size_t>(c2.vertices.front()));
  if (comp1 != comp2) return false;
  const auto [a, a2] = cycle_sides(g, tf, c1);
  const auto [b, b2] = cycle_sides(g, tf, c2);
  return !(a.is_subset_of(b) || a.is_subset_of(b2) || a2.is_subset_of(b) || a2.is_subset_of(b2));
}

namespace {

std::vector<int> containment_parents(const std::vector<FaceSet>& interiors, const std::vector<int>& component) {
  const std::size_t n = interiors.size();
  std::vector<int> parent(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best_size = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || component[i] != component[j]) continue;
      if (!interiors[i].is_subset_of(interiors[j])) continue;
      // Equal interiors only arise for repeated cycles; the earlier one wins.
      if (interiors[i] == interiors[j] && j > i) continue;
      const std::size_t size = interiors[j].count();
      if (parent[i] == -1 || size < best_size) {
        parent[i] = static_cast<int>(j);
        best_size = size;
      }
    }
  }
  return parent;
}

}  // namespace

NestingForest nesting_with_outer(const Graph& g, const TracedFaces& tf, const std::vector<Cycle>& cycles,
                                 const std::vector<int>& outer_orbits) {
  NestingForest forest;
  forest.outer_orbits = outer_orbits;
  std::vector<int> component;
  for (const Cycle& c : cycles) {
    const int comp = tf.vertex_component.at(static_cast<std::size_t>(c.vertices.front()));
    auto [a, b] = cycle_sides(g, tf, c);
    const int outer = outer_orbits.at(static_cast<std::size_t>(comp));
    if (outer < 0) throw std::invalid_argument("nesting: component without an outer face");
    forest.interiors.push_back(a.test(static_cast<std::size_t>(outer)) ? std::move(b) : std::move(a));
    component.push_back(comp);
  }
  forest.parent = containment_parents(forest.interiors, component);
  return forest;
}

NestingResult nesting_forest(const Graph& g, const TracedFaces& tf, const std::vector<Cycle>& cycles) {
  std::vector<std::pair<FaceSet, FaceSet>> sides;
  std::vector<int> component;
  sides.reserve(cycles.size());
  for (const Cycle& c : cycles) {
    sides.push_back(cycle_sides(g, tf, c));
    component.push_back(tf.vertex_component.at(static_cast<std::size_t>(c.vertices.front())));
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (component[i] != component[j]) continue;
      const auto& [a, a2] = sides[i];
      const auto& [b, b2] = sides[j];
      if (!(a.is_subset_of(b) || a.is_subset_of(b2) || a2.is_subset_of(b) || a2.is_subset_of(b2))) {
        return CrossingPair{static_cast<int>(i), static_cast<int>(j)};
      }
    }
  }
  std::vector<int> outer(static_cast<std::size_t>(tf.component_count), -1);
  for (int o = tf.orbit_count() - 1; o >= 0; --o) outer[static_cast<std::size_t>(tf.orbit_component[static_cast<std::size_t>(o)])] = o;
  NestingForest forest;
  forest.outer_orbits = outer;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const int o = outer[static_cast<std::size_t>(component[i])];
    auto& [a, b] = sides[i];
    forest.interiors.push_back(a.test(static_cast<std::size_t>(o)) ? b : a);
  }
  forest.parent = containment_parents(forest.interiors, component);
  return forest;
}

bool is_laminar(const std::vector<FaceSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i].intersects(sets[j]) && !sets[i].is_subset_of(sets[j]) && !sets[j].is_subset_of(sets[i])) return false;
    }
  }
  return true;
}

}  // namespace outerspatial
