#include "outerspatial/outerplanar.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

#include "outerspatial/embedding.hpp"

namespace outerspatial {

const char* to_string(MinorTarget target) { return target == MinorTarget::K4 ? "K4" : "K2,3"; }

const std::vector<std::pair<int, int>>& target_edges(MinorTarget target) {
  static const std::vector<std::pair<int, int>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  static const std::vector<std::pair<int, int>> k23{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
  return target == MinorTarget::K4 ? k4 : k23;
}

bool verify_witness(const Graph& g, const MinorWitness& w) {
  const std::size_t sets = w.target == MinorTarget::K4 ? 4 : 5;
  const auto& pairs = target_edges(w.target);
  if (w.branch_sets.size() != sets || w.connecting_edges.size() != pairs.size()) return false;
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < sets; ++i) {
    if (w.branch_sets[i].empty()) return false;
    for (int v : w.branch_sets[i]) {
      if (v < 0 || v >= g.vertex_count() || owner[static_cast<std::size_t>(v)] != -1) return false;
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < sets; ++i) {
    const auto& set = w.branch_sets[i];
    std::set<int> reached{set.front()};
    std::vector<int> stack{set.front()};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const HalfEdge& h : g.half_edges_at(v)) {
        const int x = g.opposite(h);
        if (owner[static_cast<std::size_t>(x)] == static_cast<int>(i) && reached.insert(x).second) stack.push_back(x);
      }
    }
    if (reached.size() != set.size()) return false;
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const int e = w.connecting_edges[k];
    if (e < 0 || e >= g.edge_count()) return false;
    const int a = owner[static_cast<std::size_t>(g.edge(e).u)];
    const int b = owner[static_cast<std::size_t>(g.edge(e).v)];
    const auto [i, j] = pairs[k];
    if (!((a == i && b == j) || (a == j && b == i))) return false;
  }
  return true;
}

namespace {

using Adjacency = std::vector<std::set<int>>;

Adjacency simple_adjacency(const Graph& g) {
  Adjacency adj(static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  return adj;
}

// Series-parallel reduction: a graph is K4-minor-free iff deleting vertices
// of degree <= 1 and suppressing vertices of degree 2 empties it.
bool adjacency_has_k4(Adjacency adj) {
  const std::size_t n = adj.size();
  std::vector<bool> alive(n, true);
  std::deque<int> queue;
  for (std::size_t v = 0; v < n; ++v) queue.push_back(static_cast<int>(v));
  while (!queue.empty()) {
    const auto v = static_cast<std::size_t>(queue.front());
    queue.pop_front();
    if (!alive[v]) continue;
    const std::size_t d = adj[v].size();
    if (d > 2) continue;
    std::vector<int> nbrs(adj[v].begin(), adj[v].end());
    alive[v] = false;
    adj[v].clear();
    for (int x : nbrs) {
      adj[static_cast<std::size_t>(x)].erase(static_cast<int>(v));
      queue.push_back(x);
    }
    if (d == 2) {
      adj[static_cast<std::size_t>(nbrs[0])].insert(nbrs[1]);
      adj[static_cast<std::size_t>(nbrs[1])].insert(nbrs[0]);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v] && !adj[v].empty()) return true;
  }
  return false;
}

// Up to `want` internally disjoint a-b paths of length >= 2 (the edge ab
// itself is ignored), found by unit-capacity augmenting paths on the
// vertex-split graph.
std::vector<std::vector<int>> disjoint_long_paths(const Adjacency& adj, int a, int b, int want) {
  const int n = static_cast<int>(adj.size());
  const auto in = [](int v) { return 2 * v; };
  const auto out = [](int v) { return 2 * v + 1; };
  const int nodes = 2 * n;
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes), std::vector<int>(static_cast<std::size_t>(nodes), 0));
  const auto c = [&](int x, int y) -> int& { return cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; };
  for (int v = 0; v < n; ++v) {
    c(in(v), out(v)) = (v == a || v == b) ? kInf : 1;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if ((v == a && w == b) || (v == b && w == a)) continue;
      c(out(v), in(w)) = 1;
    }
  }
  const int source = out(a);
  const int sink = in(b);
  std::vector<std::vector<int>> flow(static_cast<std::size_t>(nodes), std::vector<int>(static_cast<std::size_t>(nodes), 0));
  int found = 0;
  while (found < want) {
    std::vector<int> prev(static_cast<std::size_t>(nodes), -1);
    prev[static_cast<std::size_t>(source)] = source;
    std::deque<int> q{source};
    while (!q.empty() && prev[static_cast<std::size_t>(sink)] == -1) {
      const int x = q.front();
      q.pop_front();
      for (int y = 0; y < nodes; ++y) {
        if (prev[static_cast<std::size_t>(y)] != -1) continue;
        const int residual = c(x, y) - flow[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        if (residual > 0) {
          prev[static_cast<std::size_t>(y)] = x;
          q.push_back(y);
        }
      }
    }
    if (prev[static_cast<std::size_t>(sink)] == -1) break;
    for (int y = sink; y != source; y = prev[static_cast<std::size_t>(y)]) {
      const int x = prev[static_cast<std::size_t>(y)];
      flow[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] += 1;
      flow[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] -= 1;
    }
    ++found;
  }
  std::vector<std::vector<int>> paths;
  if (found < want) return paths;
  // Decompose: every internal vertex carries at most one unit.
  for (int w = 0; w < n; ++w) {
    if (flow[static_cast<std::size_t>(out(a))][static_cast<std::size_t>(in(w))] <= 0) continue;
    std::vector<int> path{a};
    int at = w;
    while (at != b) {
      path.push_back(at);
      int next = -1;
      for (int y = 0; y < n; ++y) {
        if (flow[static_cast<std::size_t>(out(at))][static_cast<std::size_t>(in(y))] > 0) {
          next = y;
          break;
        }
      }
      if (next == -1) throw std::logic_error("flow decomposition failed");
      at = next;
    }
    path.push_back(b);
    paths.push_back(std::move(path));
  }
  return paths;
}

std::optional<std::pair<int, int>> k23_hubs(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  const auto long_degree = [&](int v, int other) {
    return static_cast<int>(adj[static_cast<std::size_t>(v)].size()) - (adj[static_cast<std::size_t>(v)].count(other) ? 1 : 0);
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (long_degree(a, b) < 3 || long_degree(b, a) < 3) continue;
      if (disjoint_long_paths(adj, a, b, 3).size() == 3) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

int edge_joining(const Graph& g, int x, int y) {
  const auto e = g.edge_between(x, y);
  if (!e) throw std::logic_error("witness construction lost an edge");
  return *e;
}

std::optional<MinorWitness> find_k23(const Graph& g) {
  const Adjacency adj = simple_adjacency(g);
  const auto hubs = k23_hubs(adj);
  if (!hubs) return std::nullopt;
  const auto [a, b] = *hubs;
  const auto paths = disjoint_long_paths(adj, a, b, 3);
  MinorWitness w;
  w.target = MinorTarget::K23;
  w.branch_sets = {{a}, {b}};
  std::vector<int> first, last;
  for (const auto& p : paths) {
    w.branch_sets.emplace_back(p.begin() + 1, p.end() - 1);
    first.push_back(edge_joining(g, a, p[1]));
    last.push_back(edge_joining(g, p[p.size() - 2], b));
  }
  w.connecting_edges = {first[0], first[1], first[2], last[0], last[1], last[2]};
  return w;
}

// Minimal minor model by greedy deletion and contraction. Group labels
// track branch sets; `alive` marks edges still present.
struct MinorState {
  std::vector<int> group;
  std::vector<bool> alive;
};

Adjacency state_adjacency(const Graph& g, const MinorState& s) {
  Adjacency adj(static_cast<std::size_t>(g.vertex_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!s.alive[static_cast<std::size_t>(e)]) continue;
    const int a = s.group[static_cast<std::size_t>(g.edge(e).u)];
    const int b = s.group[static_cast<std::size_t>(g.edge(e).v)];
    if (a == b) continue;
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  }
  return adj;
}

std::optional<MinorWitness> find_k4(const Graph& g) {
  MinorState s;
  s.group.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) s.group[static_cast<std::size_t>(v)] = v;
  s.alive.assign(static_cast<std::size_t>(g.edge_count()), true);
  if (!adjacency_has_k4(state_adjacency(g, s))) return std::nullopt;

  const auto is_internal = [&](int e) {
    return s.group[static_cast<std::size_t>(g.edge(e).u)] == s.group[static_cast<std::size_t>(g.edge(e).v)];
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!s.alive[static_cast<std::size_t>(e)]) continue;
      s.alive[static_cast<std::size_t>(e)] = false;
      if (!is_internal(e) && !adjacency_has_k4(state_adjacency(g, s))) {
        s.alive[static_cast<std::size_t>(e)] = true;
      } else {
        changed = true;
      }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!s.alive[static_cast<std::size_t>(e)]) continue;
      const int keep = s.group[static_cast<std::size_t>(g.edge(e).u)];
      const int gone = s.group[static_cast<std::size_t>(g.edge(e).v)];
      MinorState trial = s;
      trial.alive[static_cast<std::size_t>(e)] = false;
      for (int& grp : trial.group) {
        if (grp == gone) grp = keep;
      }
      if (adjacency_has_k4(state_adjacency(g, trial))) {
        s = std::move(trial);
        changed = true;
      }
    }
  }

  // What remains is K4 itself: four groups, one edge per pair.
  std::vector<int> groups;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!s.alive[static_cast<std::size_t>(e)]) continue;
    groups.push_back(s.group[static_cast<std::size_t>(g.edge(e).u)]);
    groups.push_back(s.group[static_cast<std::size_t>(g.edge(e).v)]);
  }
  std::sort(groups.begin(), groups.end());
  groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
  if (groups.size() != 4) throw std::logic_error("K4 minimization did not end at K4");
  MinorWitness w;
  w.target = MinorTarget::K4;
  w.branch_sets.resize(4);
  // Groups are labelled by a member, so sorting labels does not order sets
  // by smallest member; order explicitly.
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto it = std::find(groups.begin(), groups.end(), s.group[static_cast<std::size_t>(v)]);
    if (it != groups.end()) w.branch_sets[static_cast<std::size_t>(it - groups.begin())].push_back(v);
  }
  std::vector<int> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return w.branch_sets[static_cast<std::size_t>(x)].front() < w.branch_sets[static_cast<std::size_t>(y)].front();
  });
  std::vector<std::vector<int>> sorted_sets;
  std::vector<int> group_index(4);
  for (std::size_t i = 0; i < 4; ++i) {
    sorted_sets.push_back(w.branch_sets[static_cast<std::size_t>(order[i])]);
    group_index[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  }
  w.branch_sets = std::move(sorted_sets);
  const auto set_of = [&](int v) {
    const auto it = std::find(groups.begin(), groups.end(), s.group[static_cast<std::size_t>(v)]);
    return group_index[static_cast<std::size_t>(it - groups.begin())];
  };
  w.connecting_edges.assign(6, -1);
  const auto& pairs = target_edges(MinorTarget::K4);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!s.alive[static_cast<std::size_t>(e)]) continue;
    const int a = set_of(g.edge(e).u);
    const int b = set_of(g.edge(e).v);
    const auto k = std::find(pairs.begin(), pairs.end(), std::make_pair(std::min(a, b), std::max(a, b))) - pairs.begin();
    if (w.connecting_edges[static_cast<std::size_t>(k)] != -1) throw std::logic_error("K4 minimization left a parallel edge");
    w.connecting_edges[static_cast<std::size_t>(k)] = e;
  }
  return w;
}

}  // namespace

bool has_k4_minor(const Graph& g) { return adjacency_has_k4(simple_adjacency(g)); }

bool has_k23_minor(const Graph& g) { return k23_hubs(simple_adjacency(g)).has_value(); }

std::optional<MinorWitness> find_minor(const Graph& g, MinorTarget target) {
  return target == MinorTarget::K4 ? find_k4(g) : find_k23(g);
}

bool OuterplaneStructure::is_chord(int edge) const { return std::binary_search(chords.begin(), chords.end(), edge); }

int OuterplaneStructure::position(int vertex) const {
  const auto it = std::find(boundary.begin(), boundary.end(), vertex);
  return it == boundary.end() ? -1 : static_cast<int>(it - boundary.begin());
}

Graph apex_cone(const Graph& g) {
  Graph out = g;
  const int apex = out.add_vertex("apex");
  for (int v = 0; v < g.vertex_count(); ++v) out.add_edge("apex_" + std::to_string(v), apex, v);
  return out;
}

OuterplanarResult test_outerplanar(const Graph& g) {
  OuterplanarResult result;
  const Graph coned = apex_cone(g);
  const PlanarityResult planar = test_planar(coned);
  const bool k4 = has_k4_minor(g);
  const bool k23 = !k4 && has_k23_minor(g);
  if (planar.planar == (k4 || k23)) throw std::logic_error("outerplanarity: cone planarity and minor test disagree");
  result.outerplanar = planar.planar;
  if (!result.outerplanar) {
    result.witness = find_minor(g, k4 ? MinorTarget::K4 : MinorTarget::K23);
    if (!result.witness || !verify_witness(g, *result.witness)) throw std::logic_error("outerplanarity: witness failed");
    return result;
  }
  if (!g.is_simple() || !is_2_connected(g)) return result;

  // With every vertex on the apex, the faces at the apex are triangles, so
  // the apex rotator lists the boundary cycle.
  const int apex = g.vertex_count();
  std::vector<int> order;
  for (const HalfEdge& h : planar.rotation.rotators[static_cast<std::size_t>(apex)]) order.push_back(coned.opposite(h));
  std::rotate(order.begin(), std::min_element(order.begin(), order.end()), order.end());
  if (order.size() > 2 && order.back() < order[1]) std::reverse(order.begin() + 1, order.end());
  OuterplaneStructure st;
  st.boundary = order;
  std::vector<bool> on_boundary(static_cast<std::size_t>(g.edge_count()), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto e = g.edge_between(order[i], order[(i + 1) % order.size()]);
    if (!e) throw std::logic_error("outerplanarity: apex rotator is not a boundary cycle");
    st.boundary_edges.push_back(*e);
    on_boundary[static_cast<std::size_t>(*e)] = true;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!on_boundary[static_cast<std::size_t>(e)]) st.chords.push_back(e);
  }
  result.structure = std::move(st);
  return result;
}

}  // namespace outerspatial
