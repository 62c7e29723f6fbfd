#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thrackle/graph.hpp"
#include "thrackle/surface_map.hpp"

namespace thrackle {

struct Crossing {
  std::string name;
  int a = -1;
  int b = -1;
  // 0: clockwise (a-in, b-in, a-out, b-out); 1: (a-in, b-out, a-out, b-in).
  int bit = 0;
};

struct Drawing {
  AbstractGraph graph;
  std::vector<std::vector<int>> rotation;  // per vertex, clockwise edge ids
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> order;  // per edge, crossing ids from first endpoint to second
  std::vector<std::vector<int>> sign;   // per edge, one entry per segment

  int crossing_id(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(crossings.size()); ++i)
      if (crossings[i].name == name) return i;
    return -1;
  }
  std::string fresh_crossing_name() const {
    std::set<std::string> used;
    for (const auto& c : crossings) used.insert(c.name);
    for (int i = static_cast<int>(crossings.size());; ++i)
      if (!used.count("x" + std::to_string(i))) return "x" + std::to_string(i);
  }
};

// Empty drawing skeleton for a graph: rotation in incidence order, no crossings.
inline Drawing bare_drawing(AbstractGraph g) {
  Drawing d;
  d.graph = std::move(g);
  d.rotation.resize(d.graph.vertex_count());
  for (int v = 0; v < d.graph.vertex_count(); ++v) d.rotation[v] = d.graph.incident(v);
  d.order.assign(d.graph.edge_count(), {});
  d.sign.assign(d.graph.edge_count(), {1});
  return d;
}

inline void validate(const Drawing& d) {
  const auto& g = d.graph;
  if (static_cast<int>(d.rotation.size()) != g.vertex_count())
    throw structural_error("rotation table size differs from vertex count");
  if (static_cast<int>(d.order.size()) != g.edge_count() || static_cast<int>(d.sign.size()) != g.edge_count())
    throw structural_error("order/sign tables differ from edge count");
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto r = d.rotation[v];
    auto inc = g.incident(v);
    std::sort(r.begin(), r.end());
    std::sort(inc.begin(), inc.end());
    if (r != inc)
      throw structural_error("rotation at vertex " + g.vertex_name(v) + " does not list its incident edges exactly once");
  }
  const int nx = static_cast<int>(d.crossings.size());
  std::vector<int> seen(nx, 0);
  for (int x = 0; x < nx; ++x) {
    const auto& c = d.crossings[x];
    if (c.a < 0 || c.b < 0 || c.a >= g.edge_count() || c.b >= g.edge_count())
      throw structural_error("crossing " + c.name + " names an unknown edge");
    if (c.a == c.b) throw structural_error("crossing " + c.name + " is a self-crossing of edge " + g.edge(c.a).name);
    if (c.bit != 0 && c.bit != 1) throw structural_error("crossing " + c.name + " has bit out of range");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (d.sign[e].size() != d.order[e].size() + 1)
      throw structural_error("edge " + g.edge(e).name + " has " + std::to_string(d.sign[e].size()) +
                             " segment signs for " + std::to_string(d.order[e].size()) + " crossings");
    for (int s : d.sign[e])
      if (s != 1 && s != -1) throw structural_error("edge " + g.edge(e).name + " has a sign other than +1/-1");
    std::set<int> here;
    for (int x : d.order[e]) {
      if (x < 0 || x >= nx) throw structural_error("edge " + g.edge(e).name + " lists an unknown crossing");
      const auto& c = d.crossings[x];
      if (c.a != e && c.b != e)
        throw structural_error("edge " + g.edge(e).name + " passes crossing " + c.name + " of other edges");
      if (!here.insert(x).second)
        throw structural_error("edge " + g.edge(e).name + " passes crossing " + c.name + " twice");
      ++seen[x];
    }
  }
  for (int x = 0; x < nx; ++x)
    if (seen[x] != 2)
      throw structural_error("crossing " + d.crossings[x].name + " appears on " + std::to_string(seen[x]) +
                             " edge paths instead of 2");
}

// The same drawing over an isomorphic copy of its graph with matching vertex names; edges are matched
// by endpoints and may be reversed. Crossings are renamed x0, x1, ... in id order.
inline Drawing rebase_onto(const Drawing& d, const AbstractGraph& target) {
  const auto& g = d.graph;
  if (g.vertex_count() != target.vertex_count() || g.edge_count() != target.edge_count())
    throw std::domain_error("rebase: graphs differ in size");
  std::vector<int> vmap(g.vertex_count()), emap(g.edge_count());
  std::vector<char> flip(g.edge_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    vmap[v] = target.vertex_id(g.vertex_name(v));
    if (vmap[v] < 0) throw std::domain_error("rebase: vertex " + g.vertex_name(v) + " missing");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    int u = vmap[g.edge(e).u], v = vmap[g.edge(e).v];
    emap[e] = target.find_edge(u, v);
    if (emap[e] < 0) throw std::domain_error("rebase: edge " + g.edge(e).name + " missing");
    flip[e] = target.edge(emap[e]).u != u;
  }
  Drawing out = bare_drawing(target);
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.rotation[vmap[v]].clear();
    for (int e : d.rotation[v]) out.rotation[vmap[v]].push_back(emap[e]);
  }
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    const auto& c = d.crossings[x];
    out.crossings.push_back({"x" + std::to_string(x), emap[c.a], emap[c.b], c.bit ^ flip[c.a] ^ flip[c.b]});
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto ord = d.order[e];
    auto sg = d.sign[e];
    if (flip[e]) {
      std::reverse(ord.begin(), ord.end());
      std::reverse(sg.begin(), sg.end());
    }
    out.order[emap[e]] = ord;
    out.sign[emap[e]] = sg;
  }
  return out;
}

struct PlanarizedMap {
  EmbeddingScheme scheme;
  std::vector<int> vertex_node;    // -1 for isolated vertices
  std::vector<int> crossing_node;
  std::vector<int> first_segment;  // per edge, id of its segment 0
  std::vector<std::pair<int, int>> segment_edge;  // per segment: (edge, index along edge)
};

inline PlanarizedMap planarize(const Drawing& d) {
  validate(d);
  const auto& g = d.graph;
  PlanarizedMap pm;
  int nodes = 0;
  pm.vertex_node.assign(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) pm.vertex_node[v] = nodes++;
  pm.crossing_node.resize(d.crossings.size());
  for (std::size_t x = 0; x < d.crossings.size(); ++x) pm.crossing_node[x] = nodes++;

  std::vector<Segment> segs;
  std::vector<std::map<int, int>> pos_on(g.edge_count());  // crossing id -> index along edge
  pm.first_segment.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    pm.first_segment[e] = static_cast<int>(segs.size());
    const auto& ord = d.order[e];
    std::vector<int> path;
    path.push_back(pm.vertex_node[g.edge(e).u]);
    for (std::size_t k = 0; k < ord.size(); ++k) {
      path.push_back(pm.crossing_node[ord[k]]);
      pos_on[e][ord[k]] = static_cast<int>(k);
    }
    path.push_back(pm.vertex_node[g.edge(e).v]);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      segs.push_back({path[k], path[k + 1], d.sign[e][k]});
      pm.segment_edge.push_back({e, static_cast<int>(k)});
    }
  }
  std::vector<std::vector<Dart>> rot(nodes);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (pm.vertex_node[v] < 0) continue;
    for (int e : d.rotation[v]) {
      bool first = g.edge(e).u == v;
      int seg = first ? pm.first_segment[e] : pm.first_segment[e] + static_cast<int>(d.order[e].size());
      rot[pm.vertex_node[v]].push_back(make_dart(seg, first ? 0 : 1));
    }
  }
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    const auto& c = d.crossings[x];
    int ka = pos_on[c.a].at(static_cast<int>(x)), kb = pos_on[c.b].at(static_cast<int>(x));
    Dart a_in = make_dart(pm.first_segment[c.a] + ka, 1), a_out = make_dart(pm.first_segment[c.a] + ka + 1, 0);
    Dart b_in = make_dart(pm.first_segment[c.b] + kb, 1), b_out = make_dart(pm.first_segment[c.b] + kb + 1, 0);
    rot[pm.crossing_node[x]] = c.bit == 0 ? std::vector<Dart>{a_in, b_in, a_out, b_out}
                                          : std::vector<Dart>{a_in, b_out, a_out, b_in};
  }
  pm.scheme = EmbeddingScheme(nodes, std::move(segs), std::move(rot));
  return pm;
}

inline EmbeddingScheme to_scheme(const Drawing& d) { return planarize(d).scheme; }

inline SurfaceClass surface_of(const Drawing& d) { return euler_genus(to_scheme(d)); }

struct Violation {
  int edge_a = -1;
  int edge_b = -1;
  int observed = 0;
  std::string required;
};

struct VerificationReport {
  bool is_thrackle = false;
  bool is_generalized_thrackle = false;
  std::vector<Violation> violations;
  std::optional<SurfaceClass> surface;  // empty when the planarized map is disconnected
  int components = 1;
};

inline std::map<std::pair<int, int>, int> crossing_tally(const Drawing& d) {
  std::map<std::pair<int, int>, int> tally;
  for (const auto& c : d.crossings) ++tally[{std::min(c.a, c.b), std::max(c.a, c.b)}];
  return tally;
}

inline VerificationReport verify_thrackle(const Drawing& d) {
  PlanarizedMap pm = planarize(d);
  const auto& g = d.graph;
  auto tally = crossing_tally(d);
  VerificationReport r;
  r.is_thrackle = true;
  r.is_generalized_thrackle = true;
  for (int e = 0; e < g.edge_count(); ++e)
    for (int f = e + 1; f < g.edge_count(); ++f) {
      auto it = tally.find({e, f});
      int c = it == tally.end() ? 0 : it->second;
      bool adj = g.adjacent_edges(e, f);
      bool exact = adj ? c == 0 : c == 1;
      bool parity = adj ? c % 2 == 0 : c % 2 == 1;
      if (!exact) {
        r.is_thrackle = false;
        r.violations.push_back({e, f, c, adj ? "adjacent: 0" : "independent: 1"});
      }
      if (!parity) r.is_generalized_thrackle = false;
    }
  r.components = pm.scheme.component_count();
  if (r.components == 1) r.surface = euler_genus(pm.scheme);
  return r;
}

// Keep only the listed edges; crossings losing an edge are smoothed away.
inline Drawing restrict_to(const Drawing& d, const std::set<int>& keep_edges, bool drop_isolated = true) {
  const auto& g = d.graph;
  for (int e : keep_edges)
    if (e < 0 || e >= g.edge_count()) throw std::domain_error("restrict: edge id outside the drawing");
  std::vector<int> vmap(g.vertex_count(), -1), emap(g.edge_count(), -1), xmap(d.crossings.size(), -1);
  std::vector<int> deg(g.vertex_count(), 0);
  for (int e : keep_edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  Drawing out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!drop_isolated || deg[v] > 0) vmap[v] = out.graph.add_vertex(g.vertex_name(v));
  for (int e = 0; e < g.edge_count(); ++e)
    if (keep_edges.count(e)) emap[e] = out.graph.add_edge(g.edge(e).name, vmap[g.edge(e).u], vmap[g.edge(e).v]);
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    const auto& c = d.crossings[x];
    if (emap[c.a] >= 0 && emap[c.b] >= 0) {
      xmap[x] = static_cast<int>(out.crossings.size());
      out.crossings.push_back({c.name, emap[c.a], emap[c.b], c.bit});
    }
  }
  out.rotation.resize(out.graph.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (vmap[v] >= 0)
      for (int e : d.rotation[v])
        if (emap[e] >= 0) out.rotation[vmap[v]].push_back(emap[e]);
  out.order.resize(out.graph.edge_count());
  out.sign.resize(out.graph.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (emap[e] < 0) continue;
    int acc = d.sign[e][0];
    for (std::size_t k = 0; k < d.order[e].size(); ++k) {
      int x = d.order[e][k];
      if (xmap[x] >= 0) {
        out.order[emap[e]].push_back(xmap[x]);
        out.sign[emap[e]].push_back(acc);
        acc = d.sign[e][k + 1];
      } else {
        acc *= d.sign[e][k + 1];
      }
    }
    out.sign[emap[e]].push_back(acc);
  }
  return out;
}

inline Drawing restrict_to(const Drawing& d, const std::vector<std::string>& keep_edge_names,
                           bool drop_isolated = true) {
  std::set<int> keep;
  for (const auto& n : keep_edge_names) {
    int e = d.graph.edge_id(n);
    if (e < 0) throw std::domain_error("restrict: unknown edge " + n);
    keep.insert(e);
  }
  return restrict_to(d, keep, drop_isolated);
}

}  // namespace thrackle
