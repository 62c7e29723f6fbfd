#pragma once

// Inserting a new edge into a drawing by routing it through the faces of the planarized map.
// A plain route keeps the surface; each "jump" between two faces adds a handle (orientable maps only).

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thrackle/drawing.hpp"

namespace thrackle::detail {

struct FaceIndex {
  PlanarizedMap pm;
  FaceSet fs;
  std::vector<int> face_of;  // per dart: face walking along it
  std::vector<int> pos;      // per dart: index in its face walk
  // per face: graph-vertex corners as (vertex, arrival dart); the corner follows that dart clockwise
  std::vector<std::vector<std::pair<int, Dart>>> corners;
};

inline FaceIndex index_faces(const Drawing& d) {
  FaceIndex c;
  c.pm = planarize(d);
  c.fs = trace_faces(c.pm.scheme);
  const int nd = 2 * c.pm.scheme.segment_count();
  c.face_of.assign(nd, -1);
  c.pos.assign(nd, -1);
  c.corners.resize(c.fs.size());
  std::vector<int> node_vertex(c.pm.scheme.node_count(), -1);
  for (int v = 0; v < d.graph.vertex_count(); ++v)
    if (c.pm.vertex_node[v] >= 0) node_vertex[c.pm.vertex_node[v]] = v;
  for (int f = 0; f < static_cast<int>(c.fs.size()); ++f)
    for (int i = 0; i < static_cast<int>(c.fs.faces[f].size()); ++i) {
      Dart dd = c.fs.faces[f][i];
      c.face_of[dd] = f;
      c.pos[dd] = i;
      Dart arr = dd ^ 1;
      const auto& sg = c.pm.scheme.segment(dart_segment(arr));
      int node = dart_end(arr) == 0 ? sg.a : sg.b;
      if (node_vertex[node] >= 0) c.corners[f].push_back({node_vertex[node], arr});
    }
  return c;
}

struct Route {
  Dart start_corner = -1;      // arrival dart at u; the new edge follows its edge clockwise
  std::vector<Dart> crossed;   // darts, each in the face being left, whose segment is crossed
  Dart end_corner = -1;        // same at w; -1 when w is created
};

inline int edge_of(const FaceIndex& c, Dart d) { return c.pm.segment_edge[dart_segment(d)].first; }

// Adds edge u-w (w < 0: a new vertex named new_name) along route r. Orientable maps only.
inline Drawing apply_route(const Drawing& d0, const FaceIndex& c, int u, int w, const std::string& new_name,
                           const std::string& edge_name, const Route& r) {
  Drawing d = d0;
  bool fresh = w < 0;
  if (fresh) {
    w = d.graph.add_vertex(new_name);
    d.rotation.emplace_back();
  }
  int f = edge_name.empty() ? d.graph.add_edge(u, w) : d.graph.add_edge(edge_name, u, w);
  d.order.emplace_back();
  d.sign.emplace_back();
  for (Dart dd : r.crossed) {
    auto [h, k] = c.pm.segment_edge[dart_segment(dd)];
    int x = static_cast<int>(d.crossings.size());
    // leaving the face on the left of dd: left-to-right of h when dd runs along h
    d.crossings.push_back({d.fresh_crossing_name(), h, f, dart_end(dd) == 0 ? 0 : 1});
    d.order[h].insert(d.order[h].begin() + k, x);
    d.sign[h].insert(d.sign[h].begin() + k, 1);
    d.order[f].push_back(x);
  }
  d.sign[f].assign(d.order[f].size() + 1, 1);
  auto after = [&](int v, int e) {
    auto& rot = d.rotation[v];
    rot.insert(std::find(rot.begin(), rot.end(), e) + 1, f);
  };
  after(u, edge_of(c, r.start_corner));
  if (fresh)
    d.rotation[w] = {f};
  else
    after(w, edge_of(c, r.end_corner));
  return d;
}

struct RouteQuery {
  int u = -1;
  int w = -1;              // -1: new vertex, placed wherever the route ends
  int jumps = 0;           // exact number of jumps between distinct faces
  long budget = 200000;    // DFS nodes per start corner
  std::vector<int> guide;  // if set: these edges must be crossed in this relative order
};

// Calls cb for each route found (in deterministic order) until cb returns true or the budget runs out.
// The new edge crosses exactly the edges independent of it, each once.
inline void enumerate_routes(const Drawing& d, const FaceIndex& c, const RouteQuery& q,
                             const std::function<bool(const Route&)>& cb) {
  const auto& g = d.graph;
  const int m = g.edge_count();
  std::vector<char> need(m, 0);
  int need_count = 0;
  for (int e = 0; e < m; ++e) {
    auto ed = g.edge(e);
    bool adj = ed.u == q.u || ed.v == q.u || (q.w >= 0 && (ed.u == q.w || ed.v == q.w));
    need[e] = !adj;
    need_count += need[e];
  }
  const int nf = static_cast<int>(c.fs.size());
  std::vector<int> guide_rank(m, -1);
  for (int i = 0; i < static_cast<int>(q.guide.size()); ++i) guide_rank[q.guide[i]] = i;
  int guide_next = 0;
  std::vector<char> crossed(m, 0);
  // passages already drawn in each face, as boundary positions (2i+1: dart i, 2i+2: corner after dart i)
  std::vector<std::vector<std::pair<int, int>>> chords(nf);
  auto fits = [&](int f, int p, int r) {
    if (p < 0 || r < 0) return true;  // a handle mouth sits next to the passage's other end
    if (p > r) std::swap(p, r);
    for (auto [x, y] : chords[f]) {
      if (x < 0 || y < 0) continue;
      if (x > y) std::swap(x, y);
      if ((p < x && x < r && r < y) || (x < p && p < y && y < r)) return false;
    }
    return true;
  };
  long nodes = 0;
  bool stop = false;
  int jumped = 0;
  Route r;
  std::function<void(int, int, int)> dfs = [&](int face, int pin, int done) {
    if (stop || ++nodes > q.budget) {
      stop = true;
      return;
    }
    if (done == need_count && jumped == q.jumps) {
      if (q.w < 0) {
        r.end_corner = -1;
        if (cb(r)) stop = true;
        return;
      }
      for (auto [v, arr] : c.corners[face]) {
        if (v != q.w) continue;
        int cp = 2 * c.pos[arr ^ 1] + 2;
        if (!fits(face, pin, cp)) continue;
        r.end_corner = arr;
        if (cb(r)) {
          stop = true;
          return;
        }
      }
      r.end_corner = -1;
    }
    for (Dart dd : c.fs.faces[face]) {
      int e = edge_of(c, dd);
      if (!need[e] || crossed[e]) continue;
      if (guide_rank[e] >= 0 && guide_rank[e] != guide_next) continue;
      int p = 2 * c.pos[dd] + 1;
      if (!fits(face, pin, p)) continue;
      crossed[e] = 1;
      if (guide_rank[e] >= 0) ++guide_next;
      chords[face].push_back({pin, p});
      r.crossed.push_back(dd);
      dfs(c.face_of[dd ^ 1], 2 * c.pos[dd ^ 1] + 1, done + 1);
      if (guide_rank[e] >= 0) --guide_next;
      crossed[e] = 0;
      chords[face].pop_back();
      r.crossed.pop_back();
      if (stop) return;
    }
    if (jumped < q.jumps) {
      ++jumped;
      chords[face].push_back({pin, -1});
      for (int f2 = 0; f2 < nf && !stop; ++f2) {
        if (f2 == face) continue;
        dfs(f2, -1, done);
      }
      chords[face].pop_back();
      --jumped;
    }
  };
  for (int f = 0; f < nf && !stop; ++f)
    for (auto [v, arr] : c.corners[f]) {
      if (v != q.u) continue;
      r = Route{arr, {}, -1};
      for (auto& ch : chords) ch.clear();
      guide_next = 0;
      nodes = 0;
      dfs(f, 2 * c.pos[arr ^ 1] + 2, 0);
      if (stop && nodes <= q.budget) return;  // stopped by the callback
      stop = false;
    }
}

inline std::optional<Route> find_route(const Drawing& d, const FaceIndex& c, const RouteQuery& q) {
  std::optional<Route> out;
  enumerate_routes(d, c, q, [&](const Route& r) {
    out = r;
    return true;
  });
  return out;
}

}  // namespace thrackle::detail
