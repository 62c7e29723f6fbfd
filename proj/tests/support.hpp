#pragma once

#include <gtest/gtest.h>

#include <queue>
#include <random>
#include <string>
#include <vector>

#include "thrackle/bounds.hpp"
#include "thrackle/catalog.hpp"
#include "thrackle/drawing.hpp"
#include "thrackle/graph.hpp"
#include "thrackle/io.hpp"

namespace thrackle::test {

inline bool is_bipartite(const AbstractGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (int r = 0; r < g.vertex_count(); ++r) {
    if (side[r] >= 0) continue;
    side[r] = 0;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Every edge-count upper bound that applies to a connected drawing holds on its cellular surface.
inline void expect_bounds_hold(const Drawing& d) {
  auto r = verify_thrackle(d);
  ASSERT_TRUE(r.is_thrackle);
  ASSERT_TRUE(r.surface.has_value());
  const long long n = d.graph.vertex_count(), m = d.graph.edge_count();
  if (n < 3) return;
  auto rep = max_edges_thrackle(n, 1, 0, 0, *r.surface, is_bipartite(d.graph), true);
  for (const auto& e : rep.entries) EXPECT_LE(m, e.value) << e.id << " on " << rep.query;
  const auto& s = *r.surface;
  EXPECT_LE(m, s.orientable ? 2 * n + 4 * s.genus - 2 : 2 * n + 2 * s.genus - 2);
  EXPECT_LE(m, 2 * n - 4 + 2 * s.euler_genus + 2);
}

inline void expect_surface(const Drawing& d, bool orientable, int eps) {
  auto r = verify_thrackle(d);
  EXPECT_TRUE(r.is_thrackle);
  ASSERT_TRUE(r.surface.has_value());
  EXPECT_EQ(r.surface->orientable, orientable);
  EXPECT_EQ(r.surface->euler_genus, eps);
  EXPECT_EQ(static_cast<long long>(d.crossings.size()), independent_pairs(d.graph).count);
}

// Face count of an all-positive rotation system from the cycles of dart -> next(reverse(dart)).
inline int oracle_face_count(const EmbeddingScheme& s) {
  const int darts = 2 * s.segment_count();
  std::vector<int> node(darts), pos(darts);
  for (int v = 0; v < s.node_count(); ++v)
    for (int i = 0; i < static_cast<int>(s.rotation(v).size()); ++i) {
      node[s.rotation(v)[i]] = v;
      pos[s.rotation(v)[i]] = i;
    }
  std::vector<char> seen(darts, 0);
  int faces = 0;
  for (int d0 = 0; d0 < darts; ++d0) {
    if (seen[d0]) continue;
    ++faces;
    for (int d = d0; !seen[d];) {
      seen[d] = 1;
      int back = d ^ 1;
      const auto& r = s.rotation(node[back]);
      d = r[(pos[back] + 1) % r.size()];
    }
  }
  return faces;
}

// Remove one crossing, merging the two segments of each edge around it.
inline Drawing drop_crossing(const Drawing& d, int x) {
  Drawing out = d;
  for (int e = 0; e < d.graph.edge_count(); ++e) {
    auto& ord = out.order[e];
    for (std::size_t k = 0; k < ord.size(); ++k)
      if (ord[k] == x) {
        out.sign[e][k] *= out.sign[e][k + 1];
        out.sign[e].erase(out.sign[e].begin() + static_cast<long>(k) + 1);
        ord.erase(ord.begin() + static_cast<long>(k));
        break;
      }
    for (int& y : ord)
      if (y > x) --y;
  }
  out.crossings.erase(out.crossings.begin() + x);
  return out;
}

inline std::vector<std::pair<std::string, Drawing>> catalog_corpus() {
  std::vector<std::pair<std::string, Drawing>> c;
  for (int k : {3, 5, 7, 9}) c.push_back({"odd_cycle_" + std::to_string(k), odd_cycle_sphere(k)});
  for (int k : {3, 5, 7}) c.push_back({"wheel_" + std::to_string(k), wheel_projective(k)});
  for (int k : {1, 2, 3, 5}) c.push_back({"gk_" + std::to_string(k), gk_torus(k)});
  for (const char* n : {"k33_torus", "k4_torus", "k5_triple_torus"}) c.push_back({n, fixed_drawing(n)});
  c.push_back({"mainor_2_3", mainor_family(2, 3)});
  c.push_back({"mainnon_3_3", mainnon_family(3, 3)});
  return c;
}

}  // namespace thrackle::test
