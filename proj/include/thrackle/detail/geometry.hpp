#pragma once

// Exact integer geometry, used only to derive combinatorial drawings from straight-line layouts.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "thrackle/drawing.hpp"

namespace thrackle::detail {

using i128 = __int128;

struct P {
  long long x = 0, y = 0;
  P operator-(const P& o) const { return {x - o.x, y - o.y}; }
  P operator+(const P& o) const { return {x + o.x, y + o.y}; }
  bool operator==(const P&) const = default;
};

inline i128 cross(const P& a, const P& b) { return (i128)a.x * b.y - (i128)a.y * b.x; }

// Clockwise angular order (y axis up): larger angle first, starting from angle pi.
inline bool cw_before(const P& a, const P& b) {
  auto half = [](const P& p) { return (p.y > 0 || (p.y == 0 && p.x < 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) < 0;
}

struct Frac {
  i128 num, den;  // den > 0
  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
  bool operator==(const Frac& o) const { return num * o.den == o.num * den; }
};

// Proper intersection of open segments ab and cd; returns parameters along each.
inline std::optional<std::pair<Frac, Frac>> proper_hit(P a, P b, P c, P d) {
  P r = b - a, s = d - c;
  i128 den = cross(r, s);
  if (den == 0) {
    if (cross(c - a, r) == 0) throw std::logic_error("collinear overlapping legs in geometric layout");
    return std::nullopt;
  }
  i128 tn = cross(c - a, s), un = cross(c - a, r);
  if (den < 0) {
    den = -den;
    tn = -tn;
    un = -un;
  }
  if (tn < 0 || tn > den || un < 0 || un > den) return std::nullopt;
  if (tn == 0 || tn == den || un == 0 || un == den) return std::pair{Frac{tn, den}, Frac{un, den}};
  return std::pair{Frac{tn, den}, Frac{un, den}};
}

struct GeoEdge {
  int graph_edge;
  std::vector<P> pts;          // polyline from first endpoint to second
  std::vector<char> passthru;  // per polyline point: 1 = crosscap passage (sign flip, meetings ignored)
};

struct GeoLayout {
  std::vector<GeoEdge> edges;
  std::vector<std::optional<std::vector<int>>> rotation_override;  // per vertex
};

// Turns an exact polyline layout into a Drawing on the given graph.
inline Drawing drawing_from_layout(AbstractGraph g, const GeoLayout& lay) {
  Drawing d = bare_drawing(std::move(g));
  const int m = d.graph.edge_count();
  std::vector<const GeoEdge*> ge(m, nullptr);
  for (const auto& e : lay.edges) ge[e.graph_edge] = &e;
  struct Hit {
    int leg;
    Frac t;
    int x;
  };
  std::vector<std::vector<Hit>> hits(m);
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      const auto& A = *ge[e];
      const auto& B = *ge[f];
      for (std::size_t i = 0; i + 1 < A.pts.size(); ++i)
        for (std::size_t j = 0; j + 1 < B.pts.size(); ++j) {
          auto h = proper_hit(A.pts[i], A.pts[i + 1], B.pts[j], B.pts[j + 1]);
          if (!h) continue;
          auto [t, u] = *h;
          bool t_end = t.num == 0 || t.num == t.den, u_end = u.num == 0 || u.num == u.den;
          if (t_end || u_end) {
            // Meeting at a polyline joint: allowed only at shared vertices or common crosscap points.
            P pt = t.num == 0 ? A.pts[i] : t.num == t.den ? A.pts[i + 1] : u.num == 0 ? B.pts[j] : B.pts[j + 1];
            auto is_pass = [&](const GeoEdge& E, const P& q) {
              for (std::size_t k = 0; k < E.pts.size(); ++k)
                if (E.pts[k] == q && (E.passthru[k] || k == 0 || k + 1 == E.pts.size())) return true;
              return false;
            };
            if (is_pass(A, pt) && is_pass(B, pt)) continue;
            throw std::logic_error("degenerate meeting in geometric layout");
          }
          int x = static_cast<int>(d.crossings.size());
          P da = A.pts[i + 1] - A.pts[i], db = B.pts[j + 1] - B.pts[j];
          d.crossings.push_back({"x" + std::to_string(x), e, f, cross(da, db) > 0 ? 1 : 0});
          hits[e].push_back({static_cast<int>(i), t, x});
          hits[f].push_back({static_cast<int>(j), u, x});
        }
    }
  for (int e = 0; e < m; ++e) {
    auto& h = hits[e];
    std::sort(h.begin(), h.end(), [](const Hit& a, const Hit& b) {
      if (a.leg != b.leg) return a.leg < b.leg;
      if (a.t == b.t) throw std::logic_error("two crossings at one point of an edge");
      return a.t < b.t;
    });
    d.order[e].clear();
    for (const auto& x : h) d.order[e].push_back(x.x);
    d.sign[e].assign(h.size() + 1, 1);
    const auto& E = *ge[e];
    for (std::size_t k = 1; k + 1 < E.pts.size(); ++k) {
      if (!E.passthru[k]) continue;
      // segment index = number of crossings on legs before point k
      int before = 0;
      for (const auto& x : h)
        if (x.leg < static_cast<int>(k)) ++before;
      d.sign[e][before] = -d.sign[e][before];
    }
  }
  for (int v = 0; v < d.graph.vertex_count(); ++v) {
    if (v < static_cast<int>(lay.rotation_override.size()) && lay.rotation_override[v]) {
      d.rotation[v] = *lay.rotation_override[v];
      continue;
    }
    auto inc = d.graph.incident(v);
    auto dir = [&](int e) {
      const auto& E = *ge[e];
      return d.graph.edge(e).u == v ? E.pts[1] - E.pts[0] : E.pts[E.pts.size() - 2] - E.pts.back();
    };
    std::sort(inc.begin(), inc.end(), [&](int a, int b) { return cw_before(dir(a), dir(b)); });
    d.rotation[v] = inc;
  }
  return d;
}

}  // namespace thrackle::detail
