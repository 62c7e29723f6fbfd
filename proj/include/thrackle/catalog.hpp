#pragma once

#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

#include "thrackle/detail/geometry.hpp"
#include "thrackle/detail/routing.hpp"
#include "thrackle/drawing.hpp"
#include "thrackle/io.hpp"
#include "thrackle/surgery.hpp"

#ifndef THRACKLE_DATA_DIR
#define THRACKLE_DATA_DIR "data"
#endif

namespace thrackle {

namespace detail {

inline P polygon_point(int pos, int k, long long radius = 100000) {
  long double ang = 2.0L * 3.14159265358979323846L * pos / k;
  return {std::llround(radius * std::cos(ang)), std::llround(radius * std::sin(ang))};
}

inline void require_odd(int k, const char* what) {
  if (k < 3 || k % 2 == 0) throw std::domain_error(std::string(what) + " needs an odd k >= 3");
}

}  // namespace detail

// Star-polygon thrackle of C_k: vertex j at polygon position j*(k-1)/2 mod k.
inline Drawing odd_cycle_sphere(int k) {
  detail::require_odd(k, "odd_cycle_sphere");
  AbstractGraph g = graphs::cycle(k);
  detail::GeoLayout lay;
  int q = (k - 1) / 2;
  auto at = [&](int j) { return detail::polygon_point(static_cast<int>((1LL * j * q) % k), k); };
  for (int i = 0; i < k; ++i) lay.edges.push_back({i, {at(i), at((i + 1) % k)}, {0, 0}});
  return detail::drawing_from_layout(std::move(g), lay);
}

// Rim as the star polygon; spoke to rim vertex j runs along the line through j and a point X near
// the centre, X being a crosscap; the hub sits beyond the far side of every such line.
inline Drawing wheel_projective(int k) {
  detail::require_odd(k, "wheel_projective");
  AbstractGraph g = graphs::wheel(k);
  detail::GeoLayout lay;
  int q = (k - 1) / 2;
  auto at = [&](int j) { return detail::polygon_point(static_cast<int>((1LL * j * q) % k), k); };
  for (int i = 0; i < k; ++i) lay.edges.push_back({i, {at(i), at((i + 1) % k)}, {0, 0}});
  const detail::P X{37, 23};
  std::vector<std::pair<long double, int>> by_angle;
  for (int j = 0; j < k; ++j) {
    detail::P v = at(j);
    detail::P far{v.x + 3 * (X.x - v.x), v.y + 3 * (X.y - v.y)};
    lay.edges.push_back({k + j, {far, X, v}, {0, 1, 0}});
    by_angle.push_back({std::atan2((long double)(X.y - v.y), (long double)(X.x - v.x)), k + j});
  }
  std::sort(by_angle.begin(), by_angle.end());
  std::vector<int> hub;
  for (auto& [a, e] : by_angle) hub.push_back(e);
  lay.rotation_override.resize(k + 1);
  lay.rotation_override[k] = hub;
  return detail::drawing_from_layout(std::move(g), lay);
}

namespace detail {

// Torus thrackle of G_2. Every larger G_k grows from it by the periodic step below.
inline constexpr const char* gk_seed = R"(thrackle v1
vertex 1
vertex 2
vertex 3
vertex 4
vertex a
vertex b
edge 1-2 1 2
edge 2-3 2 3
edge 3-4 3 4
edge a-1 a 1
edge a-3 a 3
edge b-2 b 2
edge b-4 b 4
rot 1 1-2 a-1
rot 2 1-2 2-3 b-2
rot 3 2-3 3-4 a-3
rot 4 3-4 b-4
rot a a-1 a-3
rot b b-2 b-4
cross x0 a-1 b-2 1
cross x1 2-3 a-1 1
cross x2 1-2 a-3 1
cross x3 a-3 b-2 0
cross x4 3-4 b-2 1
cross x5 3-4 a-1 1
cross x6 1-2 3-4 1
cross x7 2-3 b-4 1
cross x8 a-1 b-4 1
cross x9 1-2 b-4 1
cross x10 a-3 b-4 1
order 1-2 x6 x2 x9
order 2-3 x1 x7
order 3-4 x4 x5 x6
order a-1 x8 x0 x1 x5
order a-3 x2 x10 x3
order b-2 x3 x4 x0
order b-4 x7 x8 x9 x10
)";

// Adds path vertices 2i-1, 2i to a drawing of G_{i-1}. Each new edge copies the crossing order of its
// counterpart one period back (shifted by two), with edges at 1 and 2 placed freely by the router.
inline Drawing gk_step(const Drawing& prev, int i) {
  auto nm = [](int x) { return std::to_string(x); };
  auto shift = [&](const std::string& x) { return x == "a" || x == "b" ? x : nm(std::stoi(x) + 2); };
  const std::pair<std::string, std::string> fresh[4] = {
      {nm(2 * i - 2), nm(2 * i - 1)}, {"a", nm(2 * i - 1)}, {nm(2 * i - 1), nm(2 * i)}, {"b", nm(2 * i)}};
  const std::pair<std::string, std::string> model[4] = {
      {nm(2 * i - 4), nm(2 * i - 3)}, {"a", nm(2 * i - 3)}, {nm(2 * i - 3), nm(2 * i - 2)}, {"b", nm(2 * i - 2)}};
  const auto& pg = prev.graph;
  std::optional<Drawing> result;
  std::function<bool(const Drawing&, int)> place = [&](const Drawing& cur, int j) {
    if (j == 4) {
      result = cur;
      return true;
    }
    const auto& cg = cur.graph;
    auto [un, wn] = fresh[j];
    int u = cg.vertex_id(un), w = cg.vertex_id(wn);
    int pe = pg.find_edge(pg.vertex_id(model[j].first), pg.vertex_id(model[j].second));
    RouteQuery q{u, w, 0, 200000, {}};
    for (int x : prev.order[pe]) {
      const auto& c = prev.crossings[x];
      const auto& oe = pg.edge(c.a == pe ? c.b : c.a);
      int a = cg.vertex_id(shift(pg.vertex_name(oe.u))), b = cg.vertex_id(shift(pg.vertex_name(oe.v)));
      int ce = a >= 0 && b >= 0 ? cg.find_edge(a, b) : -1;
      if (ce >= 0) q.guide.push_back(ce);
    }
    if (shift(pg.vertex_name(pg.edge(pe).u)) != un) std::reverse(q.guide.begin(), q.guide.end());
    FaceIndex fx = index_faces(cur);
    bool ok = false;
    enumerate_routes(cur, fx, q, [&](const Route& r) {
      ok = place(apply_route(cur, fx, u, w, wn, "", r), j + 1);
      return ok;
    });
    return ok;
  };
  if (!place(prev, 0)) throw std::logic_error("G_k growth step found no route at i = " + std::to_string(i));
  return *result;
}

}  // namespace detail

// Torus thrackle of G_k.
inline Drawing gk_torus(int k) {
  if (k < 1) throw std::domain_error("gk_torus needs k >= 1");
  Drawing d = parse_drawing(detail::gk_seed);
  if (k == 1) return rebase_onto(restrict_to(d, std::vector<std::string>{"a-1", "1-2", "b-2"}), graphs::gk(1));
  for (int i = 3; i <= k; ++i) d = detail::gk_step(d, i);
  return rebase_onto(d, graphs::gk(k));
}

inline std::string default_data_dir() {
  if (const char* env = std::getenv("THRACKLE_DATA_DIR")) return env;
  return THRACKLE_DATA_DIR;
}

// Drawings shipped as data files: k33_torus, k4_torus, k5_triple_torus, plus the stored outputs
// w7_projective (wheel_projective(7)) and g5_torus (gk_torus(5)).
inline Drawing fixed_drawing(const std::string& name, const std::string& data_dir = default_data_dir()) {
  static const std::set<std::string> known{"k33_torus", "k4_torus", "k5_triple_torus", "w7_projective", "g5_torus"};
  if (!known.count(name))
    throw std::domain_error("unknown fixed drawing '" + name + "'");
  return load_drawing(data_dir + "/" + name + ".thr");
}

// G_k on the torus, then g-1 handles' worth of star cloning at a.
inline Drawing mainor_family(int g, int k) {
  if (g < 1) throw std::domain_error("mainor_family needs g >= 1");
  if (g == 1) return gk_torus(k);
  int t = g - 1;
  if (k < 2 * t + 1) throw std::domain_error("mainor_family needs k \\ge 2t+1 (k >= " + std::to_string(2 * t + 1) + ")");
  Drawing d = gk_torus(k);
  return clone_star_orientable(d, d.graph.vertex_id("a"), t);
}

// W_k on the projective plane, then g-1 crosscaps' worth of star cloning at the hub.
inline Drawing mainnon_family(int g, int k) {
  if (g < 1) throw std::domain_error("mainnon_family needs g >= 1");
  if (g == 1) return wheel_projective(k);
  int t = g - 1;
  if (k < t + 1) throw std::domain_error("mainnon_family needs k \\ge t+1 (k >= " + std::to_string(t + 1) + ")");
  Drawing d = wheel_projective(k);
  return clone_star_nonorientable(d, d.graph.vertex_id("h"), t);
}

}  // namespace thrackle
