#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "thrackle/detail/routing.hpp"
#include "thrackle/drawing.hpp"

namespace thrackle {

struct surgery_error : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

// Crossings and segment signs of edge e listed from endpoint `from` outward.
struct EdgeView {
  std::vector<int> xs;
  std::vector<int> signs;
};

inline EdgeView view_from(const Drawing& d, int e, int from) {
  EdgeView v{d.order[e], d.sign[e]};
  if (d.graph.edge(e).u != from) {
    std::reverse(v.xs.begin(), v.xs.end());
    std::reverse(v.signs.begin(), v.signs.end());
  }
  return v;
}

inline void store_from(Drawing& d, int e, int from, EdgeView v) {
  if (d.graph.edge(e).u != from) {
    std::reverse(v.xs.begin(), v.xs.end());
    std::reverse(v.signs.begin(), v.signs.end());
  }
  d.order[e] = std::move(v.xs);
  d.sign[e] = std::move(v.signs);
}

// Clockwise rotation at crossing x as (edge, is_in) darts.
inline std::vector<std::pair<int, bool>> crossing_rotation(const Crossing& c) {
  if (c.bit == 0) return {{c.a, true}, {c.b, true}, {c.a, false}, {c.b, false}};
  return {{c.a, true}, {c.b, false}, {c.a, false}, {c.b, true}};
}

inline int bit_for(int a, int b, const std::vector<std::pair<int, bool>>& cw) {
  // find rotation of cw starting at (a, in); second entry decides the bit
  for (std::size_t i = 0; i < 4; ++i)
    if (cw[i].first == a && cw[i].second) {
      auto nxt = cw[(i + 1) % 4];
      if (nxt.first != b) throw surgery_error("crossing rotation does not alternate");
      return nxt.second ? 0 : 1;
    }
  throw surgery_error("crossing rotation lacks edge");
}

inline int add_crossing(Drawing& d, int a, int b, const std::vector<std::pair<int, bool>>& cw) {
  int id = static_cast<int>(d.crossings.size());
  d.crossings.push_back({d.fresh_crossing_name(), a, b, bit_for(a, b, cw)});
  return id;
}

// Walk parallel to edge e (travelling from `from` to its other end) on the left side (side = +1)
// or right side (side = -1) in the frame of `from`, inserting a crossing of the new edge f with
// every edge that crosses e. Crossings listed in `skip` (on e, in the from-frame prefix) are not
// shadowed. Returns the crossings on f in travel order, the signs of f's segments from the first
// shadow crossing on, and the side at arrival in the frame of the end vertex.
struct ShadowResult {
  std::vector<int> xs;
  std::vector<int> signs;  // size xs.size(): sign of f segment after each crossing
  int first_sign = 1;      // sign of the f segment arriving at the first crossing (or the end)
  int arrival_side = 1;
};

inline ShadowResult shadow(Drawing& d, int e, int from, int f, int side, int start_index, int start_frame) {
  ShadowResult r;
  EdgeView ev = view_from(d, e, from);
  // start_frame: relation between the caller's frame and the frame at ev.xs[start_index] (or the end vertex)
  int s = side * start_frame;
  r.first_sign = start_frame;
  for (std::size_t k = start_index; k < ev.xs.size(); ++k) {
    int x = ev.xs[k];
    Crossing cx = d.crossings[x];
    bool e_is_a = cx.a == e;
    int h = e_is_a ? cx.b : cx.a;
    bool e_first_from = d.graph.edge(e).u == from;
    // dart of e toward `from` at x
    std::pair<int, bool> toward{e, e_first_from};
    auto cw = crossing_rotation(cx);
    int ti = 0;
    while (cw[ti] != toward) ++ti;
    std::pair<int, bool> hdart = s > 0 ? cw[(ti + 1) % 4] : cw[(ti + 3) % 4];
    // hdart.second: true means the half of h before x (its in-side)
    bool on_in_half = hdart.second;
    std::pair<int, bool> h_far{h, on_in_half}, h_toward{h, !on_in_half};
    std::pair<int, bool> f_in{f, true}, f_out{f, false};
    std::vector<std::pair<int, bool>> ycw =
        s > 0 ? std::vector<std::pair<int, bool>>{f_in, h_far, f_out, h_toward}
              : std::vector<std::pair<int, bool>>{f_in, h_toward, f_out, h_far};
    int y = add_crossing(d, h, f, ycw);
    auto& ho = d.order[h];
    auto& hs = d.sign[h];
    int xi = static_cast<int>(std::find(ho.begin(), ho.end(), x) - ho.begin());
    if (on_in_half) {
      ho.insert(ho.begin() + xi, y);
      hs.insert(hs.begin() + xi + 1, 1);
    } else {
      ho.insert(ho.begin() + xi + 1, y);
      hs.insert(hs.begin() + xi + 1, 1);
    }
    r.xs.push_back(y);
    int seg = ev.signs[k + 1];
    r.signs.push_back(seg);
    s *= seg;
  }
  r.arrival_side = s;
  return r;
}

inline void insert_at_end(Drawing& d, int w, int e, int f, int side) {
  auto& rot = d.rotation[w];
  auto it = std::find(rot.begin(), rot.end(), e);
  if (side > 0)
    rot.insert(it + 1, f);
  else
    rot.insert(it, f);
}

enum class CloneMode { nonorientable, orientable };

// Star-cloning gadget. Indices are 1-based as in the construction: e_1..e_s clockwise at u.
// `take` lists the indices that receive a new edge f_i; the last is s.
inline Drawing clone_gadget(const Drawing& d0, int u, const std::vector<int>& take, CloneMode mode, int t) {
  Drawing d = d0;
  auto& g = d.graph;
  const std::vector<int> e = [&] {
    std::vector<int> r{-1};
    for (int x : d0.rotation[u]) r.push_back(x);
    return r;
  }();
  const int s = static_cast<int>(e.size()) - 1;
  std::vector<int> w(s + 1, -1);
  for (int j = 1; j <= s; ++j) w[j] = g.other_end(e[j], u);

  int v = g.add_vertex(g.fresh_vertex_name(g.vertex_name(u) + "'"));
  d.rotation.emplace_back();
  std::vector<int> f(s + 1, -1);
  for (int i : take) {
    std::string name = g.vertex_name(v) + "-" + g.vertex_name(w[i]);
    f[i] = g.add_edge(name, v, w[i]);
    d.order.emplace_back();
    d.sign.emplace_back();
  }
  auto age = [&](int i, int j) { return ((j - i) % s + s) % s; };

  // Spiral crossings on each e_j, ordered from u by age.
  std::vector<std::vector<int>> on_e(s + 1);           // crossing ids from u outward
  std::vector<std::vector<std::pair<int, int>>> on_f(s + 1);  // (age, crossing) per f
  for (int j = 1; j <= s; ++j) {
    std::vector<int> who;
    for (int i : take)
      if (i != j) who.push_back(i);
    std::sort(who.begin(), who.end(), [&](int a, int b) { return age(a, j) < age(b, j); });
    bool e_from_u = g.edge(e[j]).u == u;
    for (int i : who) {
      // clockwise: (e toward u, f toward v, e away, f onward)
      std::pair<int, bool> toward{e[j], e_from_u}, away{e[j], !e_from_u};
      int x = add_crossing(d, e[j], f[i], {toward, {f[i], true}, away, {f[i], false}});
      on_e[j].push_back(x);
      on_f[i].push_back({age(i, j), x});
    }
  }
  // Rewrite e_j: new crossings before the old ones; crosscap on the innermost piece.
  std::vector<int> sigma0(s + 1);
  for (int j = 1; j <= s; ++j) {
    EdgeView ev = view_from(d0, e[j], u);
    sigma0[j] = ev.signs[0];
    EdgeView nv;
    nv.xs = on_e[j];
    nv.signs.assign(on_e[j].size(), 1);
    nv.xs.insert(nv.xs.end(), ev.xs.begin(), ev.xs.end());
    nv.signs.insert(nv.signs.end(), ev.signs.begin(), ev.signs.end());
    if (mode == CloneMode::nonorientable && j <= t) nv.signs[0] = -nv.signs[0];
    store_from(d, e[j], u, nv);
  }
  // New edges: first piece, spiral, shadow.
  for (int i : take) {
    auto sp = on_f[i];
    std::sort(sp.begin(), sp.end());
    EdgeView fv;
    int first = 1;
    if (mode == CloneMode::nonorientable && i <= t && i != s) first = (i % 2) ? -1 : 1;
    fv.signs.push_back(first);
    for (auto& [a, x] : sp) {
      fv.xs.push_back(x);
      fv.signs.push_back(1);
    }
    // exit piece: shadow e_i on the side facing the previous wedge (left, heading away from u)
    int start = static_cast<int>(on_e[i].size());
    ShadowResult sh = shadow(d, e[i], u, f[i], +1, start, sigma0[i]);
    fv.signs.back() *= sh.first_sign;
    for (std::size_t k = 0; k < sh.xs.size(); ++k) {
      fv.xs.push_back(sh.xs[k]);
      fv.signs.push_back(sh.signs[k]);
    }
    d.order[f[i]] = fv.xs;
    d.sign[f[i]] = fv.signs;
    insert_at_end(d, w[i], e[i], f[i], sh.arrival_side);
  }
  // Rotation at v.
  std::vector<int> vrot{f[s]};
  if (mode == CloneMode::nonorientable) {
    std::vector<int> bundle;  // inner to outer
    for (int j = t; j >= 1; --j) {
      std::reverse(bundle.begin(), bundle.end());
      bundle.insert(bundle.begin(), f[j]);
    }
    for (auto it = bundle.rbegin(); it != bundle.rend(); ++it) vrot.push_back(*it);
  } else {
    // clockwise: f_s, f_2, f_4, ..., f_2t, f_2t-1, ..., f_3, f_1
    for (int i = 2; i <= 2 * t; i += 2)
      if (f[i] >= 0 && i != s) vrot.push_back(f[i]);
    for (int i = 2 * t - 1; i >= 1; i -= 2)
      if (f[i] >= 0 && i != s) vrot.push_back(f[i]);
    // rotation at u: pairs swapped
    auto& ur = d.rotation[u];
    for (int k = 1; k + 1 <= 2 * t; k += 2) std::swap(ur[k - 1], ur[k]);
  }
  d.rotation[v] = vrot;
  return d;
}

// Postcondition check shared by every surgery: still a thrackle, genus grew by exactly d_eps.
inline void check_surgery(const Drawing& out, const SurfaceClass& before, int d_eps, bool want_orientable,
                          const std::string& what) {
  auto r = verify_thrackle(out);
  if (!r.is_thrackle || !r.surface) throw surgery_error(what + ": result is not a connected thrackle");
  if (r.surface->euler_genus != before.euler_genus + d_eps)
    throw surgery_error(what + ": Euler genus " + std::to_string(r.surface->euler_genus) + ", expected " +
                        std::to_string(before.euler_genus + d_eps));
  if (r.surface->orientable != want_orientable) throw surgery_error(what + ": wrong orientability");
}

inline SurfaceClass checked_input(const Drawing& d, int u, const std::string& what) {
  if (u < 0 || u >= d.graph.vertex_count()) throw std::domain_error(what + ": unknown vertex");
  auto r = verify_thrackle(d);
  if (!r.is_thrackle || !r.surface) throw std::domain_error(what + ": input is not a connected thrackle");
  return *r.surface;
}

inline std::vector<int> clone_indices(int last_regular, int s) {
  std::vector<int> take;
  for (int i = 1; i <= last_regular; ++i) take.push_back(i);
  take.push_back(s);
  return take;
}

}  // namespace detail

// New vertex v joined to the first t neighbours of u (clockwise) and its last one; adds t crosscaps.
inline Drawing clone_star_nonorientable(const Drawing& d, int u, int t) {
  auto before = detail::checked_input(d, u, "clone_star_nonorientable");
  int s = d.graph.degree(u);
  if (t < 1) throw std::domain_error("clone_star_nonorientable needs t >= 1");
  if (s < t + 1) throw std::domain_error("clone_star_nonorientable needs a vertex of degree at least $t+1$");
  Drawing out = detail::clone_gadget(d, u, detail::clone_indices(t, s), detail::CloneMode::nonorientable, t);
  detail::check_surgery(out, before, t, false, "clone_star_nonorientable");
  return out;
}

// New vertex v joined to the first 2t neighbours of u (clockwise) and its last one; adds t handles.
inline Drawing clone_star_orientable(const Drawing& d, int u, int t) {
  auto before = detail::checked_input(d, u, "clone_star_orientable");
  int s = d.graph.degree(u);
  if (t < 1) throw std::domain_error("clone_star_orientable needs t >= 1");
  if (s < 2 * t + 1) throw std::domain_error("clone_star_orientable needs a vertex of degree at least $2t+1$");
  Drawing out = detail::clone_gadget(d, u, detail::clone_indices(2 * t, s), detail::CloneMode::orientable, t);
  detail::check_surgery(out, before, 2 * t, before.orientable, "clone_star_orientable");
  return out;
}

namespace detail {

struct PlannedEdge {
  std::string u, w;  // w may be a vertex that does not exist yet
  int jumps;
};

// Routes the planned edges one by one, backtracking over at most `width` routes per edge.
inline std::optional<Drawing> route_edges(const Drawing& d, const std::vector<PlannedEdge>& plan, int width,
                                          long budget) {
  std::optional<Drawing> out;
  std::function<bool(const Drawing&, std::size_t)> place = [&](const Drawing& cur, std::size_t i) {
    if (i == plan.size()) {
      out = cur;
      return true;
    }
    int u = cur.graph.vertex_id(plan[i].u), w = cur.graph.vertex_id(plan[i].w);
    FaceIndex fx = index_faces(cur);
    bool ok = false;
    int tried = 0;
    enumerate_routes(cur, fx, {u, w, plan[i].jumps, budget, {}}, [&](const Route& r) {
      ok = place(apply_route(cur, fx, u, w, plan[i].w, "", r), i + 1);
      return ok || ++tried >= width;
    });
    return ok;
  };
  place(d, 0);
  return out;
}

inline void require_orientable(const SurfaceClass& s, const std::string& what) {
  if (!s.orientable) throw std::domain_error(what + " is implemented for orientable drawings only");
}

}  // namespace detail

// One-handle extension: new vertices p, q with edges pq, pt, ps, qt next to the edge st.
inline Drawing cn_handle(const Drawing& d, int st) {
  if (st < 0 || st >= d.graph.edge_count()) throw std::domain_error("cn_handle: unknown edge");
  const auto& g = d.graph;
  auto before = detail::checked_input(d, g.edge(st).u, "cn_handle");
  detail::require_orientable(before, "cn_handle");
  std::string s = g.vertex_name(g.edge(st).u), t = g.vertex_name(g.edge(st).v);
  std::string p = g.fresh_vertex_name("p"), q = g.fresh_vertex_name("q");
  auto out = detail::route_edges(d, {{t, p, 0}, {p, s, 1}, {p, q, 0}, {t, q, 0}}, 20, 100000);
  if (!out) throw surgery_error("cn_handle: no routing found");
  detail::check_surgery(*out, before, 2, true, "cn_handle");
  return *out;
}

// New vertex joined to every neighbour of u.
inline Drawing clone_star_full(const Drawing& d, int u) {
  auto before = detail::checked_input(d, u, "clone_star_full");
  int du = d.graph.degree(u);
  if (du < 1) throw std::domain_error("clone_star_full needs a vertex of degree at least 1");
  int t = du / 2;  // = ceil((du - 1) / 2)
  // odd du: indices 1..du-1 plus s; even du: the last regular index coincides with s
  auto take = detail::clone_indices(du % 2 ? 2 * t : 2 * t - 1, du);
  Drawing out = detail::clone_gadget(d, u, take, detail::CloneMode::orientable, t);
  detail::check_surgery(out, before, 2 * t, before.orientable, "clone_star_full");
  return out;
}

// As clone_star_full, plus the edge between u and its clone routed through two further handles.
inline Drawing clone_star_full_edge(const Drawing& d, int u) {
  auto before = detail::checked_input(d, u, "clone_star_full_edge");
  detail::require_orientable(before, "clone_star_full_edge");
  Drawing c = clone_star_full(d, u);
  const std::string un = d.graph.vertex_name(u), vn = c.graph.vertex_name(c.graph.vertex_count() - 1);
  auto out = detail::route_edges(c, {{vn, un, 2}}, 1, 2000000);
  if (!out) throw surgery_error("clone_star_full_edge: no routing found");
  int du = d.graph.degree(u);
  detail::check_surgery(*out, before, 2 * (du / 2) + 4, true, "clone_star_full_edge");
  return *out;
}

}  // namespace thrackle
