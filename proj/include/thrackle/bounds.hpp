#pragma once

// Closed-form edge and thrackle-genus bounds, all in exact arithmetic.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "thrackle/drawing.hpp"
#include "thrackle/graph.hpp"

namespace thrackle {

using Rational = boost::rational<long long>;

enum class BoundKind { upper, lower };

struct BoundEntry {
  std::string id;        // formula id, e.g. "components-euler"
  BoundKind kind;
  long long value;       // integer bound (ceiling for real-valued lower bounds)
  Rational exact;        // the formula's exact value before rounding
  std::string citation;  // short citation key
  bool boundary = false; // exact value is an integer, so rounding was not needed
};

struct BoundReport {
  std::string query;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }
  std::optional<long long> best(BoundKind kind) const {
    std::optional<long long> out;
    for (const auto& e : entries)
      if (e.kind == kind) out = !out ? e.value : kind == BoundKind::upper ? std::min(*out, e.value) : std::max(*out, e.value);
    return out;
  }
  std::optional<long long> upper() const { return best(BoundKind::upper); }
  std::optional<long long> lower() const { return best(BoundKind::lower); }
  // Every lower bound is at most every upper bound.
  bool consistent() const {
    auto lo = lower(), up = upper();
    return !lo || !up || *lo <= *up;
  }
};

namespace detail {

inline long long ceil_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

inline long long floor_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline BoundEntry exact_entry(std::string id, BoundKind kind, long long v, std::string cite) {
  return {std::move(id), kind, v, Rational(v), std::move(cite), true};
}

inline BoundEntry lower_ceiling(std::string id, const Rational& r, std::string cite) {
  return {std::move(id), BoundKind::lower, ceil_of(r), r, std::move(cite), r.denominator() == 1};
}

inline std::string surface_label(const SurfaceClass& s) {
  return (s.orientable ? "S_" : "N_") + std::to_string(s.genus);
}

}  // namespace detail

// Upper bounds on the edge count of a (generalized) thrackle. k components, s of them single vertices
// and t of them single edges; Euler genus taken from the surface.
inline BoundReport max_edges_thrackle(long long n, long long k, long long s, long long t, const SurfaceClass& surface,
                                      bool bipartite, bool connected) {
  if (n < 1 || k < 1 || s < 0 || t < 0) throw std::domain_error("max_edges_thrackle: n, k >= 1 and s, t >= 0");
  if (s + t > k) throw std::domain_error("max_edges_thrackle: s + t exceeds the component count");
  if (connected && k != 1) throw std::domain_error("max_edges_thrackle: a connected graph has one component");
  if (s + 2 * t > n) throw std::domain_error("max_edges_thrackle: small components exceed n");
  const long long eps = surface.euler_genus, g = surface.genus;
  BoundReport r;
  r.query = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " s=" + std::to_string(s) + " t=" +
            std::to_string(t) + " on " + detail::surface_label(surface);
  if (s == 0 && t == 0) r.entries.push_back(detail::exact_entry("components-euler", BoundKind::upper, 2 * n - 4 * k + 2 * eps + 2, "edges-vs-euler-genus"));
  if (k > s + t)
    r.entries.push_back(detail::exact_entry("small-components", BoundKind::upper, 2 * n - 4 * k + 2 * eps + 2 * s + t + 2, "edges-vs-euler-genus"));
  if (bipartite && s == 0 && t == 0 && surface.orientable)
    r.entries.push_back(detail::exact_entry("bipartite-orientable", BoundKind::upper, 2 * n - 4 * k + 4 * g, "bipartite-edges"));
  if (connected && surface.orientable) r.entries.push_back(detail::exact_entry("connected-orientable", BoundKind::upper, 2 * n - 2 + 4 * g, "orientable-edges"));
  if (connected && g > 0)
    r.entries.push_back(detail::exact_entry("connected-surface", BoundKind::upper,
                                            surface.orientable ? 2 * n + 4 * g - 2 : 2 * n + 2 * g - 2, "edges-vs-euler-genus"));
  return r;
}

enum class ConjectureVerdict { satisfies, violates };

// The disproved conjecture: a thrackle on S_g has m <= n + 2g.
inline ConjectureVerdict conjecture1_check(long long n, long long m, long long g) {
  if (n < 1 || m < 0 || g < 0) throw std::domain_error("conjecture1_check: n >= 1, m >= 0, g >= 0");
  return m > n + 2 * g ? ConjectureVerdict::violates : ConjectureVerdict::satisfies;
}

// Thrackle genus of K_n.
inline BoundReport tg_bounds_complete(long long n) {
  if (n < 3) throw std::domain_error("tg_bounds_complete needs n >= 3");
  BoundReport r;
  r.query = "tg(K_" + std::to_string(n) + ")";
  if (n == 3) {
    r.entries.push_back(detail::exact_entry("triangle", BoundKind::upper, 0, "odd-cycle"));
    r.entries.push_back(detail::exact_entry("trivial", BoundKind::lower, 0, "definition"));
    return r;
  }
  if (n == 4) {
    r.entries.push_back(detail::exact_entry("k4-torus", BoundKind::upper, 1, "k4-torus-drawing"));
    r.entries.push_back(detail::exact_entry("c4-sphere", BoundKind::lower, 1, "c4-case-analysis"));
    return r;
  }
  long long up = n % 2 == 0 ? (n * n + 4 * n - 32) / 4 : (n * n + 4 * n - 33) / 4;
  r.entries.push_back(detail::exact_entry("complete-clone", BoundKind::upper, up, "clone-with-edge"));
  r.entries.push_back(detail::lower_ceiling("complete-genus", Rational(n * n - 5 * n + 4, 8), "subgraph-genus"));
  return r;
}

// Thrackle genus of K_{m,n}.
inline BoundReport tg_bounds_bipartite(long long m, long long n) {
  if (m < 1 || n < 1) throw std::domain_error("tg_bounds_bipartite needs m, n >= 1");
  BoundReport r;
  r.query = "tg(K_" + std::to_string(m) + "," + std::to_string(n) + ")";
  long long lo = std::min(m, n), hi = std::max(m, n);
  if (lo == 1) {
    r.entries.push_back(detail::exact_entry("star", BoundKind::upper, 0, "star-sphere"));
    r.entries.push_back(detail::exact_entry("trivial", BoundKind::lower, 0, "definition"));
  } else if (lo == 2) {
    r.entries.push_back(detail::exact_entry("k2n-clone", BoundKind::upper, hi / 2, "clone-star"));  // ceil((hi-1)/2)
    r.entries.push_back(detail::exact_entry("c4-sphere", BoundKind::lower, 1, "c4-case-analysis"));
  } else {
    long long p = (m - 1) * (n - 1);
    long long up = (m % 2 == 0 && n % 2 == 0) ? (p - 1) / 2 : p / 2 - 1;
    r.entries.push_back(detail::exact_entry("kmn-clone", BoundKind::upper, up, "clone-star"));
    r.entries.push_back(detail::lower_ceiling("kmn-genus", Rational((m - 2) * (n - 2), 4), "ringel-kmn-genus"));
    r.entries.push_back(detail::exact_entry("c4-sphere", BoundKind::lower, 1, "c4-case-analysis"));
  }
  return r;
}

// Generic upper bounds. The witness variant uses a drawing of G on an orientable surface of genus h
// with c crossings; the abstract variant only needs the graph.
inline BoundReport tg_generic_uppers(const AbstractGraph& g, std::optional<std::pair<long long, long long>> witness = {}) {
  BoundReport r;
  r.query = "tg(G), n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count());
  long long I = independent_pairs(g).count;
  if (witness) {
    auto [h, c] = *witness;
    if (c > I) throw std::domain_error("tg_generic_uppers: more crossings than independent pairs");
    if (h < 0 || c < 0) throw std::domain_error("tg_generic_uppers: negative genus or crossing count");
    r.entries.push_back(detail::exact_entry("per-pair-handles", BoundKind::upper, h + 2 * (I - c), "cottingham-ringeisen"));
  }
  Rational gr(g.edge_count() - g.vertex_count() + I + 1, 2);
  r.entries.push_back({"rotation-genus", BoundKind::upper, detail::floor_of(gr), gr, "green-ringeisen", gr.denominator() == 1});
  return r;
}

inline BoundReport tg_generic_uppers(const Drawing& d) {
  auto s = surface_of(d);
  if (!s.orientable) throw std::domain_error("tg_generic_uppers: witness drawing must be orientable");
  return tg_generic_uppers(d.graph, std::pair<long long, long long>{s.genus, static_cast<long long>(d.crossings.size())});
}

// The K_{2,n} lower bound is asymptotic with no constant; only an annotation is available.
inline std::string k2n_lower_note(long long /*n*/) { return "Omega(n^{1/3}), no constant available"; }

}  // namespace thrackle
