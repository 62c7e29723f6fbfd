// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "thrackle/bounds.hpp"
#include "thrackle/catalog.hpp"
#include "thrackle/search.hpp"
#include "thrackle/surgery.hpp"

using namespace thrackle;

namespace {

std::vector<Drawing> produced;  // everything built here, for the bound sweep

struct Check {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

const Drawing& keep(Drawing d) {
  produced.push_back(std::move(d));
  return produced.back();
}

bool has_surface(const Drawing& d, bool orientable, int eps) {
  auto r = verify_thrackle(d);
  return r.is_thrackle && r.surface && r.surface->orientable == orientable && r.surface->euler_genus == eps;
}

void shipped_drawings(Check& c) {
  struct Want {
    const char* name;
    bool orientable;
    int eps;
  };
  for (auto w : {Want{"k33_torus", true, 2}, Want{"k4_torus", true, 2}, Want{"k5_triple_torus", true, 6},
                 Want{"w7_projective", false, 1}}) {
    const auto& d = keep(fixed_drawing(w.name));
    c.expect(has_surface(d, w.orientable, w.eps), std::string(w.name) + " surface mismatch");
  }
  const auto& g5 = keep(fixed_drawing("g5_torus"));
  auto r = verify_thrackle(g5);
  c.expect(r.is_thrackle && r.surface && r.surface->orientable && r.surface->euler_genus <= 2, "g5_torus surface");
}

void orientable_family(Check& c) {
  for (int g = 2; g <= 5; ++g) {
    const auto& d = keep(mainor_family(g, 2 * g - 1));
    long long n = d.graph.vertex_count(), m = d.graph.edge_count();
    c.expect(has_surface(d, true, 2 * g), "g=" + std::to_string(g) + " surface");
    c.expect(m == 2 * n + 2 * g - 8, "g=" + std::to_string(g) + " edge count");
    if (n > 8) c.expect(conjecture1_check(n, m, g) == ConjectureVerdict::violates, "g=" + std::to_string(g) + " verdict");
  }
}

void nonorientable_family(Check& c) {
  for (int g = 2; g <= 6; ++g) {
    const auto& d = keep(mainnon_family(g, g % 2 ? g : g + 1));
    long long n = d.graph.vertex_count(), m = d.graph.edge_count();
    c.expect(has_surface(d, false, g), "g=" + std::to_string(g) + " surface");
    c.expect(m == 2 * n + g - 4, "g=" + std::to_string(g) + " edge count");
  }
}

void handle_iteration(Check& c) {
  Drawing d = keep(odd_cycle_sphere(5));
  for (int g = 1; g <= 5; ++g) {
    d = keep(cn_handle(d, 0));
    c.expect(d.graph.edge_count() - d.graph.vertex_count() == 2 * g, "m-n at g=" + std::to_string(g));
    c.expect(has_surface(d, true, 2 * g), "surface at g=" + std::to_string(g));
  }
}

void search_oracles(Check& c) {
  auto c4 = min_euler_genus(graphs::cycle(4), SearchMode::orientable);
  c.expect(c4.exhausted && c4.min_orientable == 2, "C4 orientable");
  auto c4all = min_euler_genus(graphs::cycle(4), SearchMode::all);
  c.expect(c4all.exhausted && c4all.min_nonorientable == 1, "C4 all");
  auto c5 = min_euler_genus(graphs::cycle(5), SearchMode::orientable);
  c.expect(c5.exhausted && c5.min_orientable == 0, "C5");
  auto k4 = min_euler_genus(graphs::complete(4), SearchMode::orientable);
  c.expect(k4.exhausted && k4.min_orientable == 2, "K4");
  for (auto* r : {&c4, &c4all, &c5, &k4}) {
    if (r->witness_orientable) keep(*r->witness_orientable);
    if (r->witness_nonorientable) keep(*r->witness_nonorientable);
  }
}

void genus_tables(Check& c) {
  auto k5 = tg_bounds_complete(5);
  c.expect(k5.lower() == 1 && k5.upper() == 3, "tg(K5) bounds");
  c.expect(surface_of(keep(fixed_drawing("k5_triple_torus"))).genus == 3, "K5 witness");
  auto k6 = keep(clone_star_full_edge(fixed_drawing("k5_triple_torus"), 0));
  c.expect(tg_bounds_complete(6).upper() == 7 && has_surface(k6, true, 14), "K6 witness");
  auto k33 = tg_bounds_bipartite(3, 3);
  c.expect(k33.lower() == 1 && k33.upper() == 1, "tg(K33) bounds");
  c.expect(has_surface(fixed_drawing("k33_torus"), true, 2), "K33 witness");
}

void arithmetic(Check& c) {
  c.expect(independent_pairs(graphs::complete_bipartite(3, 3)).count == 18, "I(K33)");
  c.expect(independent_pairs(graphs::complete(5)).count == 15, "I(K5)");
  c.expect(tg_generic_uppers(graphs::complete(5)).find("rotation-genus")->value == 10, "rotation-genus bound");
  auto cr = tg_generic_uppers(graphs::complete(5), std::pair<long long, long long>{0, 5});
  c.expect(cr.find("per-pair-handles")->value == 20, "per-pair handle bound");
}

void properties(Check& c) {
  std::vector<Drawing> corpus;
  for (int k : {5, 7}) corpus.push_back(odd_cycle_sphere(k));
  for (int k : {3, 7}) corpus.push_back(wheel_projective(k));
  for (int k : {2, 5}) corpus.push_back(gk_torus(k));
  for (const char* n : {"k33_torus", "k4_torus", "k5_triple_torus"}) corpus.push_back(fixed_drawing(n));
  corpus.push_back(mainnon_family(3, 3));
  std::mt19937 rng(99);
  for (const auto& d : corpus) {
    auto s = to_scheme(d);
    auto f = trace_faces(s);
    std::vector<int> seen(s.segment_count(), 0);
    for (const auto& face : f.faces)
      for (Dart x : face) ++seen[dart_segment(x)];
    c.expect(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 2; }), "double cover");
    auto lengths = f.lengths;
    std::sort(lengths.begin(), lengths.end());
    auto flipped = s;
    for (int i = 0; i < 10; ++i) {
      flipped = flipped.local_switch(static_cast<int>(rng() % s.node_count()));
      auto l2 = trace_faces(flipped).lengths;
      std::sort(l2.begin(), l2.end());
      c.expect(l2 == lengths && euler_genus(flipped) == euler_genus(s), "vertex flip");
    }
    c.expect(serialize(parse_drawing(serialize(d))) == serialize(d), "round trip");
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto& d = corpus[trial % corpus.size()];
    std::set<int> keep_edges;
    for (int e = 0; e < d.graph.edge_count(); ++e)
      if (rng() % 3) keep_edges.insert(e);
    if (keep_edges.empty()) keep_edges.insert(0);
    auto sub = restrict_to(d, keep_edges);
    c.expect(verify_thrackle(sub).is_thrackle, "restriction " + std::to_string(trial));
    if (sub.graph.vertex_count() >= 3 && planarize(sub).scheme.connected()) keep(sub);
  }
}

void bound_sweep(Check& c) {
  for (const auto& d : produced) {
    auto r = verify_thrackle(d);
    if (!r.is_thrackle || !r.surface) {
      c.expect(false, "non-thrackle in corpus");
      continue;
    }
    long long n = d.graph.vertex_count(), m = d.graph.edge_count();
    const auto& s = *r.surface;
    c.expect(m <= (s.orientable ? 2 * n + 4 * s.genus - 2 : 2 * n + 2 * s.genus - 2), "connected surface bound");
    if (n >= 3) {
      auto rep = max_edges_thrackle(n, 1, 0, 0, s, false, true);
      c.expect(m <= rep.find("components-euler")->value, "components bound");
    }
  }
  c.why << (c.ok ? "" : "; ") << produced.size() << " drawings";
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<void(Check&)> run;
    double limit;  // seconds
  };
  std::vector<Criterion> all{
      {"1 shipped drawings verify on their surfaces", shipped_drawings, 1.0},
      {"2 orientable family counts and conjecture violation", orientable_family, 5.0},
      {"3 nonorientable family counts", nonorientable_family, 5.0},
      {"4 iterated handle construction from C5", handle_iteration, 2.0},
      {"6 search oracles C4/C5/K4", search_oracles, 60.0},
      {"7 thrackle genus tables with witnesses", genus_tables, 1e9},
      {"8 arithmetic spot checks", arithmetic, 1e9},
      {"9 property suites", properties, 30.0},
      {"5 edge bounds over every drawing above", bound_sweep, 1e9},
  };
  int failed = 0;
  std::map<std::string, std::string> lines;  // printed in criterion order
  for (auto& c : all) {
    Check chk;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(chk);
    } catch (const std::exception& e) {
      chk.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) chk.expect(false, "over time budget");
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s  criterion %s (%.2fs)%s%s\n", chk.ok ? "PASS" : "FAIL", c.label, secs,
                  chk.why.str().empty() ? "" : ": ", chk.why.str().c_str());
    lines[c.label] = buf;
    if (!chk.ok) ++failed;
  }
  for (const auto& [label, line] : lines) std::fputs(line.c_str(), stdout);
  return failed ? 1 : 0;
}
