#pragma once

// Exhaustive enumeration of thrackle structures of a small graph: rotations, crossing orders,
// crossing bits and (in "all" mode) free segment signs.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "thrackle/drawing.hpp"
#include "thrackle/io.hpp"

namespace thrackle {

enum class SearchMode { orientable, all };

struct search_budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchResult {
  std::optional<int> min_orientable;      // least Euler genus among orientable structures
  std::optional<int> min_nonorientable;
  std::optional<Drawing> witness_orientable;
  std::optional<Drawing> witness_nonorientable;
  long long count = 0;
  bool exhausted = false;
};

class SearchSpace {
 public:
  SearchSpace(AbstractGraph g, SearchMode mode) : mode_(mode) {
    base_ = bare_drawing(std::move(g));
    const auto& gr = base_.graph;
    auto ip = independent_pairs(gr);
    pairs_ = ip.pairs;
    on_edge_.assign(gr.edge_count(), {});
    for (int x = 0; x < static_cast<int>(pairs_.size()); ++x) {
      on_edge_[pairs_[x].first].push_back(x);
      on_edge_[pairs_[x].second].push_back(x);
      base_.crossings.push_back({"x" + std::to_string(x), pairs_[x].first, pairs_[x].second, 0});
    }
    for (int v = 0; v < gr.vertex_count(); ++v) radix_.push_back(factorial(std::max(0, gr.degree(v) - 1)));
    for (int e = 0; e < gr.edge_count(); ++e) radix_.push_back(factorial(static_cast<int>(on_edge_[e].size())));
    for (std::size_t x = 0; x < pairs_.size(); ++x) radix_.push_back(2);
    if (mode_ == SearchMode::all) {
      long long free_signs = gr.edge_count() + static_cast<long long>(pairs_.size()) - gr.vertex_count() + 1;
      for (long long i = 0; i < free_signs; ++i) radix_.push_back(2);
    }
  }

  const AbstractGraph& graph() const { return base_.graph; }
  int independent_count() const { return static_cast<int>(pairs_.size()); }
  const std::vector<long long>& radices() const { return radix_; }

  // Size of the space as a floating estimate (may exceed 64 bits before budget checks).
  long double size_estimate() const {
    long double s = 1;
    for (long long r : radix_) s *= static_cast<long double>(r);
    return s;
  }
  long long size() const {
    long long s = 1;
    for (long long r : radix_) s *= r;
    return s;
  }

  // Structure number idx in mixed radix, first coordinate most significant.
  Drawing structure(long long idx) const {
    std::vector<long long> digit(radix_.size());
    for (std::size_t i = radix_.size(); i-- > 0;) {
      digit[i] = idx % radix_[i];
      idx /= radix_[i];
    }
    Drawing d = base_;
    const auto& g = d.graph;
    std::size_t c = 0;
    for (int v = 0; v < g.vertex_count(); ++v, ++c) {
      const auto& inc = g.incident(v);
      if (inc.empty()) continue;
      std::vector<int> rest(inc.begin() + 1, inc.end());
      d.rotation[v] = {inc[0]};
      for (int e : nth_permutation(rest, digit[c])) d.rotation[v].push_back(e);
    }
    for (int e = 0; e < g.edge_count(); ++e, ++c) {
      d.order[e] = nth_permutation(on_edge_[e], digit[c]);
      d.sign[e].assign(d.order[e].size() + 1, 1);
    }
    for (std::size_t x = 0; x < pairs_.size(); ++x, ++c) d.crossings[x].bit = static_cast<int>(digit[c]);
    if (mode_ == SearchMode::all) {
      auto free = free_segments(d);
      for (auto [e, k] : free) d.sign[e][k] = digit[c++] ? -1 : 1;
    }
    return d;
  }

 private:
  static long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  }

  static std::vector<int> nth_permutation(std::vector<int> items, long long n) {
    std::vector<int> out;
    while (!items.empty()) {
      long long f = factorial(static_cast<int>(items.size()) - 1);
      std::size_t i = static_cast<std::size_t>(n / f);
      n %= f;
      out.push_back(items[i]);
      items.erase(items.begin() + static_cast<long>(i));
    }
    return out;
  }

  // Segments (edge, index) outside a BFS spanning tree of the planarized map, in segment order.
  static std::vector<std::pair<int, int>> free_segments(const Drawing& d) {
    PlanarizedMap pm = planarize(d);
    const auto& s = pm.scheme;
    std::vector<std::vector<std::pair<int, int>>> adj(s.node_count());  // (segment, other node)
    for (int i = 0; i < s.segment_count(); ++i) {
      adj[s.segment(i).a].push_back({i, s.segment(i).b});
      adj[s.segment(i).b].push_back({i, s.segment(i).a});
    }
    std::vector<char> seen(s.node_count(), 0), tree(s.segment_count(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (auto [seg, y] : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          tree[seg] = 1;
          q.push(y);
        }
    }
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < s.segment_count(); ++i)
      if (!tree[i]) out.push_back(pm.segment_edge[i]);
    return out;
  }

  SearchMode mode_;
  Drawing base_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> on_edge_;
  std::vector<long long> radix_;
};

namespace detail {

inline void check_budget(const SearchSpace& sp, int budget) {
  if (sp.independent_count() > budget) {
    std::ostringstream msg;
    msg << "search refused: " << sp.independent_count() << " independent pairs exceed the budget of " << budget
        << "; estimated space size " << std::scientific << static_cast<double>(sp.size_estimate());
    throw search_budget_error(msg.str());
  }
  if (sp.size_estimate() > 9.0e18L) throw search_budget_error("search refused: space size exceeds 64-bit indexing");
}

inline void require_connected(const AbstractGraph& g) {
  if (g.edge_count() == 0) throw std::domain_error("search needs at least one edge");
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (comp[w] < 0) {
        comp[w] = 0;
        stack.push_back(w);
      }
  }
  if (std::count(comp.begin(), comp.end(), -1) > 0) throw std::domain_error("search needs a connected graph without isolated vertices");
}

struct Best {
  std::optional<int> eps;
  std::string text;
  std::optional<Drawing> witness;

  void offer(int e, const Drawing& d) {
    if (eps && e > *eps) return;
    std::string s = serialize(d);
    if (!eps || e < *eps || s < text) {
      eps = e;
      text = std::move(s);
      witness = d;
    }
  }
  void merge(const Best& o) {
    if (!o.eps) return;
    if (!eps || *o.eps < *eps || (*o.eps == *eps && o.text < text)) *this = o;
  }
};

}  // namespace detail

// Calls cb on every structure in index order.
inline long long enumerate_structures(const AbstractGraph& g, SearchMode mode, const std::function<void(const Drawing&)>& cb,
                                      int budget = 12) {
  detail::require_connected(g);
  SearchSpace sp(g, mode);
  detail::check_budget(sp, budget);
  const long long n = sp.size();
  for (long long i = 0; i < n; ++i) cb(sp.structure(i));
  return n;
}

// Least Euler genus per orientability class. The space is split into chunks by its leading coordinate
// and scanned concurrently; merging takes the minimum, ties broken by the smaller serialization.
inline SearchResult min_euler_genus(const AbstractGraph& g, SearchMode mode, int budget = 12, unsigned threads = 0) {
  detail::require_connected(g);
  SearchSpace sp(g, mode);
  detail::check_budget(sp, budget);
  const long long n = sp.size();
  // leading coordinate with more than one value
  long long chunks = 1, stride = n;
  for (long long r : sp.radices()) {
    if (r > 1) {
      chunks = r;
      stride = n / r;
      break;
    }
    stride /= r;
  }
  if (chunks == 1) stride = n;
  struct Part {
    detail::Best orientable, nonorientable;
  };
  std::vector<Part> parts(static_cast<std::size_t>(chunks));
  auto scan = [&](long long c) {
    Part& p = parts[static_cast<std::size_t>(c)];
    for (long long i = c * stride; i < (c + 1) * stride; ++i) {
      Drawing d = sp.structure(i);
      SurfaceClass s = surface_of(d);
      (s.orientable ? p.orientable : p.nonorientable).offer(s.euler_genus, d);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  std::atomic<long long> next{0};
  for (unsigned t = 0; t < std::min<long long>(threads, chunks); ++t)
    pool.emplace_back([&] {
      for (long long c; (c = next++) < chunks;) scan(c);
    });
  for (auto& th : pool) th.join();
  detail::Best bo, bn;
  for (const auto& p : parts) {
    bo.merge(p.orientable);
    bn.merge(p.nonorientable);
  }
  SearchResult r;
  r.count = n;
  r.exhausted = true;
  r.min_orientable = bo.eps;
  r.witness_orientable = bo.witness;
  r.min_nonorientable = bn.eps;
  r.witness_nonorientable = bn.witness;
  return r;
}

}  // namespace thrackle
