#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thrackle {

// Order ids so that "x2" sorts before "x10".
inline bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
      std::size_t za = na.find_first_not_of('0'), zb = nb.find_first_not_of('0');
      na = za == std::string::npos ? "" : na.substr(za);
      nb = zb == std::string::npos ? "" : nb.substr(zb);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

struct GraphEdge {
  std::string name;
  int u = -1;  // first declared endpoint
  int v = -1;
};

class AbstractGraph {
 public:
  int add_vertex(const std::string& name) {
    if (vertex_index_.count(name)) throw std::invalid_argument("duplicate vertex " + name);
    vertex_index_[name] = vertex_count();
    vertex_names_.push_back(name);
    incident_.emplace_back();
    return vertex_count() - 1;
  }

  int add_edge(const std::string& name, int u, int v) {
    if (edge_index_.count(name)) throw std::invalid_argument("duplicate edge " + name);
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
      throw std::invalid_argument("edge " + name + " has an unknown endpoint");
    if (u == v) throw std::invalid_argument("edge " + name + " is a loop");
    if (find_edge(u, v) >= 0) throw std::invalid_argument("edge " + name + " is parallel to an existing edge");
    int id = edge_count();
    edge_index_[name] = id;
    edges_.push_back({name, u, v});
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    pair_index_[key(u, v)] = id;
    return id;
  }
  int add_edge(int u, int v) { return add_edge(vertex_names_[u] + "-" + vertex_names_[v], u, v); }

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const GraphEdge& edge(int e) const { return edges_[e]; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  int degree(int v) const { return static_cast<int>(incident_[v].size()); }

  int vertex_id(const std::string& name) const {
    auto it = vertex_index_.find(name);
    return it == vertex_index_.end() ? -1 : it->second;
  }
  int edge_id(const std::string& name) const {
    auto it = edge_index_.find(name);
    return it == edge_index_.end() ? -1 : it->second;
  }
  int find_edge(int u, int v) const {
    auto it = pair_index_.find(key(u, v));
    return it == pair_index_.end() ? -1 : it->second;
  }
  int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
  bool adjacent_edges(int e, int f) const {
    const auto& a = edges_[e];
    const auto& b = edges_[f];
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
  }
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int e : incident_[v]) out.push_back(other_end(e, v));
    return out;
  }

  std::string fresh_vertex_name(const std::string& stem) const {
    if (!vertex_index_.count(stem)) return stem;
    for (int i = 1;; ++i)
      if (!vertex_index_.count(stem + std::to_string(i))) return stem + std::to_string(i);
  }

 private:
  static std::pair<int, int> key(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

  std::vector<std::string> vertex_names_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> incident_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> edge_index_;
  std::map<std::pair<int, int>, int> pair_index_;
};

struct IndependentPairs {
  long long count = 0;
  std::vector<std::pair<int, int>> pairs;
};

inline IndependentPairs independent_pairs(const AbstractGraph& g) {
  IndependentPairs out;
  long long m = g.edge_count();
  out.count = m * (m - 1) / 2;
  for (int v = 0; v < g.vertex_count(); ++v) {
    long long d = g.degree(v);
    out.count -= d * (d - 1) / 2;
  }
  for (int e = 0; e < g.edge_count(); ++e)
    for (int f = e + 1; f < g.edge_count(); ++f)
      if (!g.adjacent_edges(e, f)) out.pairs.push_back({e, f});
  return out;
}

// Named small graphs.
namespace graphs {

inline AbstractGraph cycle(int k) {
  if (k < 3) throw std::domain_error("cycle needs k >= 3");
  AbstractGraph g;
  for (int i = 0; i < k; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

inline AbstractGraph path(int n) {
  if (n < 2) throw std::domain_error("path needs n >= 2");
  AbstractGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline AbstractGraph star(int n) {
  if (n < 1) throw std::domain_error("star needs n >= 1");
  AbstractGraph g;
  g.add_vertex("c");
  for (int i = 1; i <= n; ++i) {
    g.add_vertex(std::to_string(i));
    g.add_edge(0, i);
  }
  return g;
}

inline AbstractGraph complete(int n) {
  if (n < 1) throw std::domain_error("complete graph needs n >= 1");
  AbstractGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline AbstractGraph complete_bipartite(int m, int n) {
  AbstractGraph g;
  for (int i = 0; i < m; ++i) g.add_vertex("a" + std::to_string(i));
  for (int j = 0; j < n; ++j) g.add_vertex("b" + std::to_string(j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
  return g;
}

inline AbstractGraph wheel(int k) {
  if (k < 3) throw std::domain_error("wheel needs k >= 3");
  AbstractGraph g;
  for (int i = 0; i < k; ++i) g.add_vertex(std::to_string(i));
  g.add_vertex("h");
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  for (int i = 0; i < k; ++i) g.add_edge(k, i);
  return g;
}

// Path 1..2k, a joined to odd path vertices, b to even ones.
inline AbstractGraph gk(int k) {
  if (k < 1) throw std::domain_error("G_k needs k >= 1");
  AbstractGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  for (int i = 1; i <= 2 * k; ++i) g.add_vertex(std::to_string(i));
  for (int i = 1; i < 2 * k; ++i) g.add_edge(i + 1, i + 2);
  for (int i = 1; i <= 2 * k; ++i) g.add_edge(i % 2 ? 0 : 1, i + 1);
  return g;
}

inline AbstractGraph by_name(const std::string& name) {
  auto num = [&](std::size_t from) { return std::stoi(name.substr(from)); };
  if (name.size() == 2 && name[0] == 'c' && std::isdigit(static_cast<unsigned char>(name[1]))) return cycle(num(1));
  if (name == "k4") return complete(4);
  if (name == "k5") return complete(5);
  if (name == "k33") return complete_bipartite(3, 3);
  if (name.rfind("path-", 0) == 0) return path(num(5));
  if (name.rfind("star-", 0) == 0) return star(num(5));
  throw std::invalid_argument("unknown builtin graph '" + name + "'");
}

}  // namespace graphs
}  // namespace thrackle
