#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "thrackle/drawing.hpp"

namespace thrackle {

struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

namespace detail {

struct Line {
  int no;
  std::vector<std::string> tok;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line l{no, {}};
    std::string t;
    while (ls >> t) l.tok.push_back(t);
    if (!l.tok.empty()) out.push_back(std::move(l));
  }
  return out;
}

}  // namespace detail

inline Drawing parse_drawing(const std::string& text) {
  auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].tok != std::vector<std::string>{"thrackle", "v1"})
    throw parse_error(lines.empty() ? 1 : lines[0].no, "expected header 'thrackle v1'");

  Drawing d;
  auto& g = d.graph;
  std::map<std::string, std::vector<const detail::Line*>> by_kind;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& k = lines[i].tok[0];
    if (k != "vertex" && k != "edge" && k != "rot" && k != "cross" && k != "order" && k != "sign")
      throw parse_error(lines[i].no, "unknown directive '" + k + "'");
    by_kind[k].push_back(&lines[i]);
  }
  auto arity = [](const detail::Line& l, std::size_t n, bool at_least = false) {
    if (at_least ? l.tok.size() < n : l.tok.size() != n)
      throw parse_error(l.no, "wrong number of fields for '" + l.tok[0] + "'");
  };
  auto vertex = [&](const detail::Line& l, const std::string& id) {
    int v = g.vertex_id(id);
    if (v < 0) throw parse_error(l.no, "unknown vertex '" + id + "'");
    return v;
  };
  auto edge = [&](const detail::Line& l, const std::string& id) {
    int e = g.edge_id(id);
    if (e < 0) throw parse_error(l.no, "unknown edge '" + id + "'");
    return e;
  };

  for (auto* l : by_kind["vertex"]) {
    arity(*l, 2);
    if (g.vertex_id(l->tok[1]) >= 0) throw parse_error(l->no, "duplicate vertex '" + l->tok[1] + "'");
    g.add_vertex(l->tok[1]);
  }
  for (auto* l : by_kind["edge"]) {
    arity(*l, 4);
    if (g.edge_id(l->tok[1]) >= 0) throw parse_error(l->no, "duplicate edge '" + l->tok[1] + "'");
    int u = vertex(*l, l->tok[2]), v = vertex(*l, l->tok[3]);
    try {
      g.add_edge(l->tok[1], u, v);
    } catch (const std::invalid_argument& ex) {
      throw parse_error(l->no, ex.what());
    }
  }

  d.rotation.assign(g.vertex_count(), {});
  std::vector<int> rot_line(g.vertex_count(), 0);
  for (auto* l : by_kind["rot"]) {
    arity(*l, 2, true);
    int v = vertex(*l, l->tok[1]);
    if (rot_line[v]) throw parse_error(l->no, "duplicate rotation for vertex '" + l->tok[1] + "'");
    rot_line[v] = l->no;
    for (std::size_t i = 2; i < l->tok.size(); ++i) {
      int e = edge(*l, l->tok[i]);
      if (g.edge(e).u != v && g.edge(e).v != v)
        throw parse_error(l->no, "edge '" + l->tok[i] + "' is not incident to vertex '" + l->tok[1] + "'");
      if (std::find(d.rotation[v].begin(), d.rotation[v].end(), e) != d.rotation[v].end())
        throw parse_error(l->no, "edge '" + l->tok[i] + "' repeated in rotation");
      d.rotation[v].push_back(e);
    }
    if (static_cast<int>(d.rotation[v].size()) != g.degree(v))
      throw parse_error(l->no, "rotation arity " + std::to_string(d.rotation[v].size()) + " differs from degree " +
                                   std::to_string(g.degree(v)) + " of vertex '" + l->tok[1] + "'");
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!rot_line[v] && g.degree(v) > 0)
      throw parse_error(lines.back().no, "missing rotation for vertex '" + g.vertex_name(v) + "'");

  std::map<std::string, int> xid;
  std::vector<int> cross_line;
  for (auto* l : by_kind["cross"]) {
    arity(*l, 5);
    if (xid.count(l->tok[1])) throw parse_error(l->no, "duplicate crossing '" + l->tok[1] + "'");
    int a = edge(*l, l->tok[2]), b = edge(*l, l->tok[3]);
    if (a == b) throw parse_error(l->no, "crossing '" + l->tok[1] + "' joins an edge to itself");
    if (l->tok[4] != "0" && l->tok[4] != "1") throw parse_error(l->no, "crossing bit out of range");
    xid[l->tok[1]] = static_cast<int>(d.crossings.size());
    d.crossings.push_back({l->tok[1], a, b, l->tok[4] == "1" ? 1 : 0});
    cross_line.push_back(l->no);
  }

  d.order.assign(g.edge_count(), {});
  std::vector<int> order_line(g.edge_count(), 0);
  std::vector<int> uses(d.crossings.size(), 0);
  for (auto* l : by_kind["order"]) {
    arity(*l, 2, true);
    int e = edge(*l, l->tok[1]);
    if (order_line[e]) throw parse_error(l->no, "duplicate order for edge '" + l->tok[1] + "'");
    order_line[e] = l->no;
    for (std::size_t i = 2; i < l->tok.size(); ++i) {
      auto it = xid.find(l->tok[i]);
      if (it == xid.end()) throw parse_error(l->no, "unknown crossing '" + l->tok[i] + "'");
      const auto& c = d.crossings[it->second];
      if (c.a != e && c.b != e)
        throw parse_error(l->no, "crossing '" + l->tok[i] + "' does not involve edge '" + l->tok[1] + "'");
      if (std::find(d.order[e].begin(), d.order[e].end(), it->second) != d.order[e].end())
        throw parse_error(l->no, "crossing '" + l->tok[i] + "' repeated along edge");
      d.order[e].push_back(it->second);
      ++uses[it->second];
    }
  }
  for (std::size_t x = 0; x < d.crossings.size(); ++x)
    if (uses[x] != 2)
      throw parse_error(cross_line[x], "crossing '" + d.crossings[x].name + "' referenced by " +
                                           std::to_string(uses[x]) + " order lines instead of 2");

  d.sign.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) d.sign[e].assign(d.order[e].size() + 1, 1);
  for (auto* l : by_kind["sign"]) {
    arity(*l, 4);
    int e = edge(*l, l->tok[1]);
    int i;
    try {
      std::size_t used = 0;
      i = std::stoi(l->tok[2], &used);
      if (used != l->tok[2].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw parse_error(l->no, "segment index is not an integer");
    }
    if (i < 0 || i >= static_cast<int>(d.sign[e].size())) throw parse_error(l->no, "segment index out of range");
    if (l->tok[3] != "-") throw parse_error(l->no, "sign lines must end with '-'");
    if (d.sign[e][i] < 0) throw parse_error(l->no, "duplicate sign line");
    d.sign[e][i] = -1;
  }
  try {
    validate(d);
  } catch (const structural_error& ex) {
    throw parse_error(lines.back().no, ex.what());
  }
  return d;
}

inline std::string serialize(const Drawing& d) {
  const auto& g = d.graph;
  auto by_name = [](auto names) {
    std::sort(names.begin(), names.end(),
              [](const auto& a, const auto& b) { return natural_less(a.first, b.first); });
    return names;
  };
  std::ostringstream out;
  out << "thrackle v1\n";
  std::vector<std::pair<std::string, int>> vs, es, xs;
  for (int v = 0; v < g.vertex_count(); ++v) vs.push_back({g.vertex_name(v), v});
  for (int e = 0; e < g.edge_count(); ++e) es.push_back({g.edge(e).name, e});
  for (std::size_t x = 0; x < d.crossings.size(); ++x) xs.push_back({d.crossings[x].name, static_cast<int>(x)});
  vs = by_name(vs);
  es = by_name(es);
  xs = by_name(xs);
  for (auto& [n, v] : vs) out << "vertex " << n << "\n";
  for (auto& [n, e] : es) out << "edge " << n << " " << g.vertex_name(g.edge(e).u) << " " << g.vertex_name(g.edge(e).v) << "\n";
  for (auto& [n, v] : vs) {
    const auto& r = d.rotation[v];
    if (r.empty()) continue;
    std::size_t start = 0;
    for (std::size_t i = 1; i < r.size(); ++i)
      if (natural_less(g.edge(r[i]).name, g.edge(r[start]).name)) start = i;
    out << "rot " << n;
    for (std::size_t i = 0; i < r.size(); ++i) out << " " << g.edge(r[(start + i) % r.size()]).name;
    out << "\n";
  }
  for (auto& [n, x] : xs) {
    const auto& c = d.crossings[x];
    bool swap = natural_less(g.edge(c.b).name, g.edge(c.a).name);
    int a = swap ? c.b : c.a, b = swap ? c.a : c.b;
    out << "cross " << n << " " << g.edge(a).name << " " << g.edge(b).name << " " << (swap ? 1 - c.bit : c.bit) << "\n";
  }
  for (auto& [n, e] : es) {
    if (d.order[e].empty()) continue;
    out << "order " << n;
    for (int x : d.order[e]) out << " " << d.crossings[x].name;
    out << "\n";
  }
  for (auto& [n, e] : es)
    for (std::size_t i = 0; i < d.sign[e].size(); ++i)
      if (d.sign[e][i] < 0) out << "sign " << n << " " << i << " -\n";
  return out.str();
}

inline Drawing load_drawing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_drawing(buf.str());
}

inline void save_drawing(const Drawing& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize(d);
}

// Graphviz text of the planarized map.
inline std::string export_dot(const Drawing& d) {
  PlanarizedMap pm = planarize(d);
  const auto& g = d.graph;
  std::vector<std::string> node_name(pm.scheme.node_count());
  std::ostringstream out;
  out << "graph planarized {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (pm.vertex_node[v] < 0) continue;
    node_name[pm.vertex_node[v]] = "v_" + g.vertex_name(v);
    out << "  \"v_" << g.vertex_name(v) << "\" [kind=vertex, label=\"" << g.vertex_name(v) << "\"];\n";
  }
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    node_name[pm.crossing_node[x]] = "x_" + d.crossings[x].name;
    out << "  \"x_" << d.crossings[x].name << "\" [kind=crossing, shape=point, bit=" << d.crossings[x].bit << "];\n";
  }
  for (int s = 0; s < pm.scheme.segment_count(); ++s) {
    const auto& seg = pm.scheme.segment(s);
    auto [e, k] = pm.segment_edge[s];
    out << "  \"" << node_name[seg.a] << "\" -- \"" << node_name[seg.b] << "\" [edge=\"" << g.edge(e).name
        << "\", index=" << k << ", sign=\"" << (seg.sign > 0 ? "+" : "-") << "\"" << (seg.sign < 0 ? ", style=dashed" : "")
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace thrackle
