#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace thrackle {

struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SurfaceClass {
  bool orientable = true;
  int genus = 0;
  int euler_genus = 0;

  static SurfaceClass from_euler(bool orientable, int eps) {
    if (eps < 0) throw std::domain_error("negative Euler genus");
    if (orientable && eps % 2 != 0) throw std::domain_error("odd Euler genus for orientable surface");
    if (!orientable && eps < 1) throw std::domain_error("nonorientable surface needs Euler genus >= 1");
    return {orientable, orientable ? eps / 2 : eps, eps};
  }
  static SurfaceClass sphere_with_handles(int g) { return from_euler(true, 2 * g); }
  static SurfaceClass crosscaps(int g) { return from_euler(false, g); }

  std::string name() const {
    return (orientable ? "S_" : "N_") + std::to_string(genus);
  }
  bool operator==(const SurfaceClass&) const = default;
};

// A dart is one end of a segment: 2*segment + end, end 0 at segment.a, end 1 at segment.b.
using Dart = int;
inline int dart_segment(Dart d) { return d >> 1; }
inline int dart_end(Dart d) { return d & 1; }
inline Dart make_dart(int segment, int end) { return 2 * segment + end; }

struct Segment {
  int a = -1;
  int b = -1;
  int sign = 1;
};

class EmbeddingScheme {
 public:
  EmbeddingScheme() = default;
  EmbeddingScheme(int nodes, std::vector<Segment> segments, std::vector<std::vector<Dart>> rotation)
      : nodes_(nodes), segments_(std::move(segments)), rotation_(std::move(rotation)) {
    validate();
  }

  int node_count() const { return nodes_; }
  int segment_count() const { return static_cast<int>(segments_.size()); }
  const std::vector<Segment>& segments() const { return segments_; }
  const Segment& segment(int s) const { return segments_[s]; }
  const std::vector<std::vector<Dart>>& rotations() const { return rotation_; }
  const std::vector<Dart>& rotation(int node) const { return rotation_[node]; }

  int dart_node(Dart d) const { return node_of_[d]; }
  int dart_position(Dart d) const { return pos_of_[d]; }
  Dart next_at(Dart d, int dir) const {
    const auto& r = rotation_[node_of_[d]];
    int k = static_cast<int>(r.size());
    return r[((pos_of_[d] + dir) % k + k) % k];
  }

  // Reverse the rotation at a node and negate the signs of its segments.
  EmbeddingScheme local_switch(int node) const {
    auto segs = segments_;
    auto rot = rotation_;
    std::reverse(rot[node].begin(), rot[node].end());
    for (auto& s : segs)
      if ((s.a == node) != (s.b == node)) s.sign = -s.sign;
    return EmbeddingScheme(nodes_, std::move(segs), std::move(rot));
  }

  int component_count() const {
    std::vector<int> parent(nodes_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = nodes_;
    for (const auto& s : segments_) {
      int x = find(s.a), y = find(s.b);
      if (x != y) {
        parent[x] = y;
        --comps;
      }
    }
    return comps;
  }
  bool connected() const { return nodes_ > 0 && component_count() == 1; }

 private:
  void validate() {
    int m = segment_count();
    node_of_.assign(2 * m, -1);
    pos_of_.assign(2 * m, -1);
    if (static_cast<int>(rotation_.size()) != nodes_)
      throw structural_error("rotation table has " + std::to_string(rotation_.size()) + " entries for " +
                             std::to_string(nodes_) + " nodes");
    for (int s = 0; s < m; ++s) {
      const auto& seg = segments_[s];
      if (seg.a < 0 || seg.a >= nodes_ || seg.b < 0 || seg.b >= nodes_)
        throw structural_error("segment " + std::to_string(s) + " has an endpoint outside the node set");
      if (seg.sign != 1 && seg.sign != -1)
        throw structural_error("segment " + std::to_string(s) + " has sign other than +1/-1");
    }
    for (int v = 0; v < nodes_; ++v) {
      for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
        Dart d = rotation_[v][i];
        if (d < 0 || d >= 2 * m)
          throw structural_error("node " + std::to_string(v) + " lists a nonexistent segment-end");
        if (node_of_[d] != -1)
          throw structural_error("segment-end of segment " + std::to_string(dart_segment(d)) +
                                 " appears twice in rotations");
        int expect = dart_end(d) == 0 ? segments_[dart_segment(d)].a : segments_[dart_segment(d)].b;
        if (expect != v)
          throw structural_error("node " + std::to_string(v) + " lists an end of segment " +
                                 std::to_string(dart_segment(d)) + " that belongs to node " + std::to_string(expect));
        node_of_[d] = v;
        pos_of_[d] = i;
      }
    }
    for (int d = 0; d < 2 * m; ++d)
      if (node_of_[d] == -1)
        throw structural_error("dangling end " + std::to_string(dart_end(d)) + " of segment " +
                               std::to_string(dart_segment(d)) + " at node " +
                               std::to_string(dart_end(d) == 0 ? segments_[dart_segment(d)].a
                                                               : segments_[dart_segment(d)].b));
  }

  int nodes_ = 0;
  std::vector<Segment> segments_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<int> node_of_;
  std::vector<int> pos_of_;
};

struct FaceSet {
  // Each face is the list of darts it leaves along, in walk order.
  std::vector<std::vector<Dart>> faces;
  std::vector<int> lengths;
  std::size_t size() const { return faces.size(); }
};

inline FaceSet trace_faces(const EmbeddingScheme& s) {
  const int m = s.segment_count();
  // state index: 2*dart + (orientation < 0)
  std::vector<char> used(4 * static_cast<std::size_t>(m), 0);
  auto state = [](Dart d, int o) { return 2 * d + (o < 0 ? 1 : 0); };
  FaceSet out;
  std::vector<int> traversals(m, 0);
  for (Dart start = 0; start < 2 * m; ++start) {
    if (used[state(start, 1)]) continue;
    std::vector<Dart> walk;
    Dart d = start;
    int o = 1;
    do {
      walk.push_back(d);
      int seg = dart_segment(d);
      int sg = s.segment(seg).sign;
      used[state(d, o)] = 1;
      used[state(d ^ 1, -o * sg)] = 1;
      ++traversals[seg];
      Dart arrive = d ^ 1;
      o *= sg;
      d = s.next_at(arrive, o);
    } while (!(d == start && o == 1));
    out.lengths.push_back(static_cast<int>(walk.size()));
    out.faces.push_back(std::move(walk));
  }
  for (int i = 0; i < m; ++i)
    if (traversals[i] != 2)
      throw structural_error("segment " + std::to_string(i) + " traversed " + std::to_string(traversals[i]) +
                             " times by face walks");
  return out;
}

inline bool is_orientable(const EmbeddingScheme& s) {
  std::vector<std::vector<std::pair<int, int>>> adj(s.node_count());
  for (const auto& seg : s.segments()) {
    if (seg.a == seg.b) {
      if (seg.sign < 0) return false;
      continue;
    }
    adj[seg.a].push_back({seg.b, seg.sign});
    adj[seg.b].push_back({seg.a, seg.sign});
  }
  std::vector<int> label(s.node_count(), 0);
  for (int root = 0; root < s.node_count(); ++root) {
    if (label[root]) continue;
    label[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (auto [y, sg] : adj[x]) {
        int want = label[x] * sg;
        if (!label[y]) {
          label[y] = want;
          q.push(y);
        } else if (label[y] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

inline int euler_characteristic_genus(const EmbeddingScheme& s, const FaceSet& f) {
  return 2 - s.node_count() + s.segment_count() - static_cast<int>(f.size());
}

inline SurfaceClass euler_genus(const EmbeddingScheme& s) {
  if (!s.connected())
    throw std::domain_error("euler_genus needs a connected scheme (" + std::to_string(s.component_count()) +
                            " components)");
  FaceSet f = trace_faces(s);
  return SurfaceClass::from_euler(is_orientable(s), euler_characteristic_genus(s, f));
}

inline bool is_even_embedding(const EmbeddingScheme& s) {
  FaceSet f = trace_faces(s);
  return std::all_of(f.lengths.begin(), f.lengths.end(), [](int l) { return l % 2 == 0; });
}

inline bool embeds_in(const SurfaceClass& own, const SurfaceClass& target) {
  if (target.orientable) return own.orientable && target.euler_genus >= own.euler_genus;
  if (own.orientable) return target.euler_genus >= own.euler_genus + 1;
  return target.euler_genus >= own.euler_genus;
}

inline bool embeds_in(const EmbeddingScheme& s, const SurfaceClass& target) {
  return embeds_in(euler_genus(s), target);
}

}  // namespace thrackle
