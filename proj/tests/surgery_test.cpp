#include <gtest/gtest.h>

#include "support.hpp"
#include "thrackle/surgery.hpp"

using namespace thrackle;
using thrackle::test::expect_bounds_hold;
using thrackle::test::expect_surface;

namespace {

struct Shape {
  int n, m, eps;
  bool orientable;
};

Shape shape(const Drawing& d) {
  auto s = surface_of(d);
  return {d.graph.vertex_count(), d.graph.edge_count(), s.euler_genus, s.orientable};
}

void expect_delta(const Drawing& before, const Drawing& after, int dv, int de, int deps) {
  auto a = shape(before), b = shape(after);
  EXPECT_EQ(b.n - a.n, dv);
  EXPECT_EQ(b.m - a.m, de);
  EXPECT_EQ(b.eps - a.eps, deps);
  expect_bounds_hold(after);
}

}  // namespace

TEST(CnHandle, OddCycle) {
  auto c5 = odd_cycle_sphere(5);
  auto d = cn_handle(c5, 0);
  EXPECT_EQ(d.graph.vertex_count(), 7);
  EXPECT_EQ(d.graph.edge_count(), 9);
  expect_surface(d, true, 2);
  expect_delta(c5, d, 2, 4, 2);
}

TEST(CnHandle, IteratedKeepsEdgeSurplus) {
  Drawing d = odd_cycle_sphere(5);
  for (int g = 1; g <= 5; ++g) {
    d = cn_handle(d, 0);
    EXPECT_EQ(d.graph.edge_count() - d.graph.vertex_count(), 2 * g);
    expect_surface(d, true, 2 * g);
    EXPECT_EQ(conjecture1_check(d.graph.vertex_count(), d.graph.edge_count(), g), ConjectureVerdict::satisfies);
  }
}

TEST(CnHandle, K33Torus) {
  auto k33 = fixed_drawing("k33_torus");
  auto d = cn_handle(k33, 0);
  EXPECT_EQ(d.graph.vertex_count(), 8);
  EXPECT_EQ(d.graph.edge_count(), 13);
  expect_surface(d, true, 4);
}

TEST(CnHandle, Preconditions) {
  EXPECT_THROW(cn_handle(odd_cycle_sphere(5), 9), std::domain_error);
  EXPECT_THROW(cn_handle(wheel_projective(3), 0), std::domain_error);
}

TEST(CloneNonorientable, WheelHub) {
  auto w5 = wheel_projective(5);
  int hub = w5.graph.vertex_id("h");
  auto d = clone_star_nonorientable(w5, hub, 4);
  EXPECT_EQ(d.graph.vertex_count(), 7);
  EXPECT_EQ(d.graph.edge_count(), 15);
  expect_surface(d, false, 5);
  expect_delta(w5, d, 1, 5, 4);

  auto w7 = wheel_projective(7);
  auto e = clone_star_nonorientable(w7, w7.graph.vertex_id("h"), 1);
  expect_delta(w7, e, 1, 2, 1);
  expect_surface(e, false, 2);
}

TEST(CloneNonorientable, OrientableInputBecomesNonorientable) {
  auto k5 = fixed_drawing("k5_triple_torus");
  auto d = clone_star_nonorientable(k5, 0, 2);
  // S_3 plus two crosscaps is N_8
  expect_surface(d, false, 8);
}

TEST(CloneNonorientable, DegreePrecondition) {
  try {
    clone_star_nonorientable(odd_cycle_sphere(5), 0, 2);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("degree at least $t+1$"), std::string::npos);
  }
}

TEST(CloneOrientable, GkVertexA) {
  auto g7 = gk_torus(7);
  auto d = clone_star_orientable(g7, g7.graph.vertex_id("a"), 3);
  EXPECT_EQ(d.graph.vertex_count(), 17);
  EXPECT_EQ(d.graph.edge_count(), 34);
  expect_surface(d, true, 8);

  auto g5 = gk_torus(5);
  auto e = clone_star_orientable(g5, g5.graph.vertex_id("a"), 1);
  expect_delta(g5, e, 1, 3, 2);
  expect_surface(e, true, 4);
}

TEST(CloneOrientable, DegreePrecondition) {
  auto g3 = gk_torus(3);
  try {
    clone_star_orientable(g3, g3.graph.vertex_id("a"), 2);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("degree at least $2t+1$"), std::string::npos);
  }
}

TEST(CloneOrientable, NonorientableInputStaysNonorientable) {
  auto w7 = wheel_projective(7);
  auto d = clone_star_orientable(w7, w7.graph.vertex_id("h"), 2);
  expect_surface(d, false, 5);
}

TEST(CloneFull, StarsGiveK2n) {
  for (int n = 1; n <= 7; ++n) {
    auto star = bare_drawing(graphs::star(n));
    auto d = clone_star_full(star, 0);
    EXPECT_EQ(d.graph.vertex_count(), n + 2);
    EXPECT_EQ(d.graph.edge_count(), 2 * n);
    expect_surface(d, true, 2 * (n / 2));  // 2 * ceil((n-1)/2)
  }
}

TEST(CloneFull, K33Vertex) {
  auto k33 = fixed_drawing("k33_torus");
  auto d = clone_star_full(k33, 0);
  expect_delta(k33, d, 1, 3, 2);
  expect_surface(d, true, 4);
}

TEST(CloneFull, PendantVertexAddsNoHandle) {
  auto p = bare_drawing(graphs::path(3));
  auto d = clone_star_full(p, 0);
  expect_delta(p, d, 1, 1, 0);
}

TEST(CloneFull, UnknownVertex) { EXPECT_THROW(clone_star_full(odd_cycle_sphere(5), 11), std::domain_error); }

TEST(CloneFullEdge, K5ToK6) {
  auto k5 = fixed_drawing("k5_triple_torus");
  auto d = clone_star_full_edge(k5, 0);
  EXPECT_EQ(d.graph.vertex_count(), 6);
  EXPECT_EQ(d.graph.edge_count(), 15);
  expect_surface(d, true, 14);
}

TEST(CloneFullEdge, K4ToK5) {
  auto k4 = fixed_drawing("k4_torus");
  auto d = clone_star_full_edge(k4, 0);
  expect_delta(k4, d, 1, 4, 6);
  expect_surface(d, true, 8);
}

TEST(CloneFullEdge, K5ToK7) {
  auto k6 = clone_star_full_edge(fixed_drawing("k5_triple_torus"), 0);
  auto k7 = clone_star_full_edge(k6, 0);
  EXPECT_EQ(k7.graph.edge_count(), 21);
  expect_surface(k7, true, 22);
  EXPECT_EQ(surface_of(k7).genus, (7 * 7 + 4 * 7 - 33) / 4);
}

TEST(Surgery, CompositionLaws) {
  auto g5 = gk_torus(5);
  EXPECT_EQ(serialize(mainor_family(2, 5)), serialize(clone_star_orientable(g5, g5.graph.vertex_id("a"), 1)));
  auto w5 = wheel_projective(5);
  EXPECT_EQ(serialize(mainnon_family(3, 5)), serialize(clone_star_nonorientable(w5, w5.graph.vertex_id("h"), 2)));
}

TEST(Surgery, InputIsUnchanged) {
  auto k33 = fixed_drawing("k33_torus");
  auto before = serialize(k33);
  cn_handle(k33, 0);
  clone_star_full(k33, 0);
  EXPECT_EQ(serialize(k33), before);
}
