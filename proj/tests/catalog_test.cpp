#include <gtest/gtest.h>

#include "support.hpp"

using namespace thrackle;
using thrackle::test::expect_surface;

TEST(OddCycleSphere, CrossingCounts) {
  EXPECT_EQ(odd_cycle_sphere(3).crossings.size(), 0u);
  EXPECT_EQ(odd_cycle_sphere(5).crossings.size(), 5u);
  EXPECT_EQ(odd_cycle_sphere(7).crossings.size(), 14u);
  for (int k = 3; k <= 15; k += 2) {
    auto d = odd_cycle_sphere(k);
    expect_surface(d, true, 0);
    EXPECT_EQ(static_cast<int>(d.crossings.size()), k * (k - 3) / 2);
  }
}

TEST(OddCycleSphere, RejectsEvenOrSmall) {
  EXPECT_THROW(odd_cycle_sphere(4), std::domain_error);
  EXPECT_THROW(odd_cycle_sphere(1), std::domain_error);
}

TEST(WheelProjective, SmallAndLarge) {
  auto w3 = wheel_projective(3);
  expect_surface(w3, false, 1);
  EXPECT_EQ(w3.crossings.size(), 3u);
  auto w7 = wheel_projective(7);
  expect_surface(w7, false, 1);
  EXPECT_EQ(w7.crossings.size(), 49u);
  auto w15 = wheel_projective(15);
  expect_surface(w15, false, 1);
  EXPECT_EQ(w15.graph.edge_count(), 30);
  EXPECT_THROW(wheel_projective(6), std::domain_error);
}

TEST(GkTorus, Counts) {
  auto g1 = gk_torus(1);
  EXPECT_EQ(g1.graph.vertex_count(), 4);
  EXPECT_EQ(g1.graph.edge_count(), 3);
  EXPECT_TRUE(verify_thrackle(g1).is_thrackle);
  auto g2 = gk_torus(2);
  EXPECT_EQ(g2.graph.vertex_count(), 6);
  EXPECT_EQ(g2.graph.edge_count(), 7);
  auto g5 = gk_torus(5);
  EXPECT_EQ(g5.crossings.size(), 125u);
  EXPECT_THROW(gk_torus(0), std::domain_error);
}

TEST(GkTorus, EmbedsInTorusUpTo15) {
  for (int k = 1; k <= 15; ++k) {
    auto d = gk_torus(k);
    auto r = verify_thrackle(d);
    ASSERT_TRUE(r.is_thrackle) << k;
    EXPECT_EQ(d.graph.vertex_count(), 2 * k + 2);
    EXPECT_EQ(d.graph.edge_count(), 4 * k - 1);
    EXPECT_TRUE(r.surface->orientable);
    EXPECT_TRUE(embeds_in(*r.surface, SurfaceClass::sphere_with_handles(1))) << k;
  }
}

TEST(FixedDrawing, Shapes) {
  struct Want {
    const char* name;
    int n, m, x, eps;
  };
  for (auto w : {Want{"k33_torus", 6, 9, 18, 2}, Want{"k4_torus", 4, 6, 3, 2}, Want{"k5_triple_torus", 5, 10, 15, 6}}) {
    auto d = fixed_drawing(w.name);
    EXPECT_EQ(d.graph.vertex_count(), w.n) << w.name;
    EXPECT_EQ(d.graph.edge_count(), w.m) << w.name;
    EXPECT_EQ(static_cast<int>(d.crossings.size()), w.x) << w.name;
    expect_surface(d, true, w.eps);
  }
  EXPECT_THROW(fixed_drawing("k7_somewhere"), std::domain_error);
}

TEST(FixedDrawing, StoredGeneratorOutputsMatch) {
  EXPECT_EQ(serialize(fixed_drawing("w7_projective")), serialize(wheel_projective(7)));
  EXPECT_EQ(serialize(fixed_drawing("g5_torus")), serialize(gk_torus(5)));
}

TEST(MainorFamily, Counts) {
  auto d = mainor_family(2, 5);
  EXPECT_EQ(d.graph.vertex_count(), 13);
  EXPECT_EQ(d.graph.edge_count(), 22);  // 4k + 2g - 2
  expect_surface(d, true, 4);
  auto e = mainor_family(4, 7);
  EXPECT_EQ(e.graph.vertex_count(), 17);
  EXPECT_EQ(e.graph.edge_count(), 34);
  expect_surface(e, true, 8);
  EXPECT_EQ(serialize(mainor_family(1, 5)), serialize(gk_torus(5)));
}

TEST(MainorFamily, ViolatesConjectureBeyondEightVertices) {
  for (int g = 2; g <= 4; ++g) {
    auto d = mainor_family(g, 2 * g - 1);
    long long n = d.graph.vertex_count(), m = d.graph.edge_count();
    EXPECT_EQ(m, 2 * n + 2 * g - 8);
    if (n > 8) EXPECT_EQ(conjecture1_check(n, m, g), ConjectureVerdict::violates);
  }
}

TEST(MainorFamily, ThresholdError) {
  try {
    mainor_family(3, 4);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("k \\ge 2t+1"), std::string::npos);
  }
}

TEST(MainnonFamily, Counts) {
  auto d = mainnon_family(5, 5);
  EXPECT_EQ(d.graph.vertex_count(), 7);
  EXPECT_EQ(d.graph.edge_count(), 15);
  expect_surface(d, false, 5);
  auto e = mainnon_family(2, 3);
  EXPECT_EQ(e.graph.vertex_count(), 5);
  EXPECT_EQ(e.graph.edge_count(), 8);
  expect_surface(e, false, 2);
  EXPECT_EQ(serialize(mainnon_family(1, 7)), serialize(wheel_projective(7)));
}

TEST(MainnonFamily, ThresholdError) {
  try {
    mainnon_family(5, 3);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("k \\ge t+1"), std::string::npos);
  }
}

TEST(Catalog, EveryEntryMeetsEdgeBounds) {
  for (auto& [name, d] : thrackle::test::catalog_corpus()) {
    SCOPED_TRACE(name);
    thrackle::test::expect_bounds_hold(d);
  }
}
