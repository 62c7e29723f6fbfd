#include <gtest/gtest.h>

#include "support.hpp"
#include "thrackle/surface_map.hpp"

using namespace thrackle;

namespace {

EmbeddingScheme single_segment() { return EmbeddingScheme(2, {{0, 1, 1}}, {{make_dart(0, 0)}, {make_dart(0, 1)}}); }

// Nodes 0,1,2; segment i joins i and i+1.
EmbeddingScheme triangle(int sign_of_last = 1) {
  std::vector<Segment> segs{{0, 1, 1}, {1, 2, 1}, {2, 0, sign_of_last}};
  std::vector<std::vector<Dart>> rot{{make_dart(0, 0), make_dart(2, 1)},
                                     {make_dart(0, 1), make_dart(1, 0)},
                                     {make_dart(1, 1), make_dart(2, 0)}};
  return EmbeddingScheme(3, segs, rot);
}

}  // namespace

TEST(SurfaceClass, EulerGenusRule) {
  EXPECT_EQ(SurfaceClass::sphere_with_handles(3).euler_genus, 6);
  EXPECT_EQ(SurfaceClass::crosscaps(3).euler_genus, 3);
  EXPECT_EQ(SurfaceClass::from_euler(false, 5).genus, 5);
  EXPECT_THROW(SurfaceClass::from_euler(true, 3), std::domain_error);
  EXPECT_THROW(SurfaceClass::from_euler(false, 0), std::domain_error);
  EXPECT_THROW(SurfaceClass::from_euler(true, -2), std::domain_error);
  EXPECT_EQ(SurfaceClass::crosscaps(1).name(), "N_1");
}

TEST(TraceFaces, SingleSegmentHasOneFaceOfLengthTwo) {
  auto f = trace_faces(single_segment());
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.lengths[0], 2);
  auto s = euler_genus(single_segment());
  EXPECT_TRUE(s.orientable);
  EXPECT_EQ(s.euler_genus, 0);
  EXPECT_TRUE(is_even_embedding(single_segment()));
}

TEST(TraceFaces, PlanarTriangleHasTwoTriangularFaces) {
  auto f = trace_faces(triangle());
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.lengths[0], 3);
  EXPECT_EQ(f.lengths[1], 3);
  EXPECT_EQ(euler_genus(triangle()).euler_genus, 0);
  EXPECT_FALSE(is_even_embedding(triangle()));
}

TEST(TraceFaces, K33TorusMapHas21Faces) {
  auto s = to_scheme(fixed_drawing("k33_torus"));
  EXPECT_EQ(s.node_count(), 24);
  EXPECT_EQ(s.segment_count(), 45);
  auto f = trace_faces(s);
  EXPECT_EQ(f.size(), 21u);
  EXPECT_EQ(thrackle::test::oracle_face_count(s), 21);
  int total = 0;
  for (int l : f.lengths) total += l;
  EXPECT_EQ(total, 2 * s.segment_count());
}

TEST(TraceFaces, IsDeterministic) {
  auto s = to_scheme(fixed_drawing("k5_triple_torus"));
  EXPECT_EQ(trace_faces(s).faces, trace_faces(s).faces);
}

TEST(TraceFaces, DanglingSegmentEndIsStructuralError) {
  EXPECT_THROW(EmbeddingScheme(2, {{0, 1, 1}}, {{make_dart(0, 0)}, {}}), structural_error);
  EXPECT_THROW(EmbeddingScheme(2, {{0, 1, 1}}, {{make_dart(0, 0), make_dart(0, 1)}, {}}), structural_error);
}

TEST(EulerGenus, ShippedDrawings) {
  auto k33 = euler_genus(to_scheme(fixed_drawing("k33_torus")));
  EXPECT_TRUE(k33.orientable);
  EXPECT_EQ(k33.euler_genus, 2);
  auto k5 = euler_genus(to_scheme(fixed_drawing("k5_triple_torus")));
  EXPECT_TRUE(k5.orientable);
  EXPECT_EQ(k5.euler_genus, 6);
  auto w7 = euler_genus(to_scheme(wheel_projective(7)));
  EXPECT_FALSE(w7.orientable);
  EXPECT_EQ(w7.euler_genus, 1);
}

TEST(EulerGenus, DisconnectedSchemeIsRejected) {
  EmbeddingScheme two(4, {{0, 1, 1}, {2, 3, 1}},
                      {{make_dart(0, 0)}, {make_dart(0, 1)}, {make_dart(1, 0)}, {make_dart(1, 1)}});
  EXPECT_THROW(euler_genus(two), std::domain_error);
}

TEST(IsOrientable, SignPatterns) {
  EXPECT_TRUE(is_orientable(triangle()));
  EXPECT_FALSE(is_orientable(triangle(-1)));
  EXPECT_FALSE(is_orientable(to_scheme(wheel_projective(7))));
  auto s = euler_genus(triangle(-1));
  EXPECT_FALSE(s.orientable);
  EXPECT_EQ(s.euler_genus, 1);
}

TEST(EmbedsIn, Examples) {
  auto torus = SurfaceClass::sphere_with_handles(1);
  EXPECT_TRUE(embeds_in(torus, SurfaceClass::sphere_with_handles(1)));
  EXPECT_TRUE(embeds_in(torus, SurfaceClass::crosscaps(3)));
  EXPECT_FALSE(embeds_in(torus, SurfaceClass::crosscaps(2)));
  EXPECT_FALSE(embeds_in(SurfaceClass::crosscaps(1), SurfaceClass::sphere_with_handles(5)));
  EXPECT_TRUE(embeds_in(to_scheme(fixed_drawing("k33_torus")), torus));
}

TEST(EmbedsIn, MonotoneAndReflexive) {
  for (int e0 = 0; e0 <= 6; ++e0)
    for (bool o0 : {true, false}) {
      if ((o0 && e0 % 2) || (!o0 && e0 == 0)) continue;
      auto own = SurfaceClass::from_euler(o0, e0);
      EXPECT_TRUE(embeds_in(own, own));
      for (bool ot : {true, false}) {
        bool prev = false;
        for (int et = ot ? 0 : 1; et <= 14; et += ot ? 2 : 1) {
          bool now = embeds_in(own, SurfaceClass::from_euler(ot, et));
          EXPECT_TRUE(!prev || now);
          prev = now;
        }
      }
    }
}
