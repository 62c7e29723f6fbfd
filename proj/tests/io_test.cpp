#include <gtest/gtest.h>

#include "support.hpp"

using namespace thrackle;

namespace {

int error_line(const std::string& text) {
  try {
    parse_drawing(text);
  } catch (const parse_error& e) {
    return e.line;
  }
  return -1;
}

const char* kMinimal = "thrackle v1\nvertex a\nvertex b\nedge e a b\nrot a e\nrot b e\n";

const char* kPath = R"(thrackle v1
vertex 0
vertex 1
vertex 2
vertex 3
edge p 0 1
edge q 1 2
edge r 2 3
rot 0 p
rot 1 p q
rot 2 q r
rot 3 r
cross x0 p r 1
order p x0
order r x0
)";

}  // namespace

TEST(Parse, MinimalFile) {
  auto d = parse_drawing(kMinimal);
  EXPECT_EQ(d.graph.vertex_count(), 2);
  EXPECT_EQ(d.graph.edge_count(), 1);
  EXPECT_EQ(surface_of(d).euler_genus, 0);
  EXPECT_EQ(serialize(d), kMinimal);
}

TEST(Parse, CommentsAndBlankLines) {
  auto d = parse_drawing("# a comment\nthrackle v1   \n\nvertex a # trailing\nvertex b\nedge e a b\nrot a e\nrot b e\n");
  EXPECT_EQ(serialize(d), kMinimal);
}

TEST(Parse, ShippedFilesRoundTrip) {
  for (const char* n : {"k33_torus", "k4_torus", "k5_triple_torus", "w7_projective", "g5_torus"}) {
    auto d = fixed_drawing(n);
    auto text = serialize(d);
    EXPECT_EQ(serialize(parse_drawing(text)), text) << n;
  }
  auto k33 = fixed_drawing("k33_torus");
  auto r = verify_thrackle(k33);
  EXPECT_TRUE(r.is_thrackle);
  EXPECT_EQ(r.surface->euler_genus, 2);
}

TEST(Parse, SerializeCanonicalizes) {
  // declarations shuffled, rotation started elsewhere, crossing with swapped edges
  auto d = parse_drawing(R"(thrackle v1
vertex 3
vertex 1
vertex 0
vertex 2
edge r 2 3
edge q 1 2
edge p 0 1
rot 2 r q
rot 1 q p
rot 0 p
rot 3 r
cross x0 r p 0
order r x0
order p x0
)");
  EXPECT_EQ(serialize(d), kPath);
  EXPECT_EQ(serialize(parse_drawing(serialize(d))), serialize(d));
}

TEST(Parse, SignLines) {
  std::string text = std::string(kPath) + "sign p 1 -\n";
  auto d = parse_drawing(text);
  EXPECT_EQ(d.sign[0][1], -1);
  EXPECT_EQ(serialize(d), text);
}

TEST(ParseErrors, CarryLineNumbers) {
  EXPECT_EQ(error_line("thrackle v2\n"), 1);
  EXPECT_EQ(error_line("thrackle v1\nvertex a\nvertex a\n"), 3);
  EXPECT_EQ(error_line("thrackle v1\nvertex a\nedge e a z\n"), 3);
  EXPECT_EQ(error_line("thrackle v1\nvertex a\nvertex b\nedge e a b\nrot a e e\nrot b e\n"), 5);
  EXPECT_EQ(error_line("thrackle v1\nvertex a\nvertex b\nvertex c\nedge e a b\nedge f b c\nrot a e\nrot b e\nrot c f\n"), 8);
  EXPECT_EQ(error_line("thrackle v1\nbogus 1\n"), 2);
}

TEST(ParseErrors, CrossingUsage) {
  std::string base = kPath;
  // crossing referenced by one order line only
  std::string one = base.substr(0, base.find("order r x0"));
  EXPECT_EQ(error_line(one), 13);
  // bit out of range
  std::string bit = base;
  bit.replace(bit.find("cross x0 p r 1"), 14, "cross x0 p r 2");
  EXPECT_EQ(error_line(bit), 13);
  // unknown crossing in an order line
  std::string unk = base;
  unk.replace(unk.find("order r x0"), 10, "order r x9");
  EXPECT_EQ(error_line(unk), 15);
  // segment index out of range
  EXPECT_EQ(error_line(base + "sign p 5 -\n"), 16);
}

TEST(ExportDot, OneNodePerSchemeNodeOneLinkPerSegment) {
  auto d = fixed_drawing("k4_torus");
  auto text = export_dot(d);
  auto pm = planarize(d);
  auto count = [&](const std::string& needle) {
    std::size_t c = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++c;
    return c;
  };
  EXPECT_EQ(count("[kind="), static_cast<std::size_t>(pm.scheme.node_count()));
  EXPECT_EQ(count(" -- "), static_cast<std::size_t>(pm.scheme.segment_count()));
  EXPECT_EQ(text.rfind("graph planarized {", 0), 0u);
  EXPECT_NE(export_dot(wheel_projective(3)).find("sign=\"-\""), std::string::npos);
}
