#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "shield/generators.hpp"

using namespace shield;
using shield::testing::central_vertex;
using shield::testing::key_invariant;

TEST(Ball, TinyHexBallIsSixTriangles) {
  auto p = gen_triangle_tiling(TriangleSpec::finite(0), 3, AlphaSpec::generic());
  int v = central_vertex(p);
  auto b = extract_ball(p, v, 0.1);
  EXPECT_EQ(b.tiles.size(), 6u);
  for (const auto& t : b.tiles) EXPECT_EQ(t.kind, TileKind::Triangle);
}

TEST(Ball, BoundaryVertexIsIncomplete) {
  auto p = gen_line_tiling(OrientationWord::parse("+"), 1, AlphaSpec::generic());
  int boundary = -1;
  for (int v = 0; v < static_cast<int>(p.vertex_count()); ++v)
    if (!p.is_interior(v)) boundary = v;
  ASSERT_GE(boundary, 0);
  try {
    extract_ball(p, boundary, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompleteCoverage);
  }
  EXPECT_FALSE(covers_disk(p, central_vertex(p), 50.0));
}

// Property: the key depends only on the isometry class of the ball.
TEST(Ball, KeyInvariantUnderIsometries) {
  std::mt19937 rng(3);
  for (auto alpha : {AlphaSpec::generic(), AlphaSpec::rational(5, 12), AlphaSpec::degrees(110)}) {
    auto line = gen_line_tiling(OrientationWord::parse("+--+"), 4, alpha);
    EXPECT_TRUE(key_invariant(line, central_vertex(line, {0.3, 0.2}), 1.5, 20, rng)) << alpha.to_string();
    auto tri = gen_triangle_tiling(TriangleSpec::finite(1), 6, alpha);
    EXPECT_TRUE(key_invariant(tri, central_vertex(tri, {0.3, 0.2}), 1.5, 20, rng)) << alpha.to_string();
  }
}

TEST(Ball, TranslationKeySeesRotation) {
  auto p = gen_line_tiling(OrientationWord::parse("++++"), 4, AlphaSpec::generic());
  int v = central_vertex(p);
  Isometry turn{Direction(1, 0), false, ExactPoint{}};
  auto q = shield::testing::moved(p, turn);
  int w = *q.find_vertex(turn.apply(p.vertex(v).xy, p.geometry()));
  auto a = extract_ball(p, v, 1.0), b = extract_ball(q, w, 1.0);
  EXPECT_EQ(a.key, b.key);
  EXPECT_NE(translation_key(a), translation_key(b));
}

TEST(Ball, DifferentConfigurationsDifferentKeys) {
  auto hex = gen_triangle_tiling(TriangleSpec::finite(0), 3, AlphaSpec::generic());
  auto bow = gen_line_tiling(OrientationWord::parse("+++"), 3, AlphaSpec::generic());
  EXPECT_NE(extract_ball(hex, central_vertex(hex), 0.5).key,
            extract_ball(bow, central_vertex(bow), 0.5).key);
}
