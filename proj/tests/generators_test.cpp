#include <gtest/gtest.h>

#include <map>

#include "shield/generators.hpp"
#include "shield/io.hpp"

using namespace shield;

namespace {

std::map<std::string, int> interior_census(const Patch& p) {
  std::map<std::string, int> out;
  for (int v = 0; v < static_cast<int>(p.vertex_count()); ++v)
    if (p.is_interior(v)) ++out[VertexConfig(p.star(v).word()).name()];
  return out;
}

std::vector<AlphaSpec> sample_alphas() {
  return {AlphaSpec::generic(), AlphaSpec::rational(5, 12), AlphaSpec::degrees(99.34), AlphaSpec::degrees(110)};
}

}  // namespace

TEST(LineTiling, ValidForSampledAlphas) {
  for (auto alpha : sample_alphas())
    for (std::string w : {"+", "+-", "++-", "+-+-", "--+-"}) {
      auto p = gen_line_tiling(OrientationWord::parse(w), 3, alpha);
      auto rep = validate(p);
      EXPECT_TRUE(rep.ok()) << w << " " << alpha.to_string() << "\n" << rep.summary();
    }
}

TEST(LineTiling, UniformWordHasOnlyBowties) {
  auto p = gen_line_tiling(OrientationWord::parse("+++"), 4, AlphaSpec::generic());
  auto c = interior_census(p);
  EXPECT_GT(c["bowtie"], 0);
  EXPECT_EQ(c.size(), 1u);
}

TEST(LineTiling, OppositeLettersMeetInFaults) {
  auto p = gen_line_tiling(OrientationWord::parse("+-"), 3, AlphaSpec::generic());
  auto c = interior_census(p);
  EXPECT_GT(c["fault"], 0);
  EXPECT_EQ(c.count("hex"), 0u);
}

TEST(TriangleTiling, ValidForSampledAlphas) {
  for (auto alpha : sample_alphas())
    for (int k = 0; k <= 4; ++k) {
      auto p = gen_triangle_tiling(TriangleSpec::finite(k), 6, alpha);
      auto rep = validate(p);
      EXPECT_TRUE(rep.ok()) << k << " " << alpha.to_string() << "\n" << rep.summary();
    }
}

TEST(TriangleTiling, OrderZeroIsAllHex) {
  auto c = interior_census(gen_triangle_tiling(TriangleSpec::finite(0), 3, AlphaSpec::generic()));
  EXPECT_GT(c["hex"], 0);
  EXPECT_EQ(c.size(), 1u);
}

TEST(TriangleTiling, InfiniteOrderHasOneHex) {
  for (auto alpha : sample_alphas()) {
    auto p = gen_triangle_tiling(TriangleSpec::infinite(), 4, alpha);
    EXPECT_TRUE(validate(p).ok()) << validate(p).summary();
    auto c = interior_census(p);
    EXPECT_EQ(c["hex"], 1);
    EXPECT_GT(c["fault"], 0);
    EXPECT_GT(c["bowtie"], 0);
  }
}

TEST(TriangleTiling, OrderOneHasHexesAndFaultsOnly) {
  auto c = interior_census(gen_triangle_tiling(TriangleSpec::finite(1), 6, AlphaSpec::generic()));
  EXPECT_GT(c["hex"], 1);
  EXPECT_GT(c["fault"], 0);
  EXPECT_EQ(c.count("bowtie"), 0u);
}
