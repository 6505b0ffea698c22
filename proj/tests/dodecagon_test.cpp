#include <gtest/gtest.h>

#include <random>

#include "shield/classify.hpp"
#include "shield/dodecagon.hpp"

using namespace shield;

TEST(Dodecagon, ThreeFillingsOfFourShieldsAndFourTriangles) {
  auto f = dodecagon_fillings();
  ASSERT_EQ(f.size(), 3u);
  for (const auto& x : f) {
    int shields = 0;
    for (const auto& pl : x.tiles) shields += pl.kind == TileKind::Shield;
    // area: 4 (3 + sqrt3)/2 + 4 sqrt3/4 = 6 + 3 sqrt3, the unit dodecagon
    EXPECT_EQ(shields, 4);
    EXPECT_EQ(x.tiles.size(), 8u);
  }
  EXPECT_LT(f[0].key, f[1].key);
  EXPECT_LT(f[1].key, f[2].key);
}

TEST(Dodecagon, FillingsAreQuarterTurnSymmetricRotationsOfEachOther) {
  auto f = dodecagon_fillings();
  for (const auto& x : f) EXPECT_EQ(x.class_key, f[0].class_key);
}

TEST(Dodecagon, EveryChoiceTilesValidly) {
  auto f = dodecagon_fillings();
  for (int i = 0; i < 3; ++i) {
    auto p = gen_dodecagon_tiling(DodecagonChoice::constant(i), 2, f);
    EXPECT_TRUE(validate(p).ok()) << i << "\n" << validate(p).summary();
  }
  std::mt19937 rng(5);
  DodecagonChoice mixed;
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) mixed.assignment[{m, n}] = static_cast<int>(rng() % 3);
  auto p = gen_dodecagon_tiling(mixed, 3, f);
  EXPECT_TRUE(validate(p).ok()) << validate(p).summary();
  auto census = vertex_census(p);
  EXPECT_GT(census.size(), 3u);
}

TEST(Dodecagon, MissingChoiceThrows) {
  DodecagonChoice partial;
  partial.assignment[{0, 0}] = 1;
  try {
    gen_dodecagon_tiling(partial, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingChoice);
  }
}

TEST(Dodecagon, CellsInDiskAgainstDirectCount) {
  // packing cells: centres on the lattice spanned by two periods of length 2 + sqrt3
  const double r = 1.0 / (2 * std::sin(kPi / 12)), period = 2 + std::sqrt(3.0);
  EXPECT_NEAR(std::abs(Geometry(dodecagon::alpha()).eval(dodecagon::period1())), period, 1e-12);
  EXPECT_NEAR(std::abs(Geometry(dodecagon::alpha()).eval(dodecagon::period2())), period, 1e-12);
  EXPECT_NEAR(std::abs(dodecagon::center(Geometry(dodecagon::alpha()))), r, 1e-12);
  EXPECT_EQ(dodecagon_cells_in_disk(2 * r - 1e-6), 0);
  // corner 0 lies on two cells, both at distance r from it
  EXPECT_EQ(dodecagon_cells_in_disk(2 * r + 1e-6), 2);
  for (int n = 1; n < 12; ++n) EXPECT_LE(dodecagon_cells_in_disk(n), dodecagon_cells_in_disk(n + 1));
}

TEST(Dodecagon, EntropyBoundPositivePastFirstCell) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(entropy_bound(n), 0.0);
  for (int n = 4; n <= 12; ++n) EXPECT_GT(entropy_bound(n), 0.0);
  EXPECT_NEAR(entropy_bound(4), std::log(3.0) * 2 / 16, 1e-15);
}
