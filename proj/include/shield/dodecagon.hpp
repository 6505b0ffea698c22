#pragma once

// Right shield (alpha = pi/2): fillings of the unit regular dodecagon, the
// 3.12.12 packing with a filling chosen per cell, and the entropy bound.

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shield/ball.hpp"
#include "shield/enumerate.hpp"

namespace shield {

namespace dodecagon {

inline AlphaSpec alpha() { return AlphaSpec::rational(1, 2); }

/// Edge k turns by k * 30 degrees; at alpha = pi/2, 30 degrees is 2pi/3 - alpha.
inline Direction edge(int k) { return Direction(2 * k, -k); }

inline Container container() {
  Container c;
  for (int k = 0; k < 12; ++k) c.edges.push_back(edge(k));
  return c;
}

inline std::vector<ExactPoint> corners() { return container().corners(); }

/// Periods of the packing: translations taking one cell to an edge-adjacent cell.
inline ExactPoint period1() {
  auto v = corners();
  return v[0] - v[7];
}
inline ExactPoint period2() {
  auto v = corners();
  return v[2] - v[9];
}

inline double circumradius() { return 1.0 / (2.0 * std::sin(kPi / 12)); }

inline Complex center(const Geometry& g) {
  Complex c{};
  for (const auto& p : corners()) c += g.eval(p);
  return c / 12.0;
}

// Symmetries of the dodecagon as frames: corner k to the origin with edge k
// along the real axis, optionally mirrored.
inline Isometry frame(int k, bool reflect) {
  auto v = corners();
  if (!reflect) {
    Direction r(-edge(k).a(), -edge(k).b());
    return {r, false, -v[static_cast<std::size_t>(k)].rotated(r)};
  }
  Direction d = edge(k).reversed();
  return {d, true, -v[static_cast<std::size_t>((k + 1) % 12)].conjugated().rotated(d)};
}

}  // namespace dodecagon

struct Filling {
  std::vector<Placement> tiles;  // inside the dodecagon with corner 0 at the origin
  std::string key;               // serialization in this fixed position
  std::string class_key;         // least serialization over the 24 symmetries
};

namespace detail {

inline std::string filling_serialization(const std::vector<Placement>& tiles, const Geometry& g) {
  PatternBall b;
  b.alpha = g.alpha();
  b.tiles = tiles;
  return serialize_frame(b, g, std::nullopt, false);
}

}  // namespace detail

/// Isometry-class key of a set of tiles filling the dodecagon.
inline std::string filling_class_key(const std::vector<Placement>& tiles) {
  const Geometry g(dodecagon::alpha());
  std::string best;
  for (int k = 0; k < 12; ++k)
    for (bool reflect : {false, true}) {
      auto f = dodecagon::frame(k, reflect);
      std::vector<Placement> moved;
      for (const auto& pl : tiles) moved.push_back(pl.transformed(f));
      std::string s = detail::filling_serialization(moved, g);
      if (best.empty() || s < best) best = std::move(s);
    }
  return best;
}

/// Every filling of the dodecagon (fixed in place) by triangles and right
/// shields, ordered by key; this order numbers DodecagonChoice. Fillings that
/// differ by a symmetry of the dodecagon are distinct here, as they are
/// distinct choices inside the packing.
inline std::vector<Filling> dodecagon_fillings(const SearchOptions& opts = {}) {
  const Geometry g(dodecagon::alpha());
  auto found = complete_region(dodecagon::alpha(), dodecagon::container(), opts);
  if (found.stats.budget_exceeded) throw Error(ErrorCode::OutOfRange, "dodecagon search ran out of budget");
  std::map<std::string, std::vector<Placement>> by_key;
  for (auto& tiles : found.fillings) {
    std::string k = detail::filling_serialization(tiles, g);
    by_key.try_emplace(std::move(k), std::move(tiles));
  }
  std::vector<Filling> out;
  for (auto& [k, tiles] : by_key) {
    std::string c = filling_class_key(tiles);
    out.push_back({std::move(tiles), k, std::move(c)});
  }
  return out;
}

/// Filling index per packing cell (m, n), the cell at m*P1 + n*P2.
struct DodecagonChoice {
  std::map<std::pair<int, int>, int> assignment;
  std::optional<int> fallback;

  static DodecagonChoice constant(int i) { return {{}, i}; }

  int at(int m, int n) const {
    auto it = assignment.find({m, n});
    if (it != assignment.end()) return it->second;
    if (fallback) return *fallback;
    throw Error(ErrorCode::MissingChoice,
                "no filling chosen for cell (" + std::to_string(m) + ", " + std::to_string(n) + ")");
  }
};

/// Cells with max(|m|, |n|, |m+n|) <= extent, each filled per `choice`, plus the gap triangles.
inline Patch gen_dodecagon_tiling(const DodecagonChoice& choice, int extent,
                                  const std::vector<Filling>& fillings) {
  if (extent < 0) throw Error(ErrorCode::OutOfRange, "extent must be non-negative");
  Patch patch(dodecagon::alpha());
  const auto v = dodecagon::corners();
  const ExactPoint p1 = dodecagon::period1(), p2 = dodecagon::period2();
  for (int m = -extent; m <= extent; ++m)
    for (int n = -extent; n <= extent; ++n) {
      if (std::abs(m + n) > extent) continue;
      int idx = choice.at(m, n);
      if (idx < 0 || idx >= static_cast<int>(fillings.size()))
        throw Error(ErrorCode::OutOfRange, "filling index " + std::to_string(idx) + " out of range");
      const ExactPoint o = static_cast<std::int64_t>(m) * p1 + static_cast<std::int64_t>(n) * p2;
      const auto shift = Isometry::translation(o);
      for (const auto& pl : fillings[static_cast<std::size_t>(idx)].tiles) patch.add_unchecked(pl.transformed(shift));
      // the two gap triangles owned by this cell sit outside edges 1 and 3
      for (int k : {1, 3})
        patch.add_unchecked(Placement::triangle(v[static_cast<std::size_t>(k + 1)] + o, dodecagon::edge(k).reversed()));
    }
  return patch;
}

inline Patch gen_dodecagon_tiling(const DodecagonChoice& choice, int extent) {
  return gen_dodecagon_tiling(choice, extent, dodecagon_fillings());
}

/// Number of packing cells lying wholly inside the disk of radius n about corner 0 of cell (0,0).
inline int dodecagon_cells_in_disk(double n) {
  const Geometry g(dodecagon::alpha());
  const Complex c0 = dodecagon::center(g);
  const Complex z1 = g.eval(dodecagon::period1()), z2 = g.eval(dodecagon::period2());
  const double r = dodecagon::circumradius();
  const int span = static_cast<int>(std::ceil(n / std::abs(z1) * 1.3)) + 2;
  int count = 0;
  for (int m = -span; m <= span; ++m)
    for (int k = -span; k <= span; ++k) {
      Complex c = c0 + static_cast<double>(m) * z1 + static_cast<double>(k) * z2;
      if (std::abs(c) + r <= n + 1e-9) ++count;
    }
  return count;
}

/// log(3) D(n) / n^2, a lower bound on log(P_n) / n^2 for right shields.
inline double entropy_bound(int n) {
  if (n <= 0) return 0.0;
  return std::log(3.0) * dodecagon_cells_in_disk(n) / (static_cast<double>(n) * n);
}

}  // namespace shield
