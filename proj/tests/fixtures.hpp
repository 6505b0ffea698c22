#pragma once

#include <random>

#include <cmath>
#include <set>
#include <string>

#include "shield/ball.hpp"
#include "shield/generators.hpp"

namespace shield::testing {

inline Isometry random_isometry(std::mt19937& rng) {
  std::uniform_int_distribution<int> da(0, 5), db(-3, 3), coin(0, 1);
  ExactPoint t;
  for (int i = 0; i < 3; ++i) t = unit_step(t, Direction(da(rng), db(rng)));
  return {Direction(da(rng), db(rng)), coin(rng) == 1, t};
}

inline Patch moved(const Patch& p, const Isometry& f) {
  Patch out(p.alpha());
  for (const auto& pl : p.placements()) out.add_unchecked(pl.transformed(f, &p.geometry()));
  return out;
}

/// Interior vertex closest to the vertex centroid shifted by `offset`.
inline int central_vertex(const Patch& p, Complex offset = {}) {
  Complex z = offset;
  for (int v = 0; v < static_cast<int>(p.vertex_count()); ++v) z += p.vertex(v).xy / static_cast<double>(p.vertex_count());
  int best = -1;
  for (int v = 0; v < static_cast<int>(p.vertex_count()); ++v) {
    if (!p.is_interior(v)) continue;
    if (best < 0 || std::abs(p.vertex(v).xy - z) < std::abs(p.vertex(best).xy - z)) best = v;
  }
  return best;
}

/// Canonical key of the ball at v agrees with the key at the image vertex
/// under `trials` random isometries.
inline bool key_invariant(const Patch& p, int v, double n, int trials, std::mt19937& rng) {
  const std::string key = extract_ball(p, v, n).key;
  for (int i = 0; i < trials; ++i) {
    auto f = random_isometry(rng);
    Patch q = moved(p, f);
    Complex image = f.apply(p.vertex(v).xy, p.geometry());
    auto w = q.find_vertex(image);
    if (!w || extract_ball(q, *w, n).key != key) return false;
  }
  return true;
}

/// Keys of every covered radius-n ball in line tilings (words up to max_word)
/// and triangle tilings (orders up to max_order, and infinity).
inline std::set<std::string> harvest_keys(double n, const AlphaSpec& alpha, int max_word, int max_order) {
  std::set<std::string> out;
  auto take = [&](const Patch& p) {
    for (int v = 0; v < static_cast<int>(p.vertex_count()); ++v)
      if (covers_disk(p, v, n)) out.insert(extract_ball(p, v, n).key);
  };
  const int ext = static_cast<int>(std::ceil(2 * n)) + 3;
  for (int len = 1; len <= max_word; ++len)
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string w;
      for (int i = 0; i < len; ++i) w += (mask >> i & 1) ? '-' : '+';
      take(gen_line_tiling(OrientationWord::parse(w), ext, alpha));
    }
  const Geometry g(alpha);
  for (int k = 0; k <= max_order; ++k) {
    int e = k == 0 ? ext : static_cast<int>(std::ceil(std::abs(g.eval(triangle_period(k))))) + ext;
    take(gen_triangle_tiling(TriangleSpec::finite(k), e, alpha));
  }
  take(gen_triangle_tiling(TriangleSpec::infinite(), ext + 2, alpha));
  return out;
}

}  // namespace shield::testing
