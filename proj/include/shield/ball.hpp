#pragma once

// Pattern balls: the tiles of a patch meeting a closed disk about a vertex,
// keyed canonically up to plane isometry.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "shield/patch.hpp"

namespace shield {

struct PatternBall {
  AlphaSpec alpha = AlphaSpec::generic();
  int center_vertex = -1;
  Complex center;
  std::optional<ExactPoint> center_exact;
  double radius = 0;
  std::vector<int> tile_ids;  // indices into the source patch
  std::vector<Placement> tiles;
  std::vector<Direction> center_edges;  // edge directions leaving the center
  std::string key;
};

namespace detail {

// Distinct edge directions leaving vertex v.
inline std::vector<Direction> center_edge_directions(const Patch& patch, int v) {
  std::vector<Direction> dirs;
  for (const auto& c : patch.vertex(v).corners) {
    dirs.push_back(c.start);
    dirs.push_back(c.start + to_angle(c.label));
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return dirs;
}

inline std::string numeric_token(Complex z) {
  long long x = std::llround(z.real() * 1e6), y = std::llround(z.imag() * 1e6);
  return std::to_string(x) + ',' + std::to_string(y);
}

// Serializes the ball in one frame: translate the center to the origin, then
// optionally reflect and rotate edge direction d onto the positive real axis.
inline std::string serialize_frame(const PatternBall& ball, const Geometry& g, std::optional<Direction> d,
                                   bool reflect) {
  std::vector<std::string> tiles;
  tiles.reserve(ball.tiles.size());
  const bool exact = g.exact_points() && ball.center_exact &&
                     std::all_of(ball.tiles.begin(), ball.tiles.end(), [](const Placement& p) { return p.is_exact(); });
  Complex turn{1, 0};
  if (d) turn = g.unit(*d);
  for (const auto& pl : ball.tiles) {
    std::vector<std::string> verts;
    if (exact) {
      for (const auto& p : pl.vertices()) {
        ExactPoint q = p - *ball.center_exact;
        if (d) q = reflect ? q.conjugated().rotated(*d) : q.rotated(Direction(-d->a(), -d->b()));
        verts.push_back(q.to_string());
      }
    } else {
      for (auto z : pl.numeric_vertices(g)) {
        Complex q = z - ball.center;
        if (d) q = reflect ? std::conj(q) * turn : q * std::conj(turn);
        verts.push_back(numeric_token(q));
      }
    }
    std::sort(verts.begin(), verts.end());
    std::string s(1, static_cast<char>(pl.kind));
    for (const auto& v : verts) s += '|' + v;
    tiles.push_back(std::move(s));
  }
  std::sort(tiles.begin(), tiles.end());
  std::string out;
  for (const auto& t : tiles) out += t + ';';
  return out;
}

}  // namespace detail

/// Key equal for two balls iff one maps onto the other by a plane isometry.
/// Any such isometry fixes the center, so it maps some center edge onto the
/// positive real axis; trying every edge with and without reflection suffices.
inline std::string canonical_key(const PatternBall& ball) {
  Geometry g(ball.alpha);
  std::string best;
  bool first = true;
  for (const auto& d : ball.center_edges)
    for (bool reflect : {false, true}) {
      std::string s = detail::serialize_frame(ball, g, d, reflect);
      if (first || s < best) best = std::move(s);
      first = false;
    }
  if (first) best = detail::serialize_frame(ball, g, std::nullopt, false);
  return best;
}

/// Key equal for two balls iff one is a translate of the other.
inline std::string translation_key(const PatternBall& ball) {
  Geometry g(ball.alpha);
  return detail::serialize_frame(ball, g, std::nullopt, false);
}

/// Whether the closed disk of radius n about vertex v lies inside the patch.
inline bool covers_disk(const Patch& patch, int v, double n, double tol = 1e-7) {
  if (!patch.is_interior(v)) return false;
  const Complex c = patch.vertex(v).xy;
  for (int t : patch.tiles_near(c, n + 2.4)) {
    const auto& rec = patch.tile(t);
    const std::size_t k = rec.verts.size();
    for (std::size_t i = 0; i < k; ++i) {
      int a = rec.verts[i], b = rec.verts[(i + 1) % k];
      if (patch.edge_tiles(a, b).size() != 1) continue;
      if (detail::point_segment_distance(c, patch.vertex(a).xy, patch.vertex(b).xy) < n - tol) return false;
    }
  }
  return true;
}

/// Tiles whose closed region meets the closed disk of radius n about vertex v.
inline PatternBall extract_ball(const Patch& patch, int v, double n, bool check_coverage = true) {
  if (check_coverage && !covers_disk(patch, v, n)) {
    throw Error(ErrorCode::IncompleteCoverage,
                "the disk of radius " + std::to_string(n) + " about vertex " + std::to_string(v) +
                    " is not covered by the patch");
  }
  PatternBall ball;
  ball.alpha = patch.alpha();
  ball.center_vertex = v;
  ball.center = patch.vertex(v).xy;
  ball.center_exact = patch.vertex(v).exact;
  ball.radius = n;
  for (int t : patch.tiles_near(ball.center, n + 2.0)) {
    if (detail::point_polygon_distance(ball.center, patch.tile(t).pts) <= n + 1e-9) {
      ball.tile_ids.push_back(t);
      ball.tiles.push_back(patch.tile(t).placement);
    }
  }
  ball.center_edges = detail::center_edge_directions(patch, v);
  ball.key = canonical_key(ball);
  return ball;
}

}  // namespace shield
