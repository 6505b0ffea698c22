#pragma once

// Finite windows of the periodic shield tiling families: stacked shield lines
// and the shield triangle tilings of order k.

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shield/patch.hpp"

namespace shield {

// ---------------------------------------------------------------------------
// Shared lattice pieces

namespace lattice {

/// Base shield: anchor at the origin, heading (0,0).
inline std::vector<ExactPoint> base_shield() { return Placement::shield({}, {}).vertices(); }

/// Tip-to-tip step along a shield line (c3 - c0 of the base shield).
inline ExactPoint line_step() {
  auto v = base_shield();
  return v[3] - v[0];
}

/// Uniform (all-bowtie) lattice with shields of heading h at anchor + mL + nL2.
inline void bowtie_cell(std::vector<Placement>& out, const ExactPoint& origin, Direction h) {
  ExactPoint l = line_step().rotated(h);
  out.push_back(Placement::shield(origin, h));
  ExactPoint j = origin + l;
  out.push_back(Placement::triangle(j, h + SymbolicAngle{0, 1}));
  out.push_back(Placement::triangle(j, h + SymbolicAngle{5, 0}));
}

inline ExactPoint omega_power(int k) { return ExactPoint::unit(Direction(k, 0)); }

}  // namespace lattice

/// Keeps the placements whose closed tile meets the closed disk |z - center| <= radius.
inline Patch window(const AlphaSpec& alpha, const std::vector<Placement>& tiles, Complex center,
                    double radius) {
  Patch patch(alpha);
  const Geometry& g = patch.geometry();
  std::set<std::pair<char, std::pair<long long, long long>>> seen;
  for (const auto& pl : tiles) {
    auto pts = pl.numeric_vertices(g);
    if (detail::point_polygon_distance(center, pts) > radius + 1e-9) continue;
    Complex c{};
    for (auto z : pts) c += z;
    c /= static_cast<double>(pts.size());
    auto key = std::pair(static_cast<char>(pl.kind),
                         std::pair(std::llround(c.real() * 1e6), std::llround(c.imag() * 1e6)));
    if (!seen.insert(key).second) continue;
    patch.add_unchecked(pl);
  }
  return patch;
}

// ---------------------------------------------------------------------------
// Shield line tilings

/// One orientation letter per shield line, bottom to top.
struct OrientationWord {
  std::string letters;  // over {'+', '-'}

  static OrientationWord parse(const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::Parse, "orientation word must be non-empty");
    for (char c : s)
      if (c != '+' && c != '-') throw Error(ErrorCode::Parse, "orientation letters are '+' and '-'");
    return {s};
  }
  std::size_t size() const { return letters.size(); }

  OrientationWord reversed() const { return {std::string(letters.rbegin(), letters.rend())}; }
  OrientationWord flipped() const {
    std::string s = letters;
    for (char& c : s) c = (c == '+') ? '-' : '+';
    return {s};
  }
  /// Least of the word, its reversal, its flip and both.
  OrientationWord normalized() const {
    std::string best = letters;
    for (const auto& w : {reversed(), flipped(), reversed().flipped()}) best = std::min(best, w.letters);
    return {best};
  }
  friend bool operator==(const OrientationWord&, const OrientationWord&) = default;
};

namespace detail {

// Mirror that swaps the two orientations of a shield line: z -> -e^{i alpha} conj(z).
inline Isometry line_flip() { return {Direction(3, 1), true, {}}; }

// Maps line j onto line j+1 when both carry the same letter.
inline Isometry same_letter_step() {
  auto v = lattice::base_shield();
  return Isometry::translation(v[4] - v[1]);
}

// Maps line j onto line j+1 when the letters differ (the two lines meet in a fault line).
inline Isometry opposite_letter_step() {
  auto v = lattice::base_shield();
  Isometry rho = line_flip();
  return {rho.rot, true, v[4] - rho.apply(v[1])};
}

}  // namespace detail

/// Placements of the stacked lines, before windowing; line j keeps 2*extent+1 shields.
inline std::vector<Placement> line_tiling_placements(const OrientationWord& word, int extent,
                                                     const Geometry& g) {
  std::vector<Placement> out;
  const ExactPoint step = lattice::line_step();
  const Complex l = g.eval(step);
  const Complex axis = l / std::abs(l);
  Isometry frame = word.letters[0] == '+' ? Isometry::identity() : detail::line_flip();
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (j > 0) {
      bool same = word.letters[j] == word.letters[j - 1];
      frame = frame.compose(same ? detail::same_letter_step() : detail::opposite_letter_step());
    }
    Complex origin = frame.apply(Complex{}, g);
    Complex image = frame.apply(l, g) - origin;
    double sense = detail::dot(image, l) > 0 ? 1.0 : -1.0;
    int k0 = static_cast<int>(std::lround(-sense * detail::dot(origin, axis) / std::abs(l)));
    for (int k = k0 - extent - 1; k <= k0 + extent; ++k) {
      std::vector<Placement> cell;
      lattice::bowtie_cell(cell, static_cast<std::int64_t>(k) * step, Direction{});
      for (std::size_t c = 0; c < cell.size(); ++c) {
        if (c == 0 && k == k0 - extent - 1) continue;  // junction triangles only
        out.push_back(cell[c].transformed(frame));
      }
    }
  }
  return out;
}

inline Patch gen_line_tiling(const OrientationWord& word, int extent, const AlphaSpec& alpha) {
  if (extent < 1) throw Error(ErrorCode::OutOfRange, "extent must be at least 1");
  Patch patch(alpha);
  for (const auto& pl : line_tiling_placements(word, extent, patch.geometry())) patch.add_unchecked(pl);
  return patch;
}

// ---------------------------------------------------------------------------
// Shield triangle tilings

struct TriangleSpec {
  std::optional<int> order;  // empty for the infinite-order limit

  static TriangleSpec finite(int k) {
    if (k < 0) throw Error(ErrorCode::OutOfRange, "order must be non-negative");
    return {k};
  }
  static TriangleSpec infinite() { return {std::nullopt}; }
  bool is_infinite() const { return !order.has_value(); }
  std::string to_string() const { return order ? std::to_string(*order) : "inf"; }
  friend bool operator==(const TriangleSpec&, const TriangleSpec&) = default;
};

/// Hex spacing of the order-k tiling (k >= 1); the other period is omega times it.
inline ExactPoint triangle_period(int k) {
  ExactPoint p2 = lattice::omega_power(2);
  ExactPoint c = Placement::shield(lattice::omega_power(4), Direction(2, 0)).vertices()[4];
  return p2 - c + static_cast<std::int64_t>(k - 1) * lattice::line_step();
}

/// Every order-k tile meeting the disk of the given radius about the origin hex.
inline std::vector<Placement> triangle_tiling_placements(int k, double radius, const Geometry& g) {
  std::vector<Placement> out;
  if (k == 0) {
    const int r = static_cast<int>(std::ceil(radius * 1.2)) + 2;
    for (int i = -r; i <= r; ++i)
      for (int j = -r; j <= r; ++j) {
        ExactPoint p = static_cast<std::int64_t>(i) * lattice::omega_power(0) +
                       static_cast<std::int64_t>(j) * lattice::omega_power(1);
        out.push_back(Placement::triangle(p, Direction(0, 0)));
        out.push_back(Placement::triangle(p, Direction(1, 0)));
      }
    return out;
  }

  const ExactPoint m1 = triangle_period(k);
  const ExactPoint m2 = m1.rotated(Direction(1, 0));
  const Complex z1 = g.eval(m1), z2 = g.eval(m2);
  const double det = detail::cross(z1, z2);
  const double spacing = std::abs(z1);
  const double step = std::abs(g.eval(lattice::line_step()));

  std::vector<std::pair<ExactPoint, Complex>> hexes;
  const int hr = static_cast<int>(std::ceil((radius + 2 * spacing) / spacing * 1.2)) + 1;
  for (int a = -hr; a <= hr; ++a)
    for (int b = -hr; b <= hr; ++b) {
      Complex z = static_cast<double>(a) * z1 + static_cast<double>(b) * z2;
      if (std::abs(z) > radius + 2 * spacing) continue;
      hexes.push_back({static_cast<std::int64_t>(a) * m1 + static_cast<std::int64_t>(b) * m2, z});
    }

  for (const auto& [h, hz] : hexes)
    if (std::abs(hz) <= radius + 2)
      for (int i = 0; i < 6; ++i) out.push_back(Placement::triangle(h, Direction(i, 0)));

  // Each hex owns an "up" and a "down" triangle of the hex grid; both are
  // filled with the bowtie lattice anchored at a neighbour of the hex.
  const int lr = static_cast<int>(std::ceil(1.3 * spacing / step)) + 2;
  std::vector<Placement> cell;
  for (const auto& [h, hz] : hexes) {
    struct Region {
      ExactPoint anchor;
      Direction heading;
      bool up;
    };
    const Region regions[2] = {{h + lattice::omega_power(2), Direction(0, 0), true},
                               {h + lattice::omega_power(1), Direction(5, 0), false}};
    for (const auto& reg : regions) {
      const ExactPoint l = lattice::line_step().rotated(reg.heading);
      const ExactPoint l2 = l.rotated(Direction(2, 0));
      for (int m = -lr; m <= lr; ++m)
        for (int n = -lr; n <= lr; ++n) {
          cell.clear();
          lattice::bowtie_cell(cell,
                               reg.anchor + static_cast<std::int64_t>(m) * l + static_cast<std::int64_t>(n) * l2,
                               reg.heading);
          for (const auto& pl : cell) {
            auto pts = pl.numeric_vertices(g);
            Complex c{};
            for (auto z : pts) c += z;
            c /= static_cast<double>(pts.size());
            if (std::abs(c) > radius + 2) continue;
            bool near_hex = false;
            for (const auto& [oh, ohz] : hexes)
              if (std::abs(c - ohz) < 0.7) near_hex = true;
            if (near_hex) continue;
            const double x = detail::cross(c, z2) / det, y = detail::cross(z1, c) / det;
            const double fx = x - std::floor(x), fy = y - std::floor(y);
            const bool up = fx + fy < 1;
            Complex owner = std::floor(x) * z1 + std::floor(y) * z2;
            if (!up) owner += z2;
            if (up != reg.up || std::abs(owner - hz) > 1e-6) continue;
            out.push_back(pl);
          }
        }
    }
  }
  return out;
}

/// Window of radius `extent` about a hex (order k >= 1 or infinite) or a vertex (k = 0).
/// The infinite order is the order 2*extent+1 tiling, which shows a single hex in the window.
inline Patch gen_triangle_tiling(const TriangleSpec& spec, int extent, const AlphaSpec& alpha) {
  if (extent < 1) throw Error(ErrorCode::OutOfRange, "extent must be at least 1");
  const int k = spec.order ? *spec.order : 2 * extent + 1;
  Geometry g(alpha);
  return window(alpha, triangle_tiling_placements(k, extent, g), Complex{}, extent);
}

}  // namespace shield
