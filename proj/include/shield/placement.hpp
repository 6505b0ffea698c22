#pragma once

#include <optional>
#include <vector>

#include "shield/angle.hpp"
#include "shield/atlas.hpp"

namespace shield {

enum class TileKind : char { Triangle = 'T', Shield = 'S' };

/// A tile copy: anchor vertex plus the direction of the first counterclockwise
/// boundary edge. Shield anchors sit on an alpha corner, so corner labels run
/// A,B,A,B,A,B from the anchor.
struct Placement {
  TileKind kind = TileKind::Triangle;
  ExactPoint anchor;
  Direction heading;
  // Set when the anchor was given numerically (SHIELD/1 "num" form).
  std::optional<Complex> float_anchor;

  static Placement triangle(ExactPoint anchor, Direction heading) {
    return {TileKind::Triangle, std::move(anchor), heading, std::nullopt};
  }
  static Placement shield(ExactPoint anchor, Direction heading) {
    return {TileKind::Shield, std::move(anchor), heading, std::nullopt};
  }

  /// The tile whose corner `label` sits at `vertex` and spans counterclockwise
  /// from direction `start`.
  static Placement with_corner(AngleLabel label, const ExactPoint& vertex, Direction start) {
    switch (label) {
      case AngleLabel::T: return triangle(vertex, start);
      case AngleLabel::A: return shield(vertex, start);
      case AngleLabel::B: {
        // The B corner is c1: its outgoing edge is heading + (-1, 1).
        Direction h = start + SymbolicAngle{1, -1};
        return shield(vertex - ExactPoint::unit(h), h);
      }
    }
    return {};
  }

  bool is_exact() const { return !float_anchor.has_value(); }
  int size() const { return kind == TileKind::Triangle ? 3 : 6; }

  AngleLabel label(int i) const {
    if (kind == TileKind::Triangle) return AngleLabel::T;
    return (i % 2 == 0) ? AngleLabel::A : AngleLabel::B;
  }

  /// Direction of edge i, which leaves vertex i; corner i spans from it
  /// counterclockwise by the corner angle.
  Direction edge_direction(int i) const {
    if (kind == TileKind::Triangle) return heading + SymbolicAngle{2 * i, 0};
    // Turn pi - beta = (-1, 1) after each B corner, pi - alpha = (3, -1) after each A.
    static constexpr std::array<SymbolicAngle, 6> kOffsets{
        {{0, 0}, {-1, 1}, {2, 0}, {1, 1}, {4, 0}, {3, 1}}};
    return heading + kOffsets[static_cast<std::size_t>(i)];
  }

  std::vector<ExactPoint> vertices() const {
    std::vector<ExactPoint> v;
    v.reserve(static_cast<std::size_t>(size()));
    v.push_back(anchor);
    for (int i = 0; i + 1 < size(); ++i) v.push_back(unit_step(v.back(), edge_direction(i)));
    return v;
  }

  std::vector<Complex> numeric_vertices(const Geometry& g) const {
    std::vector<Complex> v;
    v.reserve(static_cast<std::size_t>(size()));
    v.push_back(float_anchor ? *float_anchor : g.eval(anchor));
    for (int i = 0; i + 1 < size(); ++i) v.push_back(v.back() + g.unit(edge_direction(i)));
    return v;
  }

  /// Image under an isometry. Reflections reverse the walk, so the anchor
  /// and heading are re-derived to keep counterclockwise order.
  Placement transformed(const Isometry& f, const Geometry* g = nullptr) const {
    Placement out;
    out.kind = kind;
    out.anchor = f.apply(anchor);
    if (float_anchor) {
      if (!g) throw Error(ErrorCode::NoNumericValue, "numeric placement needs a geometry");
      out.float_anchor = f.apply(*float_anchor, *g);
    }
    if (!f.reflect) {
      out.heading = f.apply(heading);
    } else if (kind == TileKind::Triangle) {
      out.heading = f.apply(heading + SymbolicAngle{1, 0});
    } else {
      out.heading = f.apply(heading + SymbolicAngle{0, 1});
    }
    return out;
  }
};

}  // namespace shield
