#pragma once

// Decides whether a finite patch is a window of a shield line tiling or of a
// shield triangle tiling, and reads off the word or the order.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "shield/generators.hpp"
#include "shield/patch.hpp"

namespace shield {

using Census = std::map<VertexConfig, std::vector<int>>;

/// Interior vertices grouped by configuration.
inline Census vertex_census(const Patch& patch) {
  auto rep = validate(patch);
  if (!rep.ok()) throw Error(ErrorCode::NotValidated, rep.violations.front().message);
  Census out;
  for (int v = 0; v < static_cast<int>(patch.vertex_count()); ++v)
    if (patch.is_interior(v)) out[VertexConfig(patch.star(v).word())].push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Fault lines

enum class Terminus { PatchBoundary, HexVertex, Irregular };

inline const char* to_string(Terminus t) {
  switch (t) {
    case Terminus::PatchBoundary: return "PatchBoundary";
    case Terminus::HexVertex: return "HexVertex";
    case Terminus::Irregular: return "Irregular";
  }
  return "?";
}

struct FaultLine {
  std::vector<int> vertices;  // fault vertices in chain order
  // Unit vector along the chain. Faults zigzag about a line of direction
  // alpha/2, which is not an edge direction, so this is numeric.
  Complex direction;
  // Exact translation between every second chain vertex, when the patch is exact.
  std::optional<ExactPoint> period;
  std::array<Terminus, 2> termini{};
  std::array<int, 2> end_vertices{-1, -1};  // first vertex past each end

  friend bool operator==(const FaultLine& x, const FaultLine& y) {
    return x.vertices == y.vertices && x.termini == y.termini && x.end_vertices == y.end_vertices;
  }
};

namespace detail {

inline bool is_interior_config(const Patch& p, int v, bool (VertexConfig::*pred)() const) {
  return p.is_interior(v) && (VertexConfig(p.star(v).word()).*pred)();
}

// The two chain edges at a fault vertex: the one between its two shields and
// the one between its two triangles. Returns the far endpoints.
inline std::array<int, 2> fault_neighbors(const Patch& p, int v) {
  std::array<int, 2> out{-1, -1};
  const auto& corners = p.vertex(v).corners;
  for (const auto& c : corners) {
    const auto& t = p.tile(c.tile);
    const int n = static_cast<int>(t.verts.size());
    const int next = t.verts[static_cast<std::size_t>((c.index + 1) % n)];
    // edge (v, next) is shared with another tile of the same kind?
    auto tiles = p.edge_tiles(v, next);
    if (tiles.size() != 2) continue;
    const auto& other = p.tile(tiles[0] == c.tile ? tiles[1] : tiles[0]);
    if (other.placement.kind != t.placement.kind) continue;
    out[t.placement.kind == TileKind::Shield ? 0 : 1] = next;
  }
  return out;
}

}  // namespace detail

/// The maximal fault chain through the interior fault vertex v.
inline FaultLine trace_fault_line(const Patch& patch, int v) {
  auto is_fault = [&](int u) { return detail::is_interior_config(patch, u, &VertexConfig::is_fault); };
  if (!is_fault(v)) throw Error(ErrorCode::OutOfRange, "vertex is not an interior fault");

  auto walk = [&](int start, int first_step, std::vector<int>& chain) -> std::pair<Terminus, int> {
    int prev = start, cur = first_step;
    while (true) {
      if (cur < 0) return {Terminus::PatchBoundary, -1};
      if (!is_fault(cur)) {
        if (!patch.is_interior(cur)) return {Terminus::PatchBoundary, cur};
        if (detail::is_interior_config(patch, cur, &VertexConfig::is_hex)) return {Terminus::HexVertex, cur};
        return {Terminus::Irregular, cur};
      }
      if (cur == start || std::find(chain.begin(), chain.end(), cur) != chain.end())
        return {Terminus::Irregular, cur};  // closed loop
      chain.push_back(cur);
      auto nb = detail::fault_neighbors(patch, cur);
      int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
  };

  auto nb = detail::fault_neighbors(patch, v);
  std::vector<int> fwd, back;
  auto [t0, e0] = walk(v, nb[0], fwd);
  auto [t1, e1] = walk(v, nb[1], back);

  FaultLine line;
  line.vertices.assign(back.rbegin(), back.rend());
  line.vertices.push_back(v);
  line.vertices.insert(line.vertices.end(), fwd.begin(), fwd.end());
  line.termini = {t1, t0};
  line.end_vertices = {e1, e0};
  if (detail::xy_less(patch.vertex(line.vertices.back()).xy, patch.vertex(line.vertices.front()).xy)) {
    std::reverse(line.vertices.begin(), line.vertices.end());
    std::swap(line.termini[0], line.termini[1]);
    std::swap(line.end_vertices[0], line.end_vertices[1]);
  }
  const auto& vs = line.vertices;
  Complex span = patch.vertex(vs.back()).xy - patch.vertex(vs.front()).xy;
  if (vs.size() >= 3) {
    // even-spaced vertices lie on the line itself
    std::size_t last = (vs.size() - 1) / 2 * 2;
    span = patch.vertex(vs[last]).xy - patch.vertex(vs.front()).xy;
    const auto& a = patch.vertex(vs[0]).exact;
    const auto& b = patch.vertex(vs[2]).exact;
    if (a && b) line.period = *b - *a;
  }
  if (std::abs(span) > 0) line.direction = span / std::abs(span);
  return line;
}

/// Every maximal fault chain of the patch, each listed once.
inline std::vector<FaultLine> fault_lines(const Patch& patch, const Census& census) {
  std::vector<FaultLine> out;
  std::set<int> seen;
  auto it = census.find(fault_config());
  if (it == census.end()) return out;
  for (int v : it->second) {
    if (seen.count(v)) continue;
    auto line = trace_fault_line(patch, v);
    seen.insert(line.vertices.begin(), line.vertices.end());
    out.push_back(std::move(line));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification

struct Classification {
  enum class Verdict { Line, Triangle, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  OrientationWord word;
  TriangleSpec order;
  bool complete = false;
  std::string reason;

  static Classification line(OrientationWord w, bool complete) {
    return {Verdict::Line, std::move(w), {}, complete, {}};
  }
  static Classification triangle(TriangleSpec k, bool complete) {
    return {Verdict::Triangle, {}, k, complete, {}};
  }
  static Classification inconclusive(std::string why) {
    return {Verdict::Inconclusive, {}, {}, false, std::move(why)};
  }

  std::string to_string() const {
    switch (verdict) {
      case Verdict::Line: return "Line(word=" + word.letters + ")";
      case Verdict::Triangle: return "Triangle(order=" + order.to_string() + ")";
      case Verdict::Inconclusive: return "Inconclusive(" + reason + ")";
    }
    return {};
  }
};

namespace detail {

inline double axis_angle(Complex v) {
  double a = std::atan2(v.imag(), v.real());
  if (a < 0) a += 2 * kPi;
  return a;
}

// Angular distance of two angles modulo pi.
inline double axis_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), kPi);
  return std::min(d, kPi - d);
}

inline Classification classify_lines(const Patch& patch, const Census& census) {
  struct ShieldInfo {
    Complex axis;  // c0 -> c3
    Complex centroid;
  };
  std::vector<ShieldInfo> shields;
  for (const auto& t : patch.tiles())
    if (t.placement.kind == TileKind::Shield) shields.push_back({t.pts[3] - t.pts[0], t.centroid});
  if (shields.empty()) return Classification::inconclusive("no hex and no shield");

  const double ref = axis_angle(shields.front().axis);
  for (const auto& s : shields)
    if (axis_gap(axis_angle(s.axis), ref) > 1e-6)
      return Classification::inconclusive("shields lie on more than one axis");

  const Complex u = shields.front().axis / std::abs(shields.front().axis);
  const Complex perp(-u.imag(), u.real());
  auto faults = fault_lines(patch, census);
  for (const auto& f : faults) {
    if (f.vertices.size() < 3) continue;
    if (std::abs(cross(f.direction, u)) > 1e-6)
      return Classification::inconclusive("fault line not parallel to the shield axis");
    if (std::any_of(f.termini.begin(), f.termini.end(), [](Terminus t) { return t != Terminus::PatchBoundary; }))
      return Classification::inconclusive("fault line ends inside the patch");
  }

  // Group shields into lines by their offset across the axis.
  std::vector<std::pair<double, char>> rows;
  for (const auto& s : shields) {
    char letter = dot(s.axis, u) > 0 ? '+' : '-';
    rows.push_back({dot(s.centroid, perp), letter});
  }
  std::sort(rows.begin(), rows.end());
  std::string word;
  double last = -1e300;
  for (const auto& [off, letter] : rows) {
    if (off - last > 0.5) {
      word.push_back(letter);
    } else if (word.back() != letter) {
      return Classification::inconclusive("a shield line mixes both orientations");
    }
    last = off;
  }
  auto w = OrientationWord{word}.normalized();
  return Classification::line(w, !faults.empty());
}

inline Classification classify_triangle(const Patch& patch, const Census& census, const std::vector<int>& hexes) {
  const auto& g = patch.geometry();
  bool any_shield = std::any_of(patch.tiles().begin(), patch.tiles().end(),
                                [](const Patch::TileRec& t) { return t.placement.kind == TileKind::Shield; });
  for (const auto& [cfg, vs] : census)
    if (!cfg.is_hex() && !cfg.is_bowtie() && !cfg.is_fault())
      return Classification::inconclusive("configuration " + cfg.str() + " outside the generic atlas");
  if (!any_shield) {
    if (census.size() == 1) return Classification::triangle(TriangleSpec::finite(0), true);
    return Classification::inconclusive("triangles only, but not every interior vertex is a hex");
  }

  std::set<int> hexset(hexes.begin(), hexes.end());
  for (int h : hexes)
    for (const auto& c : patch.vertex(h).corners) {
      const auto& t = patch.tile(c.tile);
      for (int w : t.verts)
        if (w != h && hexset.count(w)) return Classification::inconclusive("two hexes are adjacent");
    }

  for (const auto& f : fault_lines(patch, census))
    for (auto t : f.termini)
      if (t == Terminus::Irregular) return Classification::inconclusive("fault line ends at a non-hex vertex");

  if (hexes.size() == 1) return Classification::triangle(TriangleSpec::infinite(), false);

  // Hex grid: all differences must be integer combinations of v1 and v1 rotated by pi/3.
  std::vector<Complex> pts;
  for (int h : hexes) pts.push_back(patch.vertex(h).xy);
  Complex v1{};
  double best = 1e300;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (std::norm(pts[j] - pts[i]) < best) {
        best = std::norm(pts[j] - pts[i]);
        v1 = pts[j] - pts[i];
      }
  const Complex v2 = v1 * std::polar(1.0, kPi / 3);
  const double det = cross(v1, v2);
  for (auto z : pts) {
    Complex d = z - pts.front();
    double x = cross(d, v2) / det, y = cross(v1, d) / det;
    if (std::abs(x - std::round(x)) > 1e-6 || std::abs(y - std::round(y)) > 1e-6)
      return Classification::inconclusive("hexes do not form a triangular grid");
  }

  // Invert the spacing function of the construction.
  for (int k = 1; k <= 1000; ++k) {
    double s = std::norm(g.eval(triangle_period(k)));
    if (std::abs(s - best) < 1e-6 * std::max(1.0, s)) return Classification::triangle(TriangleSpec::finite(k), true);
    if (s > best + 1) break;
  }
  return Classification::inconclusive("hex spacing matches no order");
}

}  // namespace detail

/// Line or triangle tiling verdict for a valid patch.
inline Classification classify(const Patch& patch) {
  if (patch.alpha().right_shield())
    return Classification::inconclusive("right shield out of classification scope");
  auto rep = validate(patch);
  if (!rep.ok()) return Classification::inconclusive("invalid patch: " + rep.violations.front().message);
  Census census;
  for (int v = 0; v < static_cast<int>(patch.vertex_count()); ++v)
    if (patch.is_interior(v)) census[VertexConfig(patch.star(v).word())].push_back(v);
  if (census.empty()) return Classification::inconclusive("no interior vertex");
  auto it = census.find(hex_config());
  if (it == census.end()) return detail::classify_lines(patch, census);
  return detail::classify_triangle(patch, census, it->second);
}

}  // namespace shield
