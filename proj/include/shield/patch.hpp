#pragma once

// A finite edge-to-edge arrangement of triangles and shields with vertex,
// edge and tile indices. Tiles are added atomically and removed in LIFO order,
// which is what the backtracking search needs.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "shield/angle.hpp"
#include "shield/atlas.hpp"
#include "shield/placement.hpp"

namespace shield {

struct Corner {
  int tile = -1;
  int index = 0;  // vertex index within the tile
  AngleLabel label = AngleLabel::T;
  Direction start;  // corner spans [start, start + angle(label)]
};

struct VertexStar {
  int vertex = -1;
  Complex center;
  std::vector<Corner> corners;  // counterclockwise
  SymbolicAngle gap;            // 2pi minus the corner sum
  bool interior = false;

  Word word() const {
    Word w;
    for (const auto& c : corners) w.push_back(c.label);
    return w;
  }
};

enum class AddResult { Ok, Overlap, EdgeMismatch, AtlasViolation };

inline const char* to_string(AddResult r) {
  switch (r) {
    case AddResult::Ok: return "Ok";
    case AddResult::Overlap: return "OverlapError";
    case AddResult::EdgeMismatch: return "EdgeMismatchError";
    case AddResult::AtlasViolation: return "AtlasViolation";
  }
  return "?";
}

namespace detail {

inline double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

/// Interiors of two convex counterclockwise polygons intersect (separating axis test).
inline bool convex_overlap(const std::vector<Complex>& p, const std::vector<Complex>& q,
                           double tol = kTol) {
  auto separated = [&](const std::vector<Complex>& poly) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      Complex e = poly[(i + 1) % n] - poly[i];
      Complex nrm(-e.imag(), e.real());
      double pmin = 1e300, pmax = -1e300, qmin = 1e300, qmax = -1e300;
      for (auto z : p) {
        double s = dot(z, nrm);
        pmin = std::min(pmin, s);
        pmax = std::max(pmax, s);
      }
      for (auto z : q) {
        double s = dot(z, nrm);
        qmin = std::min(qmin, s);
        qmax = std::max(qmax, s);
      }
      if (pmax <= qmin + tol || qmax <= pmin + tol) return true;
    }
    return false;
  };
  return !separated(p) && !separated(q);
}

/// Point lies on the open segment (a, b), away from both endpoints.
inline bool on_open_segment(Complex p, Complex a, Complex b, double tol = 1e-7) {
  Complex e = b - a;
  double len2 = std::norm(e);
  double t = dot(p - a, e) / len2;
  if (t <= tol || t >= 1 - tol) return false;
  return std::abs(cross(e, p - a)) / std::sqrt(len2) < tol;
}

inline double point_segment_distance(Complex p, Complex a, Complex b) {
  Complex e = b - a;
  double t = std::clamp(dot(p - a, e) / std::norm(e), 0.0, 1.0);
  return std::abs(p - (a + t * e));
}

/// Distance from a point to a closed convex counterclockwise polygon (0 inside).
inline double point_polygon_distance(Complex p, const std::vector<Complex>& poly) {
  bool inside = true;
  double best = 1e300;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Complex a = poly[i], b = poly[(i + 1) % poly.size()];
    if (cross(b - a, p - a) < 0) inside = false;
    best = std::min(best, point_segment_distance(p, a, b));
  }
  return inside ? 0.0 : best;
}

/// Lexicographic order on points with tolerance.
inline bool xy_less(Complex a, Complex b) {
  if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
  return a.imag() < b.imag() - 1e-9;
}

inline std::int64_t cell_key(std::int64_t ix, std::int64_t iy) {
  return (ix << 32) ^ (iy & 0xffffffffLL);
}

}  // namespace detail

class Patch {
 public:
  struct VertexRec {
    std::optional<ExactPoint> exact;
    Complex xy;
    std::vector<Corner> corners;
    SymbolicAngle sum;
  };
  struct TileRec {
    Placement placement;
    std::vector<int> verts;
    std::vector<Complex> pts;
    Complex centroid;
  };

  explicit Patch(AlphaSpec alpha) : geom_(alpha) {}

  const Geometry& geometry() const { return geom_; }
  const AlphaSpec& alpha() const { return geom_.alpha(); }

  std::size_t tile_count() const { return tiles_.size(); }
  std::size_t vertex_count() const { return verts_.size(); }
  bool empty() const { return tiles_.empty(); }
  const TileRec& tile(int i) const { return tiles_[static_cast<std::size_t>(i)]; }
  const std::vector<TileRec>& tiles() const { return tiles_; }
  const VertexRec& vertex(int i) const { return verts_[static_cast<std::size_t>(i)]; }

  std::vector<Placement> placements() const {
    std::vector<Placement> out;
    out.reserve(tiles_.size());
    for (const auto& t : tiles_) out.push_back(t.placement);
    return out;
  }

  /// Whether every placement has an exact anchor.
  bool is_exact() const {
    return std::all_of(tiles_.begin(), tiles_.end(),
                       [](const TileRec& t) { return t.placement.is_exact(); });
  }

  /// Adds a tile if it keeps the patch valid; otherwise leaves it untouched.
  AddResult try_add(const Placement& pl) { return insert(pl, true); }

  /// Throwing form of try_add.
  void add_tile(const Placement& pl) {
    AddResult r = try_add(pl);
    switch (r) {
      case AddResult::Ok: return;
      case AddResult::Overlap: throw Error(ErrorCode::Overlap, "tile interiors intersect");
      case AddResult::EdgeMismatch:
        throw Error(ErrorCode::EdgeMismatch, "a vertex lies inside another tile's edge");
      case AddResult::AtlasViolation:
        throw Error(ErrorCode::AtlasViolation, "a vertex star leaves the atlas");
    }
  }

  /// Inserts without any validity check (used by readers; see validate()).
  void add_unchecked(const Placement& pl) { insert(pl, false); }

  /// Removes the most recently added tile.
  void pop_tile() {
    if (tiles_.empty()) return;
    const int ti = static_cast<int>(tiles_.size()) - 1;
    TileRec& t = tiles_.back();
    const int n = static_cast<int>(t.verts.size());
    for (int i = 0; i < n; ++i) {
      int a = t.verts[static_cast<std::size_t>(i)], b = t.verts[static_cast<std::size_t>((i + 1) % n)];
      auto it = edges_.find(edge_key(a, b));
      if (it != edges_.end()) {
        auto& e = it->second;
        if (e[1] == ti) e[1] = -1;
        else if (e[0] == ti) {
          e[0] = e[1];
          e[1] = -1;
        }
        if (e[0] < 0) edges_.erase(it);
      }
    }
    for (int i = 0; i < n; ++i) {
      auto& v = verts_[static_cast<std::size_t>(t.verts[static_cast<std::size_t>(i)])];
      // corners are appended in insertion order, so this tile's corner is last
      for (auto c = v.corners.end(); c != v.corners.begin();) {
        --c;
        if (c->tile == ti) {
          v.sum = v.sum - to_angle(c->label);
          v.corners.erase(c);
          break;
        }
      }
    }
    remove_from_grid(tile_grid_, tile_cell(t.centroid), ti);
    const std::size_t created = created_.back();
    created_.pop_back();
    for (std::size_t k = 0; k < created; ++k) {
      const int vi = static_cast<int>(verts_.size()) - 1;
      remove_from_grid(vert_grid_, vert_cell(verts_.back().xy), vi);
      if (verts_.back().exact) exact_index_.erase(*verts_.back().exact);
      verts_.pop_back();
    }
    tiles_.pop_back();
  }

  /// Vertex at the given point, if any.
  std::optional<int> find_vertex(const ExactPoint& p) const {
    Complex z = geom_.eval(p);
    int hit = lookup(p, z).first;
    return hit >= 0 ? std::optional<int>(hit) : std::nullopt;
  }
  std::optional<int> find_vertex(Complex z) const {
    for (int vi : near_vertices(z))
      if (std::abs(verts_[static_cast<std::size_t>(vi)].xy - z) < kTol) return vi;
    return std::nullopt;
  }

  /// Other vertices within tolerance of vertex v (only possible after unchecked inserts).
  std::vector<int> coincident_vertices(int v) const {
    std::vector<int> out;
    for (int w : near_vertices(vertex(v).xy))
      if (w != v && std::abs(vertex(w).xy - vertex(v).xy) < kTol) out.push_back(w);
    return out;
  }

  SymbolicAngle gap(int v) const { return kFullTurn - vertex(v).sum; }
  bool is_interior(int v) const { return geom_.is_zero(gap(v)); }

  VertexStar star(int v) const {
    VertexStar s;
    const auto& rec = vertex(v);
    s.vertex = v;
    s.center = rec.xy;
    s.corners = rec.corners;
    s.gap = kFullTurn - rec.sum;
    s.interior = geom_.is_zero(s.gap);
    if (!s.corners.empty()) {
      double base = geom_.direction_angle(s.corners.front().start);
      auto rel = [&](const Corner& c) {
        double r = geom_.direction_angle(c.start) - base;
        if (r < -1e-12) r += 2 * kPi;
        return r;
      };
      std::stable_sort(s.corners.begin(), s.corners.end(),
                       [&](const Corner& x, const Corner& y) { return rel(x) < rel(y); });
    }
    return s;
  }

  /// Tiles incident to an edge between two vertices (0, 1 or 2 entries).
  std::vector<int> edge_tiles(int a, int b) const {
    auto it = edges_.find(edge_key(a, b));
    std::vector<int> out;
    if (it == edges_.end()) return out;
    for (int t : it->second)
      if (t >= 0) out.push_back(t);
    return out;
  }

  /// All edges as (a, b, tile count).
  struct EdgeInfo {
    int a, b, count;
  };
  std::vector<EdgeInfo> edges() const {
    std::vector<EdgeInfo> out;
    out.reserve(edges_.size());
    for (const auto& [k, e] : edges_) {
      int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffff);
      out.push_back({a, b, (e[0] >= 0) + (e[1] >= 0)});
    }
    std::sort(out.begin(), out.end(),
              [](const EdgeInfo& x, const EdgeInfo& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
    return out;
  }

  /// Tiles whose centroid lies within r of z.
  std::vector<int> tiles_near(Complex z, double r) const {
    std::vector<int> out;
    const double c = kTileCell;
    auto ix0 = static_cast<std::int64_t>(std::floor((z.real() - r) / c));
    auto ix1 = static_cast<std::int64_t>(std::floor((z.real() + r) / c));
    auto iy0 = static_cast<std::int64_t>(std::floor((z.imag() - r) / c));
    auto iy1 = static_cast<std::int64_t>(std::floor((z.imag() + r) / c));
    for (auto ix = ix0; ix <= ix1; ++ix)
      for (auto iy = iy0; iy <= iy1; ++iy) {
        auto it = tile_grid_.find(detail::cell_key(ix, iy));
        if (it == tile_grid_.end()) continue;
        for (int ti : it->second)
          if (std::abs(tiles_[static_cast<std::size_t>(ti)].centroid - z) <= r) out.push_back(ti);
      }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr double kTileCell = 2.5;
  static constexpr double kVertCell = 0.5;
  // Tile circumradius is below 2/sqrt(3); two tiles that touch have centroids
  // closer than this.
  static constexpr double kNeighborRadius = 2.4;

  struct ExactHash {
    std::size_t operator()(const ExactPoint& p) const { return p.hash(); }
  };
  using Grid = std::unordered_map<std::int64_t, std::vector<int>>;

  static std::uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }
  static std::int64_t tile_cell(Complex z) {
    return detail::cell_key(static_cast<std::int64_t>(std::floor(z.real() / kTileCell)),
                            static_cast<std::int64_t>(std::floor(z.imag() / kTileCell)));
  }
  static std::int64_t vert_cell(Complex z) {
    return detail::cell_key(static_cast<std::int64_t>(std::floor(z.real() / kVertCell)),
                            static_cast<std::int64_t>(std::floor(z.imag() / kVertCell)));
  }
  static void remove_from_grid(Grid& g, std::int64_t key, int id) {
    auto it = g.find(key);
    if (it == g.end()) return;
    auto& v = it->second;
    v.erase(std::remove(v.begin(), v.end(), id), v.end());
    if (v.empty()) g.erase(it);
  }

  std::vector<int> near_vertices(Complex z) const {
    std::vector<int> out;
    auto ix = static_cast<std::int64_t>(std::floor(z.real() / kVertCell));
    auto iy = static_cast<std::int64_t>(std::floor(z.imag() / kVertCell));
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = vert_grid_.find(detail::cell_key(ix + dx, iy + dy));
        if (it != vert_grid_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
      }
    return out;
  }

  // (vertex id or -1, coincidence conflict)
  std::pair<int, bool> lookup(const std::optional<ExactPoint>& exact, Complex z) const {
    if (geom_.exact_points() && exact) {
      auto it = exact_index_.find(*exact);
      if (it != exact_index_.end()) return {it->second, false};
      for (int vi : near_vertices(z))
        if (std::abs(verts_[static_cast<std::size_t>(vi)].xy - z) < kTol) return {-1, true};
      return {-1, false};
    }
    for (int vi : near_vertices(z))
      if (std::abs(verts_[static_cast<std::size_t>(vi)].xy - z) < kTol) return {vi, false};
    return {-1, false};
  }

  AddResult insert(const Placement& pl, bool checked) {
    const int n = pl.size();
    std::vector<ExactPoint> ex;
    if (pl.is_exact()) ex = pl.vertices();
    std::vector<Complex> pts = pl.numeric_vertices(geom_);
    Complex centroid{};
    for (auto z : pts) centroid += z;
    centroid /= static_cast<double>(n);

    std::vector<int> ids(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
      std::optional<ExactPoint> e;
      if (!ex.empty()) e = ex[static_cast<std::size_t>(i)];
      auto [id, conflict] = lookup(e, pts[static_cast<std::size_t>(i)]);
      if (conflict && checked) return AddResult::Overlap;
      ids[static_cast<std::size_t>(i)] = id;
    }

    const int ti = static_cast<int>(tiles_.size());
    if (checked) {
      auto near = tiles_near(centroid, kNeighborRadius);
      for (int other : near) {
        const auto& o = tiles_[static_cast<std::size_t>(other)];
        if (detail::convex_overlap(pts, o.pts)) return AddResult::Overlap;
      }
      for (int other : near) {
        const auto& o = tiles_[static_cast<std::size_t>(other)];
        for (auto p : pts)
          for (std::size_t k = 0; k < o.pts.size(); ++k)
            if (detail::on_open_segment(p, o.pts[k], o.pts[(k + 1) % o.pts.size()]))
              return AddResult::EdgeMismatch;
        for (auto p : o.pts)
          for (int k = 0; k < n; ++k)
            if (detail::on_open_segment(p, pts[static_cast<std::size_t>(k)],
                                        pts[static_cast<std::size_t>((k + 1) % n)]))
              return AddResult::EdgeMismatch;
      }
      for (int i = 0; i < n; ++i) {
        int a = ids[static_cast<std::size_t>(i)], b = ids[static_cast<std::size_t>((i + 1) % n)];
        if (a < 0 || b < 0) continue;
        auto it = edges_.find(edge_key(a, b));
        if (it != edges_.end() && it->second[1] >= 0) return AddResult::Overlap;
      }
      for (int i = 0; i < n; ++i) {
        int vi = ids[static_cast<std::size_t>(i)];
        if (vi < 0) continue;
        SymbolicAngle s = verts_[static_cast<std::size_t>(vi)].sum + to_angle(pl.label(i));
        if (geom_.sign(kFullTurn - s) < 0) return AddResult::AtlasViolation;
      }
    }

    // commit
    std::size_t created = 0;
    for (int i = 0; i < n; ++i) {
      auto& id = ids[static_cast<std::size_t>(i)];
      if (id >= 0) continue;
      // unchecked inserts may repeat a point within this tile; reuse it
      if (!checked) {
        if (auto again = lookup(ex.empty() ? std::nullopt
                                           : std::optional<ExactPoint>(ex[static_cast<std::size_t>(i)]),
                                pts[static_cast<std::size_t>(i)]);
            again.first >= 0) {
          id = again.first;
          continue;
        }
      }
      VertexRec rec;
      if (!ex.empty()) rec.exact = ex[static_cast<std::size_t>(i)];
      rec.xy = pts[static_cast<std::size_t>(i)];
      id = static_cast<int>(verts_.size());
      vert_grid_[vert_cell(rec.xy)].push_back(id);
      if (rec.exact && geom_.exact_points()) exact_index_.emplace(*rec.exact, id);
      verts_.push_back(std::move(rec));
      ++created;
    }
    for (int i = 0; i < n; ++i) {
      auto& v = verts_[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])];
      v.corners.push_back({ti, i, pl.label(i), pl.edge_direction(i)});
      v.sum += to_angle(pl.label(i));
    }
    for (int i = 0; i < n; ++i) {
      int a = ids[static_cast<std::size_t>(i)], b = ids[static_cast<std::size_t>((i + 1) % n)];
      auto [it, fresh] = edges_.try_emplace(edge_key(a, b), std::array<int, 2>{ti, -1});
      if (!fresh && it->second[1] < 0) it->second[1] = ti;
    }
    tiles_.push_back({pl, std::move(ids), std::move(pts), centroid});
    tile_grid_[tile_cell(centroid)].push_back(ti);
    created_.push_back(created);
    return AddResult::Ok;
  }

  Geometry geom_;
  std::vector<TileRec> tiles_;
  std::vector<VertexRec> verts_;
  std::vector<std::size_t> created_;
  std::unordered_map<std::uint64_t, std::array<int, 2>> edges_;
  std::unordered_map<ExactPoint, int, ExactHash> exact_index_;
  Grid vert_grid_;
  Grid tile_grid_;
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  ErrorCode kind;
  std::string message;
  std::vector<int> tiles;
  std::vector<int> vertices;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ErrorCode c) const {
    return std::any_of(violations.begin(), violations.end(),
                       [c](const Violation& v) { return v.kind == c; });
  }
  std::string summary() const {
    std::string s;
    for (const auto& v : violations) s += std::string(to_string(v.kind)) + ": " + v.message + "\n";
    return s;
  }
};

/// Checks every patch invariant from scratch.
inline ValidationReport validate(const Patch& patch) {
  ValidationReport rep;
  const auto& g = patch.geometry();
  const int nt = static_cast<int>(patch.tile_count());
  for (int i = 0; i < nt; ++i) {
    const auto& ti = patch.tile(i);
    for (int j : patch.tiles_near(ti.centroid, 2.4)) {
      if (j <= i) continue;
      const auto& tj = patch.tile(j);
      if (detail::convex_overlap(ti.pts, tj.pts)) {
        rep.violations.push_back({ErrorCode::Overlap,
                                  "tiles " + std::to_string(i) + " and " + std::to_string(j) + " overlap",
                                  {i, j}, {}});
      }
      auto tjunction = [&](const Patch::TileRec& a, const Patch::TileRec& b) {
        for (auto p : a.pts)
          for (std::size_t k = 0; k < b.pts.size(); ++k)
            if (detail::on_open_segment(p, b.pts[k], b.pts[(k + 1) % b.pts.size()])) return true;
        return false;
      };
      if (tjunction(ti, tj) || tjunction(tj, ti)) {
        rep.violations.push_back({ErrorCode::EdgeMismatch,
                                  "tiles " + std::to_string(i) + " and " + std::to_string(j) +
                                      " meet along a partial edge",
                                  {i, j}, {}});
      }
    }
  }
  for (const auto& e : patch.edges()) {
    if (e.count > 2) {
      rep.violations.push_back({ErrorCode::Overlap, "edge shared by more than two tiles", {}, {e.a, e.b}});
    }
  }
  const auto atlas_configs = atlas(patch.alpha());
  for (int v = 0; v < static_cast<int>(patch.vertex_count()); ++v) {
    const auto& rec = patch.vertex(v);
    for (int other : patch.coincident_vertices(v)) {
      if (other > v)
        rep.violations.push_back({ErrorCode::Overlap, "distinct vertices coincide", {}, {v, other}});
    }
    SymbolicAngle gap = kFullTurn - rec.sum;
    auto st = patch.star(v);
    if (g.sign(gap) < 0) {
      rep.violations.push_back({ErrorCode::AtlasViolation,
                                "corners " + word_string(st.word()) + " exceed a full turn", {}, {v}});
    } else if (g.is_zero(gap)) {
      VertexConfig cfg(st.word());
      if (std::find(atlas_configs.begin(), atlas_configs.end(), cfg) == atlas_configs.end()) {
        rep.violations.push_back({ErrorCode::AtlasViolation,
                                  "interior star " + cfg.str() + " is not in the atlas for alpha " +
                                      patch.alpha().to_string(),
                                  {}, {v}});
      }
    }
  }
  return rep;
}

}  // namespace shield
