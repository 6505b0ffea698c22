#pragma once

// Exhaustive backtracking completion of partial patches.
//
// Every step picks one open arc at one vertex; the tile across the arc's
// first free edge must have a corner starting there, so trying a triangle, a
// shield alpha corner and a shield beta corner covers every completion.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shield/atlas.hpp"
#include "shield/ball.hpp"
#include "shield/patch.hpp"

namespace shield {

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000;
  double time_limit_s = 3600;
  bool prune = true;
  // Disk searches complete out to radius n + margin so that dead-end
  // neighbourhoods just outside the ball are discarded.
  double margin = 1.0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  bool budget_exceeded = false;
};

/// Convex polygon with unit edges that a search must fill exactly.
struct Container {
  ExactPoint start;
  std::vector<Direction> edges;  // counterclockwise

  std::vector<ExactPoint> corners() const {
    std::vector<ExactPoint> out{start};
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) out.push_back(unit_step(out.back(), edges[i]));
    return out;
  }
};

namespace detail {

struct Arc {
  Direction start;
  SymbolicAngle span;
  std::optional<AngleLabel> label;  // empty for container walls
};

inline SymbolicAngle normalize_turn(SymbolicAngle x, const Geometry& g) {
  while (g.sign(x) < 0) x += kFullTurn;
  while (g.sign(x - kFullTurn) >= 0) x = x - kFullTurn;
  return x;
}

// All rotations and reflections of every atlas word.
inline std::vector<Word> linear_words(const AlphaSpec& alpha) {
  std::set<Word> out;
  for (const auto& cfg : atlas(alpha)) {
    Word w = cfg.word();
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        Word r(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        out.insert(r);
      }
      std::reverse(w.begin(), w.end());
    }
  }
  return {out.begin(), out.end()};
}

class Engine {
 public:
  struct Target {
    ExactPoint point;
    Direction dir;
  };
  // Returns the next arc to fill, or nullopt when the goal is met.
  using Select = std::function<std::optional<Target>(Engine&)>;
  // Called on every goal state; return false to stop the search.
  using OnGoal = std::function<bool(Engine&)>;

  Engine(Patch& patch, const SearchOptions& opts)
      : patch_(patch), g_(patch.geometry()), opts_(opts), words_(linear_words(patch.alpha())) {
    start_ = std::chrono::steady_clock::now();
  }

  Patch& patch() { return patch_; }
  const Geometry& geometry() const { return g_; }
  SearchStats& stats() { return stats_; }

  void set_container(const Container& c) {
    container_ = c;
    auto pts = c.corners();
    const std::size_t n = c.edges.size();
    for (std::size_t k = 0; k < n; ++k) {
      Direction in = c.edges[(k + n - 1) % n].reversed();
      SymbolicAngle interior = normalize_turn(in - c.edges[k], g_);
      walls_.push_back({pts[k], g_.eval(pts[k]), {in, kFullTurn - interior, std::nullopt}});
    }
    for (const auto& w : walls_) wall_xy_.push_back(w.xy);
  }
  bool has_container() const { return container_.has_value(); }
  std::size_t wall_count() const { return walls_.size(); }
  const ExactPoint& wall_point(std::size_t k) const { return walls_[k].point; }

  /// Corners at a point, from tiles and container walls, counterclockwise.
  std::vector<Arc> arcs_at(Complex z) const {
    std::vector<Arc> out;
    if (auto v = patch_.find_vertex(z))
      for (const auto& c : patch_.vertex(*v).corners) out.push_back({c.start, to_angle(c.label), c.label});
    for (const auto& w : walls_)
      if (std::abs(w.xy - z) < kTol) out.push_back(w.arc);
    if (out.empty()) return out;
    const double base = g_.direction_angle(out.front().start);
    auto rel = [&](const Arc& a) {
      double r = g_.direction_angle(a.start) - base;
      if (r < -1e-12) r += 2 * kPi;
      return r;
    };
    std::stable_sort(out.begin(), out.end(), [&](const Arc& a, const Arc& b) { return rel(a) < rel(b); });
    return out;
  }

  /// First counterclockwise open arc end at a point, if the point is not closed.
  std::optional<Direction> open_arc(const std::vector<Arc>& arcs) const {
    for (const auto& a : arcs) {
      Direction end = a.start + a.span;
      bool matched = std::any_of(arcs.begin(), arcs.end(),
                                 [&](const Arc& b) { return g_.same_direction(b.start, end); });
      if (!matched) return end;
    }
    return std::nullopt;
  }

  SymbolicAngle gap(const std::vector<Arc>& arcs) const {
    SymbolicAngle s{};
    for (const auto& a : arcs) s += a.span;
    return kFullTurn - s;
  }

  bool is_wall(Complex z) const {
    return std::any_of(wall_xy_.begin(), wall_xy_.end(), [&](Complex w) { return std::abs(w - z) < kTol; });
  }

  /// Whether the corners at a point can still close up into an atlas word.
  bool consistent(Complex z) const {
    auto arcs = arcs_at(z);
    SymbolicAngle rest = gap(arcs);
    if (g_.sign(rest) < 0) return false;
    if (g_.is_zero(rest)) return true;
    if (!gap_fillable(rest, g_)) return false;
    if (is_wall(z)) return true;
    // Pattern of labels and gaps in counterclockwise order.
    struct Item {
      bool is_gap;
      AngleLabel label;
      SymbolicAngle gap;
    };
    std::vector<Item> pattern;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      pattern.push_back({false, *arcs[i].label, {}});
      Direction end = arcs[i].start + arcs[i].span;
      const Direction next = arcs[(i + 1) % arcs.size()].start;
      if (!g_.same_direction(end, next)) pattern.push_back({true, AngleLabel::T, normalize_turn(next - end, g_)});
    }
    for (const auto& w : words_) {
      std::size_t pos = 0;
      bool ok = true;
      for (const auto& it : pattern) {
        if (!it.is_gap) {
          if (pos >= w.size() || w[pos] != it.label) {
            ok = false;
            break;
          }
          ++pos;
          continue;
        }
        SymbolicAngle acc{};
        while (true) {
          if (pos >= w.size()) {
            ok = false;
            break;
          }
          acc += to_angle(w[pos++]);
          int s = g_.sign(acc - it.gap);
          if (s == 0) break;
          if (s > 0) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok && pos == w.size()) return true;
    }
    return false;
  }

  /// Tile lies in the container: every vertex is a wall corner or strictly inside.
  bool inside_container(const Placement& pl) const {
    if (!container_) return true;
    const auto& poly = wall_xy_;
    for (auto z : pl.numeric_vertices(g_)) {
      if (is_wall(z)) continue;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        Complex a = poly[i], b = poly[(i + 1) % poly.size()];
        if (cross(b - a, z - a) < 1e-7) return false;
      }
    }
    return true;
  }

  void run(const Select& select, const OnGoal& on_goal) {
    select_ = &select;
    on_goal_ = &on_goal;
    stop_ = false;
    dfs();
  }

  bool stopped() const { return stop_; }

 private:
  struct Wall {
    ExactPoint point;
    Complex xy;
    Arc arc;
  };

  bool out_of_budget() {
    if (stats_.nodes > opts_.node_budget) return true;
    if ((stats_.nodes & 1023) == 0) {
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (s > opts_.time_limit_s) return true;
    }
    return false;
  }

  void dfs() {
    if (stop_) return;
    ++stats_.nodes;
    if (out_of_budget()) {
      stats_.budget_exceeded = true;
      stop_ = true;
      return;
    }
    auto target = (*select_)(*this);
    if (!target) {
      ++stats_.leaves;
      if (!(*on_goal_)(*this)) stop_ = true;
      return;
    }
    for (AngleLabel l : {AngleLabel::T, AngleLabel::A, AngleLabel::B}) {
      Placement pl = Placement::with_corner(l, target->point, target->dir);
      if (!inside_container(pl)) continue;
      if (patch_.try_add(pl) != AddResult::Ok) continue;
      bool ok = true;
      if (opts_.prune) {
        const auto& rec = patch_.tile(static_cast<int>(patch_.tile_count()) - 1);
        for (auto z : rec.pts)
          if (!consistent(z)) {
            ok = false;
            break;
          }
      }
      if (ok) dfs();
      patch_.pop_tile();
      if (stop_) return;
    }
  }

  Patch& patch_;
  const Geometry& g_;
  SearchOptions opts_;
  std::vector<Word> words_;
  std::optional<Container> container_;
  std::vector<Wall> walls_;
  std::vector<Complex> wall_xy_;
  SearchStats stats_;
  std::chrono::steady_clock::time_point start_;
  const Select* select_ = nullptr;
  const OnGoal* on_goal_ = nullptr;
  bool stop_ = false;
};

inline bool closer(const Patch& p, int a, int b, Complex c) {
  double da = std::abs(p.vertex(a).xy - c), db = std::abs(p.vertex(b).xy - c);
  if (std::abs(da - db) > 1e-9) return da < db;
  return xy_less(p.vertex(a).xy, p.vertex(b).xy);
}

inline std::optional<Engine::Target> target_at(Engine& e, int v) {
  auto arcs = e.arcs_at(e.patch().vertex(v).xy);
  auto d = e.open_arc(arcs);
  if (!d) return std::nullopt;
  return Engine::Target{*e.patch().vertex(v).exact, *d};
}

// Vertex nearest the center among endpoints of boundary edges closer than r.
inline std::optional<Engine::Target> select_disk(Engine& e, Complex center, double r) {
  const Patch& p = e.patch();
  int best = -1;
  for (int t : p.tiles_near(center, r + 2.4)) {
    const auto& rec = p.tile(t);
    const std::size_t k = rec.verts.size();
    for (std::size_t i = 0; i < k; ++i) {
      int a = rec.verts[i], b = rec.verts[(i + 1) % k];
      if (p.edge_tiles(a, b).size() != 1) continue;
      if (point_segment_distance(center, p.vertex(a).xy, p.vertex(b).xy) >= r - 1e-7) continue;
      for (int v : {a, b})
        if (best < 0 || closer(p, v, best, center)) best = v;
    }
  }
  if (best < 0) return std::nullopt;
  return target_at(e, best);
}

// Ring index: 0 at the center, +1 per tile hop.
inline std::vector<int> ring_indices(const Patch& p, int center) {
  std::vector<int> ring(p.vertex_count(), -1);
  std::vector<int> queue{center};
  ring[static_cast<std::size_t>(center)] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (const auto& c : p.vertex(v).corners)
      for (int w : p.tile(c.tile).verts)
        if (ring[static_cast<std::size_t>(w)] < 0) {
          ring[static_cast<std::size_t>(w)] = ring[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
  }
  return ring;
}

inline std::optional<Engine::Target> select_rings(Engine& e, int center, int depth) {
  const Patch& p = e.patch();
  auto ring = ring_indices(p, center);
  const Complex c = p.vertex(center).xy;
  int best = -1;
  for (int v = 0; v < static_cast<int>(p.vertex_count()); ++v) {
    int r = ring[static_cast<std::size_t>(v)];
    if (r < 0 || r > depth || p.is_interior(v)) continue;
    if (best < 0) {
      best = v;
      continue;
    }
    int rb = ring[static_cast<std::size_t>(best)];
    if (r < rb || (r == rb && closer(p, v, best, c))) best = v;
  }
  if (best < 0) return std::nullopt;
  return target_at(e, best);
}

inline std::optional<Engine::Target> select_container(Engine& e) {
  const Patch& p = e.patch();
  for (std::size_t k = 0; k < e.wall_count(); ++k) {
    Complex z = e.geometry().eval(e.wall_point(k));
    auto d = e.open_arc(e.arcs_at(z));
    if (d) return Engine::Target{e.wall_point(k), *d};
  }
  for (int v = 0; v < static_cast<int>(p.vertex_count()); ++v) {
    if (p.is_interior(v) || e.is_wall(p.vertex(v).xy)) continue;
    return target_at(e, v);
  }
  return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ball completion and pattern counts

struct BallSet {
  std::map<std::string, PatternBall> balls;  // canonical key -> representative
  SearchStats stats;
  bool complete() const { return !stats.budget_exceeded; }
  std::set<std::string> keys() const {
    std::set<std::string> out;
    for (const auto& [k, b] : balls) out.insert(k);
    return out;
  }
};

/// All canonical balls of radius n about `center` over every completion of `seed`.
/// With an empty seed the center is the origin and the first tile takes heading 0.
inline BallSet complete_ball(const Patch& seed, const ExactPoint& center, double n,
                             const SearchOptions& opts = {}) {
  BallSet out;
  Patch patch = seed;
  const Complex cz = patch.geometry().eval(center);
  const double reach = n + opts.margin;

  auto on_goal = [&](detail::Engine& e) {
    const Patch& p = e.patch();
    auto v = p.find_vertex(center);
    auto ball = extract_ball(p, *v, n);
    out.balls.try_emplace(ball.key, std::move(ball));
    return true;
  };
  detail::Engine::Select select = [&](detail::Engine& e) { return detail::select_disk(e, cz, reach); };

  if (patch.empty()) {
    for (AngleLabel l : {AngleLabel::T, AngleLabel::A, AngleLabel::B}) {
      Patch start(seed.alpha());
      start.add_tile(Placement::with_corner(l, center, Direction{}));
      detail::Engine e(start, opts);
      e.stats() = out.stats;
      e.run(select, on_goal);
      out.stats = e.stats();
      if (e.stopped()) break;
    }
    return out;
  }
  if (!patch.find_vertex(center)) throw Error(ErrorCode::OutOfRange, "center is not a vertex of the seed");
  detail::Engine e(patch, opts);
  e.run(select, on_goal);
  out.stats = e.stats();
  return out;
}

struct PatternCount {
  double n = 0;
  AlphaSpec alpha = AlphaSpec::generic();
  std::size_t count = 0;
  std::set<std::string> patterns;
  bool complete = true;  // false: count is a lower bound
};

/// P_n: distinct vertex-centred balls of radius n up to isometry.
inline PatternCount count_patterns(double n, const AlphaSpec& alpha, const SearchOptions& opts = {}) {
  auto set = complete_ball(Patch(alpha), ExactPoint{}, n, opts);
  PatternCount pc;
  pc.n = n;
  pc.alpha = alpha;
  pc.patterns = set.keys();
  pc.count = pc.patterns.size();
  pc.complete = set.complete();
  return pc;
}

// ---------------------------------------------------------------------------
// Local extendability of a vertex configuration

struct Extendability {
  enum class Kind { ExtendableWitness, ProvenImpossible, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Patch> witness;
  SearchStats stats;
};

inline const char* to_string(Extendability::Kind k) {
  switch (k) {
    case Extendability::Kind::ExtendableWitness: return "ExtendableWitness";
    case Extendability::Kind::ProvenImpossible: return "ProvenImpossible";
    case Extendability::Kind::Unknown: return "Unknown";
  }
  return "?";
}

/// Searches for a patch in which the configuration sits at a vertex whose
/// ring-`depth` neighbourhood is complete (ring 0 is the vertex itself).
inline Extendability is_config_extendable(const VertexConfig& config, const AlphaSpec& alpha, int depth = 3,
                                          const SearchOptions& opts = {}) {
  Extendability out;
  Patch patch(alpha);
  Direction d{};
  for (auto l : config.word()) {
    if (patch.try_add(Placement::with_corner(l, ExactPoint{}, d)) != AddResult::Ok) {
      out.kind = Extendability::Kind::ProvenImpossible;
      return out;
    }
    d = d + to_angle(l);
  }
  const int center = *patch.find_vertex(ExactPoint{});
  if (!patch.is_interior(center)) {
    out.kind = Extendability::Kind::ProvenImpossible;
    return out;
  }
  detail::Engine e(patch, opts);
  e.run([&](detail::Engine& en) { return detail::select_rings(en, center, depth); },
        [&](detail::Engine& en) {
          out.witness = en.patch();
          return false;
        });
  out.stats = e.stats();
  if (out.witness) out.kind = Extendability::Kind::ExtendableWitness;
  else if (out.stats.budget_exceeded) out.kind = Extendability::Kind::Unknown;
  else out.kind = Extendability::Kind::ProvenImpossible;
  return out;
}

// ---------------------------------------------------------------------------
// Exact fillings of a container polygon

struct RegionFillings {
  std::vector<std::vector<Placement>> fillings;
  SearchStats stats;
};

/// Every tiling of the container's interior, in search order.
inline RegionFillings complete_region(const AlphaSpec& alpha, const Container& box, const SearchOptions& opts = {}) {
  RegionFillings out;
  Patch patch(alpha);
  detail::Engine e(patch, opts);
  e.set_container(box);
  e.run([](detail::Engine& en) { return detail::select_container(en); },
        [&](detail::Engine& en) {
          out.fillings.push_back(en.patch().placements());
          return true;
        });
  out.stats = e.stats();
  return out;
}

}  // namespace shield
