#pragma once

// Vertex atlas: which cyclic arrangements of shield and triangle corners
// close up around a vertex for a given alpha.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "shield/angle.hpp"

namespace shield {

enum class AngleLabel : char { A = 'A', B = 'B', T = 'T' };

inline constexpr SymbolicAngle to_angle(AngleLabel l) {
  switch (l) {
    case AngleLabel::A: return kAlphaAngle;
    case AngleLabel::B: return kBetaAngle;
    case AngleLabel::T: return kTriangleAngle;
  }
  return {};
}

inline char to_char(AngleLabel l) { return static_cast<char>(l); }

struct VertexCounts {
  int p = 0;  // alpha corners
  int q = 0;  // beta corners
  int r = 0;  // triangle corners

  friend constexpr auto operator<=>(const VertexCounts&, const VertexCounts&) = default;

  std::string to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
  }
};

using Word = std::vector<AngleLabel>;

inline std::string word_string(const Word& w) {
  std::string s;
  for (auto l : w) s += to_char(l);
  return s;
}

inline Word parse_word(std::string_view s) {
  Word w;
  for (char c : s) {
    if (c != 'A' && c != 'B' && c != 'T') throw Error(ErrorCode::Parse, "bad label in word");
    w.push_back(static_cast<AngleLabel>(c));
  }
  return w;
}

/// Least rotation-or-reflection of a cyclic word under A < B < T.
inline Word canonical_word(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  Word cur;
  for (int pass = 0; pass < 2; ++pass) {
    Word base = w;
    if (pass == 1) std::reverse(base.begin(), base.end());
    for (std::size_t i = 0; i < base.size(); ++i) {
      cur.assign(base.begin() + static_cast<std::ptrdiff_t>(i), base.end());
      cur.insert(cur.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(i));
      if (cur < best) best = cur;
    }
  }
  return best;
}

class VertexConfig {
 public:
  explicit VertexConfig(const Word& w) : word_(canonical_word(w)) {}

  const Word& word() const { return word_; }
  std::string str() const { return word_string(word_); }

  VertexCounts counts() const {
    VertexCounts c;
    for (auto l : word_) {
      if (l == AngleLabel::A) ++c.p;
      else if (l == AngleLabel::B) ++c.q;
      else ++c.r;
    }
    return c;
  }

  /// "hex", "bowtie", "fault", or the word itself for the other configurations.
  std::string name() const {
    auto s = str();
    if (s == "TTTTTT") return "hex";
    if (s == "ATBT") return "bowtie";
    if (s == "ABTT") return "fault";
    return s;
  }

  bool is_hex() const { return str() == "TTTTTT"; }
  bool is_bowtie() const { return str() == "ATBT"; }
  bool is_fault() const { return str() == "ABTT"; }

  friend bool operator==(const VertexConfig&, const VertexConfig&) = default;
  friend auto operator<=>(const VertexConfig& x, const VertexConfig& y) { return x.word_ <=> y.word_; }

 private:
  Word word_;
};

inline VertexConfig hex_config() { return VertexConfig(parse_word("TTTTTT")); }
inline VertexConfig bowtie_config() { return VertexConfig(parse_word("ATBT")); }
inline VertexConfig fault_config() { return VertexConfig(parse_word("ABTT")); }

inline bool counts_close(const VertexCounts& c, const AlphaSpec& alpha) {
  std::vector<SymbolicAngle> angles;
  angles.insert(angles.end(), c.p, kAlphaAngle);
  angles.insert(angles.end(), c.q, kBetaAngle);
  angles.insert(angles.end(), c.r, kTriangleAngle);
  return full_turn_check(angles, alpha);
}

// Bounds: alpha > pi/3 gives p <= 5, beta > 2pi/3 gives q <= 2, and r <= 6.
inline constexpr int kMaxP = 5;
inline constexpr int kMaxQ = 2;
inline constexpr int kMaxR = 6;

/// All (p,q,r) with p*alpha + q*beta + r*pi/3 = 2pi.
inline std::vector<VertexCounts> solve_vertex_equation(const AlphaSpec& alpha) {
  std::vector<VertexCounts> out;
  for (int p = 0; p <= kMaxP; ++p)
    for (int q = 0; q <= kMaxQ; ++q)
      for (int r = 0; r <= kMaxR; ++r) {
        VertexCounts c{p, q, r};
        if (p + q + r > 0 && counts_close(c, alpha)) out.push_back(c);
      }
  return out;
}

/// All distinct cyclic arrangements of {A^p, B^q, T^r} up to rotation and reflection.
inline std::vector<VertexConfig> configs_from_counts(const VertexCounts& c) {
  Word w;
  w.insert(w.end(), c.p, AngleLabel::A);
  w.insert(w.end(), c.q, AngleLabel::B);
  w.insert(w.end(), c.r, AngleLabel::T);
  std::set<VertexConfig> seen;
  std::sort(w.begin(), w.end());
  do {
    seen.insert(VertexConfig(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return {seen.begin(), seen.end()};
}

/// The full atlas for alpha, canonically sorted.
inline std::vector<VertexConfig> atlas(const AlphaSpec& alpha) {
  std::set<VertexConfig> all;
  for (const auto& c : solve_vertex_equation(alpha))
    for (auto& cfg : configs_from_counts(c)) all.insert(cfg);
  return {all.begin(), all.end()};
}

struct ExceptionalAlpha {
  AlphaSpec alpha;
  std::vector<VertexCounts> witnesses;  // the p != q triples solving at this alpha
};

/// Values of alpha admitting a (p,q,r) with p != q. The right shield pi/2 is
/// left out unless include_right is set.
inline std::vector<ExceptionalAlpha> exceptional_alphas(bool include_right = false) {
  std::map<std::pair<long, long>, std::vector<VertexCounts>> found;
  for (int p = 0; p <= kMaxP; ++p)
    for (int q = 0; q <= kMaxQ; ++q)
      for (int r = 0; r <= kMaxR; ++r) {
        if (p == q) continue;
        // (p - q) alpha = 2pi - (4q + r) pi/3  =>  alpha = pi (6 - 4q - r) / (3 (p - q))
        long num = 6 - 4 * q - r;
        long den = 3 * (p - q);
        if (den < 0) {
          num = -num;
          den = -den;
        }
        if (!(3 * num > den && 3 * num < 2 * den)) continue;
        long g = std::gcd(num, den);
        num /= g;
        den /= g;
        if (!include_right && num == 1 && den == 2) continue;
        found[{num, den}].push_back({p, q, r});
      }
  std::vector<ExceptionalAlpha> out;
  for (auto& [st, w] : found) out.push_back({AlphaSpec::rational(st.first, st.second), w});
  std::sort(out.begin(), out.end(), [](const ExceptionalAlpha& x, const ExceptionalAlpha& y) {
    return x.alpha.s() * y.alpha.t() < y.alpha.s() * x.alpha.t();
  });
  return out;
}

/// Non-negative (p,q,r) exists with p*alpha + q*beta + r*pi/3 equal to gap.
inline bool gap_fillable(SymbolicAngle gap, const Geometry& g) {
  if (g.sign(gap) < 0) return false;
  if (g.is_zero(gap)) return true;
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= 3; ++q)
      for (int r = 0; r <= 6; ++r) {
        if (p + q + r == 0) continue;
        SymbolicAngle s = p * kAlphaAngle + q * kBetaAngle + r * kTriangleAngle;
        if (g.is_zero(s - gap)) return true;
      }
  return false;
}

}  // namespace shield
