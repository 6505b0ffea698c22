#pragma once

// Exact angle and point arithmetic over the two rotation generators pi/3 and
// alpha. Angles are integer pairs (a, b) meaning a*pi/3 + b*alpha; points are
// sparse sums of Eisenstein integers times powers of e^{i alpha}.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "shield/error.hpp"

namespace shield {

using Complex = std::complex<double>;

/// Global numeric tolerance (radians and unit lengths).
inline constexpr double kTol = 1e-9;

/// Alpha used to evaluate generic-alpha geometry numerically.
inline constexpr double kReferenceAlphaDeg = 99.0;

/// Alpha of the triangulated disk packing motivating right-ish shields.
inline constexpr double kPackingAlphaDeg = 99.34;

inline constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// AlphaSpec

class AlphaSpec {
 public:
  enum class Kind { Generic, Rational, Decimal };

  static AlphaSpec generic() { return AlphaSpec{}; }

  /// alpha = s*pi/t, normalized so that gcd(s,t)=1 and t>0.
  static AlphaSpec rational(long s, long t) {
    if (t == 0) throw Error(ErrorCode::OutOfRange, "rational alpha with zero denominator");
    if (t < 0) {
      s = -s;
      t = -t;
    }
    long g = std::gcd(s < 0 ? -s : s, t);
    if (g > 1) {
      s /= g;
      t /= g;
    }
    // pi/3 < s*pi/t < 2*pi/3  <=>  t < 3s < 2t
    if (!(3 * s > t && 3 * s < 2 * t)) {
      throw Error(ErrorCode::OutOfRange,
                  "alpha = " + std::to_string(s) + "pi/" + std::to_string(t) +
                      " is outside the open interval (pi/3, 2pi/3)");
    }
    AlphaSpec a;
    a.kind_ = Kind::Rational;
    a.s_ = s;
    a.t_ = t;
    a.right_ = (s == 1 && t == 2);
    a.exceptional_ = (s == 2 && t == 5) || (s == 5 && t == 12) || (s == 4 && t == 9) ||
                     (s == 5 && t == 9);
    return a;
  }

  static AlphaSpec degrees(double deg) {
    double rad = deg * kPi / 180.0;
    if (!(rad > kPi / 3 && rad < 2 * kPi / 3) || !std::isfinite(rad)) {
      throw Error(ErrorCode::OutOfRange,
                  "alpha = " + std::to_string(deg) + " degrees is outside (60, 120)");
    }
    static constexpr std::array<std::pair<int, int>, 5> kSpecial{
        {{1, 2}, {2, 5}, {5, 12}, {4, 9}, {5, 9}}};
    for (auto [s, t] : kSpecial) {
      if (std::abs(rad - kPi * s / t) <= kTol) {
        throw Error(ErrorCode::AmbiguousDecimal,
                    "alpha = " + std::to_string(deg) + " degrees is within 1e-9 rad of " +
                        std::to_string(s) + "pi/" + std::to_string(t) +
                        "; use the exact rational form");
      }
    }
    AlphaSpec a;
    a.kind_ = Kind::Decimal;
    a.deg_ = deg;
    return a;
  }

  /// Parses "generic", "s/t" (alpha = s*pi/t), "<deg>" or "<deg>deg".
  static AlphaSpec parse(std::string_view text) {
    auto trim = [](std::string_view v) {
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
      return v;
    };
    text = trim(text);
    if (text == "generic") return generic();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      long s = 0, t = 0;
      auto a = text.substr(0, slash), b = text.substr(slash + 1);
      auto r1 = std::from_chars(a.data(), a.data() + a.size(), s);
      auto r2 = std::from_chars(b.data(), b.data() + b.size(), t);
      if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != a.data() + a.size() ||
          r2.ptr != b.data() + b.size()) {
        throw Error(ErrorCode::Parse, "bad rational alpha '" + std::string(text) + "'");
      }
      return rational(s, t);
    }
    if (text.size() > 3 && text.substr(text.size() - 3) == "deg") text.remove_suffix(3);
    std::string buf(text);
    char* end = nullptr;
    double d = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size()) {
      throw Error(ErrorCode::Parse, "bad alpha '" + buf + "'");
    }
    return degrees(d);
  }

  Kind kind() const { return kind_; }
  bool is_generic() const { return kind_ == Kind::Generic; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  bool is_decimal() const { return kind_ == Kind::Decimal; }
  bool has_value() const { return kind_ != Kind::Generic; }
  long s() const { return s_; }
  long t() const { return t_; }
  double deg() const { return deg_; }
  bool right_shield() const { return right_; }
  bool exceptional() const { return exceptional_; }

  double radians() const {
    switch (kind_) {
      case Kind::Rational: return kPi * static_cast<double>(s_) / static_cast<double>(t_);
      case Kind::Decimal: return deg_ * kPi / 180.0;
      case Kind::Generic: break;
    }
    throw Error(ErrorCode::NoNumericValue, "generic alpha has no numeric value");
  }

  /// Numeric alpha, or the 99 degree reference for generic alpha.
  double radians_or_reference() const {
    return has_value() ? radians() : kReferenceAlphaDeg * kPi / 180.0;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Generic: return "generic";
      case Kind::Rational: return std::to_string(s_) + "/" + std::to_string(t_);
      case Kind::Decimal: {
        std::ostringstream os;
        os.precision(12);
        os << deg_ << "deg";
        return os.str();
      }
    }
    return {};
  }

  /// Human form, e.g. "2pi/5".
  std::string pretty() const {
    if (kind_ == Kind::Rational) {
      return (s_ == 1 ? std::string() : std::to_string(s_)) + "pi/" + std::to_string(t_);
    }
    return to_string();
  }

  friend bool operator==(const AlphaSpec& x, const AlphaSpec& y) {
    if (x.kind_ != y.kind_) return false;
    if (x.kind_ == Kind::Rational) return x.s_ == y.s_ && x.t_ == y.t_;
    if (x.kind_ == Kind::Decimal) return x.deg_ == y.deg_;
    return true;
  }

 private:
  AlphaSpec() = default;
  Kind kind_ = Kind::Generic;
  long s_ = 0;
  long t_ = 1;
  double deg_ = 0.0;
  bool right_ = false;
  bool exceptional_ = false;
};

// ---------------------------------------------------------------------------
// SymbolicAngle and Direction

/// a*pi/3 + b*alpha. beta is never stored separately; it is (4,-1).
struct SymbolicAngle {
  int a = 0;
  int b = 0;

  friend constexpr SymbolicAngle operator+(SymbolicAngle x, SymbolicAngle y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend constexpr SymbolicAngle operator-(SymbolicAngle x, SymbolicAngle y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend constexpr SymbolicAngle operator-(SymbolicAngle x) { return {-x.a, -x.b}; }
  friend constexpr SymbolicAngle operator*(int k, SymbolicAngle x) { return {k * x.a, k * x.b}; }
  SymbolicAngle& operator+=(SymbolicAngle y) {
    a += y.a;
    b += y.b;
    return *this;
  }
  friend constexpr bool operator==(SymbolicAngle, SymbolicAngle) = default;
  friend constexpr auto operator<=>(SymbolicAngle, SymbolicAngle) = default;
};

inline constexpr SymbolicAngle kAlphaAngle{0, 1};
inline constexpr SymbolicAngle kBetaAngle{4, -1};
inline constexpr SymbolicAngle kTriangleAngle{1, 0};
inline constexpr SymbolicAngle kFullTurn{6, 0};
inline constexpr SymbolicAngle kHalfTurn{3, 0};

inline std::string to_string(SymbolicAngle x) {
  return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
}

/// Edge direction a*pi/3 + b*alpha (mod 2pi), a kept in [0,6).
class Direction {
 public:
  constexpr Direction() = default;
  constexpr Direction(int a, int b) : a_(((a % 6) + 6) % 6), b_(b) {}
  constexpr explicit Direction(SymbolicAngle x) : Direction(x.a, x.b) {}

  constexpr int a() const { return a_; }
  constexpr int b() const { return b_; }
  constexpr SymbolicAngle angle() const { return {a_, b_}; }

  friend constexpr Direction operator+(Direction d, SymbolicAngle x) {
    return Direction(d.a_ + x.a, d.b_ + x.b);
  }
  friend constexpr Direction operator-(Direction d, SymbolicAngle x) {
    return Direction(d.a_ - x.a, d.b_ - x.b);
  }
  /// Angle from `from` to `d` as a symbolic difference (not reduced mod 2pi).
  friend constexpr SymbolicAngle operator-(Direction d, Direction from) {
    return {d.a_ - from.a_, d.b_ - from.b_};
  }
  constexpr Direction reversed() const { return *this + kHalfTurn; }

  friend constexpr bool operator==(Direction, Direction) = default;
  friend constexpr auto operator<=>(Direction, Direction) = default;

 private:
  int a_ = 0;
  int b_ = 0;
};

inline std::string to_string(Direction d) {
  return "(" + std::to_string(d.a()) + "," + std::to_string(d.b()) + ")";
}

// ---------------------------------------------------------------------------
// ExactPoint

namespace detail {

// omega^k in the {1, omega} basis, using omega^2 = omega - 1 and omega^3 = -1.
inline constexpr std::array<std::array<int, 2>, 6> kOmegaPow{
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

struct Eisenstein {
  std::int64_t u = 0;
  std::int64_t v = 0;
  friend constexpr bool operator==(Eisenstein, Eisenstein) = default;
};

constexpr Eisenstein mul(Eisenstein x, Eisenstein y) {
  // (u + v w)(p + q w) = up + (uq + vp) w + vq w^2, w^2 = w - 1
  return {x.u * y.u - x.v * y.v, x.u * y.v + x.v * y.u + x.v * y.v};
}

constexpr Eisenstein omega_pow(int k) {
  k = ((k % 6) + 6) % 6;
  return {kOmegaPow[k][0], kOmegaPow[k][1]};
}

constexpr Eisenstein conj(Eisenstein x) {
  // conj(w) = 1 - w
  return {x.u + x.v, -x.v};
}

}  // namespace detail

/// Sum over b of (u_b + v_b*omega) * e^{i b alpha}, omega = e^{i pi/3}.
/// Terms are kept sorted by b with no zero coefficients.
class ExactPoint {
 public:
  struct Term {
    int b = 0;
    std::int64_t u = 0;
    std::int64_t v = 0;
    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
  };

  ExactPoint() = default;

  static ExactPoint unit(Direction d) {
    auto w = detail::omega_pow(d.a());
    ExactPoint p;
    p.terms_.push_back({d.b(), w.u, w.v});
    return p;
  }

  /// Build from arbitrary (possibly unsorted, duplicated, zero) terms.
  static ExactPoint from_terms(std::vector<Term> terms) {
    ExactPoint p;
    for (const auto& t : terms) p.add_term(t.b, t.u, t.v);
    return p;
  }

  std::span<const Term> terms() const { return terms_; }
  bool is_origin() const { return terms_.empty(); }

  ExactPoint& operator+=(const ExactPoint& o) {
    for (const auto& t : o.terms_) add_term(t.b, t.u, t.v);
    return *this;
  }
  ExactPoint& operator-=(const ExactPoint& o) {
    for (const auto& t : o.terms_) add_term(t.b, -t.u, -t.v);
    return *this;
  }
  friend ExactPoint operator+(ExactPoint x, const ExactPoint& y) { return x += y; }
  friend ExactPoint operator-(ExactPoint x, const ExactPoint& y) { return x -= y; }
  friend ExactPoint operator-(const ExactPoint& x) { return ExactPoint{} - x; }
  friend ExactPoint operator*(std::int64_t k, const ExactPoint& x) {
    ExactPoint p;
    if (k == 0) return p;
    p.terms_ = x.terms_;
    for (auto& t : p.terms_) {
      t.u *= k;
      t.v *= k;
    }
    return p;
  }

  /// Multiply by the unit omega^a e^{i b alpha}.
  ExactPoint rotated(Direction d) const {
    ExactPoint p;
    p.terms_.reserve(terms_.size());
    auto w = detail::omega_pow(d.a());
    for (const auto& t : terms_) {
      auto m = detail::mul({t.u, t.v}, w);
      p.terms_.push_back({t.b + d.b(), m.u, m.v});
    }
    return p;
  }

  /// Complex conjugate (reflection across the real axis).
  ExactPoint conjugated() const {
    ExactPoint p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto c = detail::conj({it->u, it->v});
      p.terms_.push_back({-it->b, c.u, c.v});
    }
    return p;
  }

  /// Direction of this point when it is exactly a unit vector omega^a e^{ib alpha}.
  std::optional<Direction> as_unit_direction() const {
    if (terms_.size() != 1) return std::nullopt;
    for (int a = 0; a < 6; ++a) {
      auto w = detail::omega_pow(a);
      if (w.u == terms_[0].u && w.v == terms_[0].v) return Direction(a, terms_[0].b);
    }
    return std::nullopt;
  }

  /// "b1:u1,v1;b2:u2,v2" (the SHIELD/1 exact anchor form); origin is "0:0,0".
  std::string to_string() const {
    if (terms_.empty()) return "0:0,0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) s += ';';
      s += std::to_string(terms_[i].b) + ':' + std::to_string(terms_[i].u) + ',' +
           std::to_string(terms_[i].v);
    }
    return s;
  }

  static ExactPoint parse(std::string_view text) {
    ExactPoint p;
    while (!text.empty()) {
      auto semi = text.find(';');
      auto item = text.substr(0, semi);
      auto colon = item.find(':');
      auto comma = item.find(',');
      if (colon == std::string_view::npos || comma == std::string_view::npos || comma < colon) {
        throw Error(ErrorCode::Parse, "bad exact term '" + std::string(item) + "'");
      }
      long long b = 0, u = 0, v = 0;
      auto num = [&](std::string_view s, long long& out) {
        auto r = std::from_chars(s.data(), s.data() + s.size(), out);
        if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) {
          throw Error(ErrorCode::Parse, "bad integer '" + std::string(s) + "'");
        }
      };
      num(item.substr(0, colon), b);
      num(item.substr(colon + 1, comma - colon - 1), u);
      num(item.substr(comma + 1), v);
      p.add_term(static_cast<int>(b), u, v);
      if (semi == std::string_view::npos) break;
      text.remove_prefix(semi + 1);
    }
    return p;
  }

  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
  friend auto operator<=>(const ExactPoint& x, const ExactPoint& y) { return x.terms_ <=> y.terms_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& t : terms_) {
      for (std::int64_t x : {static_cast<std::int64_t>(t.b), t.u, t.v}) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
    }
    return h;
  }

 private:
  void add_term(int b, std::int64_t u, std::int64_t v) {
    if (u == 0 && v == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, int key) { return t.b < key; });
    if (it != terms_.end() && it->b == b) {
      it->u += u;
      it->v += v;
      if (it->u == 0 && it->v == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term{b, u, v});
    }
  }

  std::vector<Term> terms_;
};

/// Exact addition of the unit vector in direction d.
inline ExactPoint unit_step(const ExactPoint& p, Direction d) { return p + ExactPoint::unit(d); }

// ---------------------------------------------------------------------------
// Geometry: per-alpha evaluation and comparison policy

/// Evaluates symbolic quantities for one alpha. Generic and rational alpha
/// compare angles with integers; decimal alpha compares numerically at kTol.
/// Points are compared exactly only for generic alpha.
class Geometry {
 public:
  explicit Geometry(AlphaSpec alpha) : alpha_(alpha), value_(alpha.radians_or_reference()) {
    for (int b = -kPowRange; b <= kPowRange; ++b) pow_[b + kPowRange] = std::polar(1.0, b * value_);
  }

  const AlphaSpec& alpha() const { return alpha_; }
  double alpha_value() const { return value_; }
  bool exact_points() const { return alpha_.is_generic(); }

  Complex unit(Direction d) const { return omega(d.a()) * alpha_pow(d.b()); }

  Complex eval(const ExactPoint& p) const {
    Complex z{};
    for (const auto& t : p.terms()) {
      z += Complex(static_cast<double>(t.u) + 0.5 * static_cast<double>(t.v),
                   kSqrt3Half * static_cast<double>(t.v)) *
           alpha_pow(t.b);
    }
    return z;
  }

  double radians(SymbolicAngle x) const { return x.a * kPi / 3.0 + x.b * value_; }
  double radians(Direction d) const { return radians(d.angle()); }

  /// Sign of the angle value (exact for generic/rational alpha).
  /// For generic alpha the sign is the sign at every alpha in (pi/3, 2pi/3) when
  /// that is constant, otherwise the sign at the reference value.
  int sign(SymbolicAngle x) const {
    switch (alpha_.kind()) {
      case AlphaSpec::Kind::Generic: {
        if (x.a == 0 && x.b == 0) return 0;
        double lo = x.a * kPi / 3.0 + x.b * kPi / 3.0;
        double hi = x.a * kPi / 3.0 + x.b * 2.0 * kPi / 3.0;
        if (lo >= 0 && hi >= 0) return 1;
        if (lo <= 0 && hi <= 0) return -1;
        return radians(x) > 0 ? 1 : -1;
      }
      case AlphaSpec::Kind::Rational: {
        long long units = rational_units(x);
        return units > 0 ? 1 : (units < 0 ? -1 : 0);
      }
      case AlphaSpec::Kind::Decimal: {
        double r = radians(x);
        return std::abs(r) < kTol ? 0 : (r > 0 ? 1 : -1);
      }
    }
    return 0;
  }

  bool is_zero(SymbolicAngle x) const { return sign(x) == 0; }

  /// Whether x and y are the same angle modulo 2pi.
  bool equal_mod_turn(SymbolicAngle x, SymbolicAngle y) const {
    SymbolicAngle d = x - y;
    switch (alpha_.kind()) {
      case AlphaSpec::Kind::Generic: return d.b == 0 && ((d.a % 6) + 6) % 6 == 0;
      case AlphaSpec::Kind::Rational: {
        long long m = 6LL * alpha_.t();
        return ((rational_units(d) % m) + m) % m == 0;
      }
      case AlphaSpec::Kind::Decimal: {
        double r = std::remainder(radians(d), 2 * kPi);
        return std::abs(r) < kTol;
      }
    }
    return false;
  }

  bool same_direction(Direction x, Direction y) const { return equal_mod_turn(x.angle(), y.angle()); }

  /// Angle of d in [0, 2pi).
  double direction_angle(Direction d) const {
    double r = std::fmod(radians(d), 2 * kPi);
    if (r < 0) r += 2 * kPi;
    if (r >= 2 * kPi - 1e-12) r = 0;
    return r;
  }

  /// Value in units of pi/(3t) for rational alpha = s pi / t.
  long long rational_units(SymbolicAngle x) const {
    return static_cast<long long>(x.a) * alpha_.t() + 3LL * alpha_.s() * x.b;
  }

 private:
  static constexpr int kPowRange = 24;
  static constexpr double kSqrt3Half = 0.86602540378443864676;

  static Complex omega(int a) {
    static const std::array<Complex, 6> kW = [] {
      std::array<Complex, 6> w{};
      for (int k = 0; k < 6; ++k) w[k] = std::polar(1.0, k * kPi / 3.0);
      w[0] = {1, 0};
      w[3] = {-1, 0};
      return w;
    }();
    return kW[((a % 6) + 6) % 6];
  }

  Complex alpha_pow(int b) const {
    if (b >= -kPowRange && b <= kPowRange) return pow_[b + kPowRange];
    return std::polar(1.0, b * value_);
  }

  AlphaSpec alpha_;
  double value_;
  std::array<Complex, 2 * kPowRange + 1> pow_{};
};

// ---------------------------------------------------------------------------
// Free operations

inline AlphaSpec make_alpha(std::string_view text) { return AlphaSpec::parse(text); }

/// a*pi/3 + b*alpha in radians; alpha must carry a numeric value.
inline double angle_radians(SymbolicAngle x, const AlphaSpec& alpha) {
  return x.a * kPi / 3.0 + x.b * alpha.radians();
}

/// Whether the angles sum to exactly one full turn.
inline bool full_turn_check(std::span<const SymbolicAngle> angles, const AlphaSpec& alpha) {
  SymbolicAngle sum{};
  for (auto x : angles) sum += x;
  switch (alpha.kind()) {
    case AlphaSpec::Kind::Generic: return sum.a == 6 && sum.b == 0;
    case AlphaSpec::Kind::Rational:
      return alpha.t() * sum.a + 3 * alpha.s() * sum.b == 6 * alpha.t();
    case AlphaSpec::Kind::Decimal:
      return std::abs(angle_radians(sum, alpha) - 2 * kPi) < kTol;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Isometry: z -> rot * (reflect ? conj(z) : z) + trans

struct Isometry {
  Direction rot{};
  bool reflect = false;
  ExactPoint trans{};

  static Isometry identity() { return {}; }
  static Isometry translation(ExactPoint t) { return {Direction{}, false, std::move(t)}; }
  static Isometry rotation(Direction d) { return {d, false, {}}; }

  ExactPoint linear(const ExactPoint& p) const {
    return (reflect ? p.conjugated() : p).rotated(rot);
  }
  ExactPoint apply(const ExactPoint& p) const { return linear(p) + trans; }

  Direction apply(Direction d) const {
    return reflect ? Direction(rot.a() - d.a(), rot.b() - d.b()) : d + rot.angle();
  }

  Complex apply(Complex z, const Geometry& g) const {
    return g.unit(rot) * (reflect ? std::conj(z) : z) + g.eval(trans);
  }

  /// (*this) o g
  Isometry compose(const Isometry& g) const {
    return {apply(g.rot), reflect != g.reflect, apply(g.trans)};
  }

  Isometry inverse() const {
    Isometry inv;
    inv.reflect = reflect;
    inv.rot = reflect ? rot : Direction(-rot.a(), -rot.b());
    inv.trans = -inv.linear(trans);
    return inv;
  }
};

}  // namespace shield
