#pragma once

// The disk-radius polynomial r^8 - 8r^7 - 44r^6 - 232r^5 - 482r^4 - 24r^3 + 388r^2 - 120r + 9
// and its root near 0.54.

#include <array>
#include <cmath>
#include <vector>

namespace shield {

/// Coefficients from the leading term down.
inline constexpr std::array<double, 9> kDiskPolynomial{1, -8, -44, -232, -482, -24, 388, -120, 9};

inline double disk_polynomial(double r) {
  double acc = 0;
  for (double c : kDiskPolynomial) acc = acc * r + c;
  return acc;
}

struct DiskRadius {
  double value = 0;
  double residual = 0;  // |P(value)|
};

namespace detail {

inline double bisect(double lo, double hi) {
  double plo = disk_polynomial(lo);
  for (int i = 0; i < 200 && hi - lo > 0; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double pm = disk_polynomial(mid);
    if (pm == 0) return mid;
    if ((pm < 0) == (plo < 0)) {
      lo = mid;
      plo = pm;
    } else {
      hi = mid;
    }
  }
  return std::abs(disk_polynomial(lo)) <= std::abs(disk_polynomial(hi)) ? lo : hi;
}

}  // namespace detail

/// Real roots in (0, 1), isolated on a grid of step 1e-3 and bisected to machine precision.
inline std::vector<DiskRadius> disk_polynomial_roots() {
  std::vector<DiskRadius> out;
  constexpr int kSteps = 1000;
  for (int i = 0; i < kSteps; ++i) {
    double a = static_cast<double>(i) / kSteps, b = static_cast<double>(i + 1) / kSteps;
    double pa = disk_polynomial(a), pb = disk_polynomial(b);
    if (pa == 0 && i > 0) {
      out.push_back({a, 0});
      continue;
    }
    if ((pa < 0) != (pb < 0) && pb != 0) {
      double r = detail::bisect(a, b);
      out.push_back({r, std::abs(disk_polynomial(r))});
    }
  }
  return out;
}

/// The packing radius: the root in (0.5, 0.6).
inline DiskRadius disk_radius_root() {
  for (const auto& r : disk_polynomial_roots())
    if (r.value > 0.5 && r.value < 0.6) return r;
  return {};
}

/// The shield angle paired with this radius, in degrees.
inline constexpr double kPackingAlphaDegrees = 99.34;

}  // namespace shield
