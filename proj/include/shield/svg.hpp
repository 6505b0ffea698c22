#pragma once

// SVG drawing of a patch. Generic patches are drawn at alpha = 99 degrees.

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include "shield/patch.hpp"

namespace shield {

struct RenderStyle {
  double scale = 40.0;  // pixels per unit edge
  std::map<TileKind, std::string> palette{{TileKind::Triangle, "#f2c14e"}, {TileKind::Shield, "#5b8fb9"}};
  double stroke_width = 1.0;
  bool mark_vertices = false;  // dot each interior vertex, classed by its configuration
};

inline constexpr double kRenderDegrees = 99.0;

namespace detail {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

}  // namespace detail

inline std::string render_svg(const Patch& patch, const RenderStyle& style = {}) {
  if (!(style.scale > 0)) throw Error(ErrorCode::OutOfRange, "scale must be positive");
  const Geometry g(patch.alpha().is_generic() ? AlphaSpec::degrees(kRenderDegrees) : patch.alpha());
  std::vector<std::vector<Complex>> polys;
  const auto placements = patch.placements();
  polys.reserve(placements.size());
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool first = true;
  for (const auto& pl : placements) {
    polys.push_back(pl.numeric_vertices(g));
    for (auto z : polys.back()) {
      if (first) {
        x0 = x1 = z.real();
        y0 = y1 = z.imag();
        first = false;
      }
      x0 = std::min(x0, z.real());
      x1 = std::max(x1, z.real());
      y0 = std::min(y0, z.imag());
      y1 = std::max(y1, z.imag());
    }
  }
  const double pad = 0.5, s = style.scale;
  // y grows downward in SVG
  auto px = [&](Complex z) { return detail::fmt((z.real() - x0 + pad) * s) + "," + detail::fmt((y1 - z.imag() + pad) * s); };
  const double w = (x1 - x0 + 2 * pad) * s, h = (y1 - y0 + 2 * pad) * s;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(w) << "\" height=\"" << detail::fmt(h)
      << "\" viewBox=\"0 0 " << detail::fmt(w) << ' ' << detail::fmt(h) << "\">\n";
  out << "<g stroke=\"#222\" stroke-width=\"" << detail::fmt(style.stroke_width) << "\" stroke-linejoin=\"round\">\n";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    TileKind kind = placements[i].kind;
    auto it = style.palette.find(kind);
    out << "<polygon class=\"" << (kind == TileKind::Shield ? "shield" : "triangle") << "\" fill=\""
        << (it == style.palette.end() ? "none" : it->second) << "\" points=\"";
    for (std::size_t k = 0; k < polys[i].size(); ++k) out << (k ? " " : "") << px(polys[i][k]);
    out << "\"/>\n";
  }
  out << "</g>\n";
  if (style.mark_vertices) {
    out << "<g stroke=\"none\" fill=\"#c0392b\">\n";
    for (int v = 0; v < static_cast<int>(patch.vertex_count()); ++v) {
      if (!patch.is_interior(v)) continue;
      Complex z = patch.vertex(v).xy;
      if (patch.alpha().is_generic() && patch.vertex(v).exact) z = g.eval(*patch.vertex(v).exact);
      std::string p = px(z);
      auto comma = p.find(',');
      out << "<circle class=\"" << VertexConfig(patch.star(v).word()).name() << "\" cx=\"" << p.substr(0, comma)
          << "\" cy=\"" << p.substr(comma + 1) << "\" r=\"" << detail::fmt(0.06 * s) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace shield
