#pragma once

// SHIELD/1 patch text format.
//
//   shield-patch 1
//   alpha generic | alpha rational <s> <t> | alpha degrees <d>
//   tile <T|S> exact <b:u,v;...> <a> <b>
//   tile <T|S> num <x> <y> <a> <b>

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "shield/patch.hpp"

namespace shield {

inline void write_shield1(std::ostream& os, const Patch& patch) {
  const auto& alpha = patch.alpha();
  os << "shield-patch 1\n";
  switch (alpha.kind()) {
    case AlphaSpec::Kind::Generic: os << "alpha generic\n"; break;
    case AlphaSpec::Kind::Rational: os << "alpha rational " << alpha.s() << ' ' << alpha.t() << '\n'; break;
    case AlphaSpec::Kind::Decimal:
      os << "alpha degrees " << std::setprecision(15) << alpha.deg() << '\n';
      break;
  }
  const bool exact = patch.is_exact();
  for (const auto& t : patch.tiles()) {
    const auto& pl = t.placement;
    os << "tile " << static_cast<char>(pl.kind) << ' ';
    if (exact) {
      os << "exact " << pl.anchor.to_string();
    } else {
      Complex z = t.pts.front();
      os << "num " << std::setprecision(12) << z.real() << ' ' << z.imag();
    }
    os << ' ' << pl.heading.a() << ' ' << pl.heading.b() << '\n';
  }
}

inline std::string to_shield1(const Patch& patch) {
  std::ostringstream os;
  write_shield1(os, patch);
  return os.str();
}

/// Reads a patch without checking it; call validate() on the result.
inline Patch read_shield1(std::istream& is) {
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": " + msg);
  };
  auto next = [&]() -> bool {
    while (std::getline(is, line)) {
      ++lineno;
      auto p = line.find_first_not_of(" \t\r");
      if (p == std::string::npos || line[p] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next()) throw fail("empty input");
  {
    std::istringstream ls(line);
    std::string magic;
    int version = 0;
    if (!(ls >> magic >> version) || magic != "shield-patch" || version != 1)
      throw fail("expected 'shield-patch 1'");
  }
  if (!next()) throw fail("missing alpha line");
  AlphaSpec alpha = AlphaSpec::generic();
  {
    std::istringstream ls(line);
    std::string key, kind;
    ls >> key >> kind;
    if (key != "alpha") throw fail("expected alpha line");
    if (kind == "generic") {
      alpha = AlphaSpec::generic();
    } else if (kind == "rational") {
      long s = 0, t = 0;
      if (!(ls >> s >> t)) throw fail("bad rational alpha");
      alpha = AlphaSpec::rational(s, t);
    } else if (kind == "degrees") {
      double d = 0;
      if (!(ls >> d)) throw fail("bad degrees alpha");
      alpha = AlphaSpec::degrees(d);
    } else {
      throw fail("unknown alpha kind '" + kind + "'");
    }
  }

  Patch patch(alpha);
  while (next()) {
    std::istringstream ls(line);
    std::string key, kind, form;
    ls >> key >> kind >> form;
    if (key != "tile" || (kind != "T" && kind != "S")) throw fail("expected tile line");
    Placement pl;
    pl.kind = kind == "T" ? TileKind::Triangle : TileKind::Shield;
    if (form == "exact") {
      std::string spec;
      ls >> spec;
      pl.anchor = ExactPoint::parse(spec);
    } else if (form == "num") {
      double x = 0, y = 0;
      if (!(ls >> x >> y)) throw fail("bad numeric anchor");
      pl.float_anchor = Complex(x, y);
    } else {
      throw fail("unknown anchor form '" + form + "'");
    }
    int a = 0, b = 0;
    if (!(ls >> a >> b)) throw fail("bad heading");
    pl.heading = Direction(a, b);
    patch.add_unchecked(pl);
  }
  return patch;
}

inline Patch from_shield1(const std::string& text) {
  std::istringstream is(text);
  return read_shield1(is);
}

}  // namespace shield
