#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "shield/classify.hpp"
#include "shield/dodecagon.hpp"
#include "shield/enumerate.hpp"
#include "shield/generators.hpp"
#include "shield/io.hpp"
#include "shield/polynomial.hpp"
#include "shield/svg.hpp"

using namespace shield;

namespace {

Patch load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return read_shield1(in);
}

void save(const Patch& p, const std::string& path) {
  if (path.empty() || path == "-") {
    write_shield1(std::cout, p);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  write_shield1(out, p);
}

TriangleSpec parse_order(const std::string& s) {
  if (s == "inf" || s == "infinite") return TriangleSpec::infinite();
  std::size_t used = 0;
  int k = -1;
  try {
    k = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw Error(ErrorCode::Parse, "order must be a non-negative integer or 'inf', got '" + s + "'");
  return TriangleSpec::finite(k);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shield tilings: atlas, generators, classification, enumeration"};
  app.require_subcommand(1);

  std::string alpha_text = "generic";
  auto* atlas_cmd = app.add_subcommand("atlas", "vertex configurations admitted by alpha");
  atlas_cmd->add_option("--alpha", alpha_text, "generic, s/t (alpha = s pi/t) or degrees");

  bool with_right = false;
  auto* exc_cmd = app.add_subcommand("exceptional", "alpha values with extra vertex configurations");
  exc_cmd->add_flag("--with-right", with_right, "include alpha = pi/2 in the scan");

  auto* gen_cmd = app.add_subcommand("generate", "write a generated patch as SHIELD/1");
  gen_cmd->require_subcommand(1);
  std::string out_path, word = "+", order = "1";
  int extent = 3, choice = -1;
  unsigned seed = 1;
  auto* gen_line = gen_cmd->add_subcommand("line", "line tiling");
  gen_line->add_option("--word", word, "orientation word over {+,-}");
  auto* gen_tri = gen_cmd->add_subcommand("triangle", "triangle tiling");
  gen_tri->add_option("--order", order, "order k or 'inf'");
  auto* gen_dod = gen_cmd->add_subcommand("dodecagon", "right-shield dodecagon packing");
  gen_dod->add_option("--choice", choice, "filling index for every cell (default: random per cell)");
  gen_dod->add_option("--seed", seed, "random seed for per-cell choices");
  for (auto* c : {gen_line, gen_tri}) c->add_option("--alpha", alpha_text, "alpha");
  for (auto* c : {gen_line, gen_tri, gen_dod}) {
    c->add_option("--extent", extent, "patch extent")->check(CLI::NonNegativeNumber);
    c->add_option("--out", out_path, "output file ('-' for stdout)");
  }

  std::string in_path;
  auto* cls_cmd = app.add_subcommand("classify", "classify a SHIELD/1 patch");
  cls_cmd->add_option("file", in_path)->required();

  double radius = 1.0, margin = 1.0;
  std::uint64_t budget = SearchOptions{}.node_budget;
  bool keys = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "count patterns P_n");
  enum_cmd->add_option("--alpha", alpha_text, "alpha");
  enum_cmd->add_option("--radius", radius, "ball radius n")->check(CLI::PositiveNumber);
  enum_cmd->add_option("--budget", budget, "node budget");
  enum_cmd->add_option("--margin", margin, "search margin beyond n");
  enum_cmd->add_flag("--keys", keys, "print the canonical keys");

  auto* fill_cmd = app.add_subcommand("fillings", "print the dodecagon fillings");

  std::string svg_path;
  bool marks = false;
  double scale = 40.0;
  auto* render_cmd = app.add_subcommand("render", "draw a SHIELD/1 patch as SVG");
  render_cmd->add_option("file", in_path)->required();
  render_cmd->add_option("--svg", svg_path, "output SVG")->required();
  render_cmd->add_option("--scale", scale, "pixels per unit edge")->check(CLI::PositiveNumber);
  render_cmd->add_flag("--marks", marks, "mark interior vertices");

  auto* root_cmd = app.add_subcommand("root", "disk-radius polynomial root");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*atlas_cmd) {
      for (const auto& c : atlas(AlphaSpec::parse(alpha_text)))
        std::cout << c.name() << ' ' << c.str() << ' ' << c.counts().to_string() << '\n';
    } else if (*exc_cmd) {
      for (const auto& e : exceptional_alphas(with_right)) {
        std::cout << e.alpha.to_string();
        for (const auto& w : e.witnesses) std::cout << ' ' << w.to_string();
        std::cout << '\n';
      }
    } else if (*gen_cmd) {
      if (*gen_line) save(gen_line_tiling(OrientationWord::parse(word), extent, AlphaSpec::parse(alpha_text)), out_path);
      if (*gen_tri) save(gen_triangle_tiling(parse_order(order), extent, AlphaSpec::parse(alpha_text)), out_path);
      if (*gen_dod) {
        auto fillings = dodecagon_fillings();
        DodecagonChoice pick;
        if (choice >= 0) {
          pick = DodecagonChoice::constant(choice);
        } else {
          std::mt19937 rng(seed);
          std::uniform_int_distribution<int> d(0, static_cast<int>(fillings.size()) - 1);
          for (int m = -extent; m <= extent; ++m)
            for (int n = -extent; n <= extent; ++n) pick.assignment[{m, n}] = d(rng);
        }
        save(gen_dodecagon_tiling(pick, extent, fillings), out_path);
      }
    } else if (*cls_cmd) {
      auto c = classify(load(in_path));
      std::cout << c.to_string() << '\n';
      return c.verdict == Classification::Verdict::Inconclusive ? 2 : 0;
    } else if (*enum_cmd) {
      SearchOptions opts;
      opts.node_budget = budget;
      opts.margin = margin;
      auto pc = count_patterns(radius, AlphaSpec::parse(alpha_text), opts);
      std::cout << "P_n = " << pc.count << (pc.complete ? "" : " (lower bound: budget exceeded)") << '\n';
      if (keys)
        for (const auto& k : pc.patterns) std::cout << k << '\n';
    } else if (*fill_cmd) {
      auto fillings = dodecagon_fillings();
      for (std::size_t i = 0; i < fillings.size(); ++i) {
        Patch p(dodecagon::alpha());
        for (const auto& pl : fillings[i].tiles) p.add_unchecked(pl);
        std::cout << "# filling " << i << '\n';
        write_shield1(std::cout, p);
      }
    } else if (*render_cmd) {
      RenderStyle style;
      style.scale = scale;
      style.mark_vertices = marks;
      std::ofstream out(svg_path);
      if (!out) throw Error(ErrorCode::Parse, "cannot write " + svg_path);
      out << render_svg(load(in_path), style);
    } else if (*root_cmd) {
      auto r = disk_radius_root();
      std::cout.precision(15);
      std::cout << "r = " << r.value << " residual = " << r.residual << '\n';
      std::cout << "alpha = " << kPackingAlphaDegrees << " degrees (reference)\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
