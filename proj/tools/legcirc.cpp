#include "legcirc/error.hpp"
#include "legcirc/io.hpp"
#include "legcirc/render.hpp"
#include "legcirc/veronese.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace legcirc;

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Polygon files may also hold a flag tuple, which is sent through 𝓒.
LegendrianPolygon load_polygon(const std::string& path) {
  const json j = read_json_file(path);
  if (j.is_object() && j.contains("flags")) return flags_to_polygon(flags_from_json(j));
  return polygon_from_json(j);
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + dir + ": " + ec.message());
}

std::string join(const std::string& dir, const std::string& name) { return (fs::path(dir) / name).string(); }

void emit(const json& j, const std::string& out) {
  if (out.empty())
    std::cout << dump(j);
  else
    write_text_file(out, dump(j));
}

int cmd_check(const std::string& path) {
  const LegendrianPolygon p = load_polygon(path);
  const Transversality t = transversality_class(p);
  std::cout << "vertices: " << p.size() << " (closing sign " << (p.closing_sign() > 0 ? "+" : "-") << ")\n";
  std::cout << "generic: " << yes_no(is_generic(p)) << "\n";
  std::cout << "transverse: " << yes_no(t != Transversality::NotTransverse) << "\n";
  std::cout << "transversality class: " << to_string(t) << "\n";
  if (t == Transversality::NotTransverse)
    std::cout << "decreasing curvature: n/a\n";
  else
    std::cout << "decreasing curvature: " << yes_no(has_decreasing_curvature(p)) << "\n";
  std::cout << "homotopy class: " << to_string(homotopy_class(p)) << "\n";
  if (p.size() % 2 == 0) {
    std::string positive;
    try {
      positive = yes_no(tuple_positive(polygon_to_flags(p)));
    } catch (const Error& e) {
      positive = std::string("n/a (") + e.what() + ")";
    }
    std::cout << "positive: " << positive << "\n";
  }
  return 0;
}

int cmd_sample(long k, std::uint64_t seed, const std::string& out) {
  if (k < 3) throw Error(ErrorCode::InvalidInput, "k must be at least 3");
  ensure_dir(out);
  const FlagTuple flags = sample_positive_tuple(static_cast<std::size_t>(k), seed);
  const LegendrianPolygon p = flags_to_polygon(flags);
  write_text_file(join(out, "flags.json"), dump(flags_to_json(flags)));
  write_text_file(join(out, "polygon.json"), dump(polygon_to_json(p)));
  write_text_file(join(out, "polygon.svg"), render_polygon(p));
  std::cout << "wrote " << 2 * k << "-gon to " << out << "\n";
  return 0;
}

int cmd_translate(const std::string& path, const std::string& r_text, long frames, const std::string& out) {
  if (frames < 1) throw Error(ErrorCode::InvalidInput, "frames must be at least 1");
  const Rational r = parse_rational(r_text);
  const LegendrianPolygon p = load_polygon(path);
  const auto chart = choose_chart(p);
  if (!chart) throw Error(ErrorCode::Unrepresentable, "no Möbius move places the polygon in the affine chart");
  const LegendrianPolygon base = apply_symplectic(p, mobius_embed(*chart));
  ensure_dir(out);
  int status = 0;
  for (long i = 0; i <= frames; ++i) {
    const Rational s = r * frac(i, frames);
    const LegendrianPolygon q = apply_symplectic(base, radial_translation_matrix(s));
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03ld.svg", i);
    std::cout << name << " r=" << to_string(s) << " class: " << to_string(transversality_class(q));
    try {
      const RenderScene scene = polygon_scene_in_chart(q, MobiusMatrix::identity());
      std::size_t collapsed = 0;
      for (const auto& a : scene.arcs) collapsed += a.point;
      write_text_file(join(out, name), to_svg(scene));
      if (collapsed) std::cout << " collapsed arcs: " << collapsed;
      std::cout << "\n";
    } catch (const Error& e) {
      std::cout << " not rendered (" << e.what() << ")\n";
      status = 1;
    }
  }
  return status;
}

int cmd_maslov(const std::string& path) {
  const auto cs = circles_from_json(read_json_file(path));
  if (cs.size() < 3) throw Error(ErrorCode::InvalidInput, "need at least 3 circles");
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      for (std::size_t k = j + 1; k < cs.size(); ++k) {
        std::cout << i + 1 << " " << j + 1 << " " << k + 1 << ": ";
        try {
          std::cout << maslov_of_circles(cs[i], cs[j], cs[k]) << "\n";
        } catch (const Error& e) {
          std::cout << "undefined (" << e.what() << ")\n";
        }
      }
  return 0;
}

int cmd_veronese(long samples, const std::string& out) {
  if (samples < 1) throw Error(ErrorCode::InvalidInput, "samples must be positive");
  ensure_dir(out);
  // Half of the curve: t in (0, 3].
  std::vector<CoorientedCircle> circles;
  for (long i = 1; i <= samples; ++i) circles.push_back(osculating_circle(frac(3 * i, samples)));
  RenderScene scene = circles_scene(circles);
  for (int i = 0; i <= 600; ++i) {
    const auto w = projected_veronese(-3.0 + 6.0 * i / 600.0);
    scene.curve.emplace_back(w.real(), w.imag());
  }
  write_text_file(join(out, "osculating.json"), dump(circles_to_json(circles)));
  write_text_file(join(out, "veronese.svg"), to_svg(scene));
  std::cout << "wrote " << circles.size() << " osculating circles to " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian polygons and co-oriented piecewise circular curves"};
  app.require_subcommand(1);

  std::string file, out;
  long k = 3, frames = 1, samples = 40;
  std::uint64_t seed = 1;
  std::string r = "0";

  auto* check = app.add_subcommand("check", "Report genericity, transversality, curvature and positivity");
  check->add_option("file", file, "polygon JSON")->required();

  auto* sample = app.add_subcommand("sample", "Sample a positive flag tuple and its polygon");
  sample->add_option("--k", k, "number of flags")->required();
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("--out", out, "output directory")->required();

  auto* translate = app.add_subcommand("translate", "Render radial translates T_{r i/frames}, i = 0..frames");
  translate->add_option("file", file, "polygon JSON")->required();
  translate->add_option("--r", r, "total translation, rational")->required();
  translate->add_option("--frames", frames, "number of steps");
  translate->add_option("--out", out, "output directory")->required();

  auto* flags_of = app.add_subcommand("flags-of", "Flag tuple of a polygon");
  flags_of->add_option("file", file, "polygon JSON")->required();
  flags_of->add_option("--out", out, "output file (default stdout)");

  auto* polygon_of = app.add_subcommand("polygon-of", "Polygon of a flag tuple");
  polygon_of->add_option("file", file, "flags JSON")->required();
  polygon_of->add_option("--out", out, "output file (default stdout)");

  auto* maslov = app.add_subcommand("maslov", "Maslov index of every triple of circles");
  maslov->add_option("file", file, "circles JSON")->required();

  auto* veronese = app.add_subcommand("veronese", "Osculating circles of the projected Veronese curve");
  veronese->add_option("--samples", samples, "number of circles");
  veronese->add_option("--out", out, "output directory")->required();

  auto* render = app.add_subcommand("render", "Render a polygon as SVG");
  render->add_option("file", file, "polygon JSON")->required();
  render->add_option("--out", out, "output SVG")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(file);
    if (*sample) return cmd_sample(k, seed, out);
    if (*translate) return cmd_translate(file, r, frames, out);
    if (*flags_of) {
      emit(flags_to_json(polygon_to_flags(load_polygon(file))), out);
      return 0;
    }
    if (*polygon_of) {
      emit(polygon_to_json(flags_to_polygon(flags_from_json(read_json_file(file)))), out);
      return 0;
    }
    if (*maslov) return cmd_maslov(file);
    if (*veronese) return cmd_veronese(samples, out);
    if (*render) {
      write_text_file(out, render_polygon(load_polygon(file)));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return 1;
  }
  return 0;
}
