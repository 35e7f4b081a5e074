#include "legcirc/render.hpp"

#include "legcirc/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace legcirc {

namespace {

constexpr double kTwoPi = 6.283185307179586;

double wrap(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

bool in_chart(const LegendrianPolygon& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Vec4 a = p.vertex(k), b = p.vertex(k + 1);
    if (contact_element(a).at_infinity || contact_element(a + b).at_infinity) return false;
    if (!lagrangian_to_circle(Lagrangian(a, b)).is_circle()) return false;
  }
  return true;
}

std::vector<MobiusMatrix> chart_candidates() {
  std::vector<MobiusMatrix> out{MobiusMatrix::identity()};
  const Rational re[] = {frac(1, 3), frac(-1, 2), frac(2, 5), frac(-3, 7), frac(5, 4),
                         frac(-7, 5)};
  const Rational im[] = {frac(1, 5), frac(-2, 7), frac(3, 4), frac(-5, 6), frac(4, 3)};
  for (const auto& x : re)
    for (const auto& y : im) {
      const ComplexQ p(x, y);
      out.push_back(MobiusMatrix{-p, ComplexQ(1), ComplexQ(-1), ComplexQ(0)});
    }
  return out;
}

std::pair<double, double> to_point(const ComplexQ& z) { return {to_double(z.re), to_double(z.im)}; }

double angle_of(const ArcDrawable& a, double x, double y) { return std::atan2(y - a.cy, x - a.cx); }

bool on_arc(const ArcDrawable& a, double x, double y, double tol) {
  if (a.point) return std::hypot(x - a.cx, y - a.cy) < tol;
  if (std::abs(std::hypot(x - a.cx, y - a.cy) - a.radius) > tol) return false;
  const double t0 = angle_of(a, a.x0, a.y0);
  const double t = angle_of(a, x, y);
  const double delta = a.ccw ? wrap(t - t0) : wrap(t0 - t);
  const double slack = tol / a.radius;
  return delta <= a.span + slack || delta >= kTwoPi - slack;
}

bool arcs_meet(const ArcDrawable& a, const ArcDrawable& b, double tol) {
  if (a.point) return on_arc(b, a.cx, a.cy, tol);
  if (b.point) return on_arc(a, b.cx, b.cy, tol);
  const double dx = b.cx - a.cx, dy = b.cy - a.cy;
  const double d = std::hypot(dx, dy);
  if (d < tol && std::abs(a.radius - b.radius) < tol) {
    return on_arc(a, b.x0, b.y0, tol) || on_arc(a, b.x1, b.y1, tol) || on_arc(b, a.x0, a.y0, tol) ||
           on_arc(b, a.x1, a.y1, tol);
  }
  if (d < tol) return false;
  if (d > a.radius + b.radius + tol || d < std::abs(a.radius - b.radius) - tol) return false;
  const double l = (a.radius * a.radius - b.radius * b.radius + d * d) / (2 * d);
  const double h = std::sqrt(std::max(0.0, a.radius * a.radius - l * l));
  const double mx = a.cx + l * dx / d, my = a.cy + l * dy / d;
  const double px[2] = {mx - h * dy / d, mx + h * dy / d};
  const double py[2] = {my + h * dx / d, my - h * dx / d};
  for (int k = 0; k < 2; ++k)
    if (on_arc(a, px[k], py[k], tol) && on_arc(b, px[k], py[k], tol)) return true;
  return false;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

std::optional<MobiusMatrix> choose_chart(const LegendrianPolygon& p) {
  for (const auto& m : chart_candidates())
    if (in_chart(apply_symplectic(p, mobius_embed(m)))) return m;
  return std::nullopt;
}

RenderScene polygon_scene_in_chart(const LegendrianPolygon& poly, const MobiusMatrix& chart) {
  const LegendrianPolygon p = apply_symplectic(poly, mobius_embed(chart));
  RenderScene scene;
  scene.chart = chart;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Vec4 a = p.vertex(k), b = p.vertex(k + 1);
    const ContactElement ea = contact_element(a), eb = contact_element(b), em = contact_element(a + b);
    const CoorientedCircle c = lagrangian_to_circle(Lagrangian(a, b));
    if (ea.at_infinity || eb.at_infinity || em.at_infinity || !c.is_circle())
      throw Error(ErrorCode::Unrepresentable, "edge " + std::to_string(k + 1) + " leaves the affine chart");
    ArcDrawable arc;
    arc.edge = k + 1;
    arc.cx = to_double(c.a);
    arc.cy = to_double(c.b);
    arc.radius = std::abs(to_double(c.c));
    std::tie(arc.x0, arc.y0) = to_point(ea.base);
    std::tie(arc.x1, arc.y1) = to_point(eb.base);
    if (sgn(c.c) == 0) {
      arc.point = true;
    } else {
      const auto [mx, my] = to_point(em.base);
      const double t0 = angle_of(arc, arc.x0, arc.y0);
      const double d1 = wrap(angle_of(arc, arc.x1, arc.y1) - t0);
      const double dm = wrap(angle_of(arc, mx, my) - t0);
      arc.ccw = dm < d1;
      arc.span = arc.ccw ? d1 : kTwoPi - d1;
    }
    scene.arcs.push_back(arc);
    const auto [dx, dy] = to_point(ea.direction);
    const double len = std::hypot(dx, dy);
    scene.arrows.push_back(ArrowDrawable{arc.x0, arc.y0, dx / len, dy / len});
  }
  return scene;
}

RenderScene polygon_scene(const LegendrianPolygon& p) {
  const auto chart = choose_chart(p);
  if (!chart) throw Error(ErrorCode::Unrepresentable, "no Möbius move places the polygon in the affine chart");
  return polygon_scene_in_chart(p, *chart);
}

RenderScene circles_scene(const std::vector<CoorientedCircle>& circles) {
  RenderScene scene;
  for (const auto& c : circles) {
    if (!c.is_circle()) continue;
    scene.circles.push_back(CircleDrawable{to_double(c.a), to_double(c.b), std::abs(to_double(c.c))});
  }
  return scene;
}

std::vector<std::pair<std::size_t, std::size_t>> find_crossings(const RenderScene& scene, double tol) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = scene.arcs.size();
  // Arcs joined through collapsed edges share an endpoint in the chart.
  auto only_points = [&](std::size_t from, std::size_t to) {
    for (std::size_t k = (from + 1) % n; k != to; k = (k + 1) % n)
      if (!scene.arcs[k].point) return false;
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cyclically_adjacent(i, j, n) || only_points(i, j) || only_points(j, i)) continue;
      if (arcs_meet(scene.arcs[i], scene.arcs[j], tol)) out.emplace_back(i + 1, j + 1);
    }
  return out;
}

std::string to_svg(const RenderScene& scene, double size) {
  double xmin = std::numeric_limits<double>::max(), ymin = xmin;
  double xmax = std::numeric_limits<double>::lowest(), ymax = xmax;
  auto grow = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const auto& a : scene.arcs) {
    grow(a.x0, a.y0);
    grow(a.x1, a.y1);
    if (a.point) continue;
    const double t0 = std::atan2(a.y0 - a.cy, a.x0 - a.cx);
    for (int s = 1; s < 32; ++s) {
      const double t = t0 + (a.ccw ? 1 : -1) * a.span * s / 32.0;
      grow(a.cx + a.radius * std::cos(t), a.cy + a.radius * std::sin(t));
    }
  }
  for (const auto& c : scene.circles) {
    grow(c.cx - c.radius, c.cy - c.radius);
    grow(c.cx + c.radius, c.cy + c.radius);
  }
  for (const auto& [x, y] : scene.curve) grow(x, y);
  if (xmin > xmax) xmin = ymin = -1, xmax = ymax = 1;
  double w = std::max(xmax - xmin, ymax - ymin);
  if (w <= 0) w = 1;
  const double margin = 0.08 * w;
  const double scale = size / (w + 2 * margin);
  auto sx = [&](double x) { return (x - xmin + margin) * scale; };
  auto sy = [&](double y) { return size - (y - ymin + margin) * scale; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(size) + "\" height=\"" +
         num(size) + "\" viewBox=\"0 0 " + num(size) + " " + num(size) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& c : scene.circles)
    out += "<circle cx=\"" + num(sx(c.cx)) + "\" cy=\"" + num(sy(c.cy)) + "\" r=\"" + num(c.radius * scale) +
           "\" fill=\"none\" stroke=\"#4a6fa5\" stroke-width=\"0.8\"/>\n";
  if (!scene.curve.empty()) {
    out += "<polyline fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < scene.curve.size(); ++i)
      out += (i ? " " : "") + num(sx(scene.curve[i].first)) + "," + num(sy(scene.curve[i].second));
    out += "\"/>\n";
  }
  if (!scene.arcs.empty()) {
    out += "<path fill=\"none\" stroke=\"black\" stroke-width=\"2\" d=\"";
    for (const auto& a : scene.arcs) {
      if (a.point) continue;
      out += "M " + num(sx(a.x0)) + " " + num(sy(a.y0)) + " A " + num(a.radius * scale) + " " +
             num(a.radius * scale) + " 0 " + (a.span > kTwoPi / 2 ? "1" : "0") + " " + (a.ccw ? "0" : "1") + " " +
             num(sx(a.x1)) + " " + num(sy(a.y1)) + " ";
    }
    out += "\"/>\n";
  }
  const double len = 0.05 * size;
  for (const auto& r : scene.arrows) {
    const double x0 = sx(r.x), y0 = sy(r.y);
    const double x1 = x0 + len * r.dx, y1 = y0 - len * r.dy;
    out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y1) +
           "\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
    const double hx = -r.dx, hy = r.dy;  // back along the arrow, screen coordinates
    const double h = 0.3 * len;
    const double c = std::cos(0.5), s = std::sin(0.5);
    out += "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" points=\"" +
           num(x1 + h * (c * hx - s * hy)) + "," + num(y1 + h * (s * hx + c * hy)) + " " + num(x1) + "," +
           num(y1) + " " + num(x1 + h * (c * hx + s * hy)) + "," + num(y1 + h * (-s * hx + c * hy)) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace legcirc
