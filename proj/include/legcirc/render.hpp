#pragma once

#include "legcirc/circles.hpp"
#include "legcirc/polygon.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace legcirc {

struct ArcDrawable {
  std::size_t edge = 0;  // 1-based
  bool point = false;    // collapsed arc: only its contact element is drawn
  double cx = 0, cy = 0, radius = 0;
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool ccw = true;       // direction from (x0,y0) to (x1,y1)
  double span = 0;       // radians, in (0, 2π)
};

struct ArrowDrawable {
  double x = 0, y = 0, dx = 0, dy = 0;  // (dx,dy) unit length
};

struct CircleDrawable {
  double cx = 0, cy = 0, radius = 0;
};

struct RenderScene {
  std::vector<ArcDrawable> arcs;
  std::vector<ArrowDrawable> arrows;
  std::vector<CircleDrawable> circles;
  std::vector<std::pair<double, double>> curve;  // optional reference polyline
  MobiusMatrix chart = MobiusMatrix::identity();
};

// Möbius move placing every edge circle, vertex and edge midpoint in the
// affine chart: the identity first, then w ↦ −1/(w−p) over a fixed grid of p.
std::optional<MobiusMatrix> choose_chart(const LegendrianPolygon& p);

// Throws Error(Unrepresentable) if some element of P leaves the chart.
RenderScene polygon_scene(const LegendrianPolygon& p);
// Scene for P drawn in a fixed chart (no search).
RenderScene polygon_scene_in_chart(const LegendrianPolygon& p, const MobiusMatrix& chart);

RenderScene circles_scene(const std::vector<CoorientedCircle>& circles);

// Pairs of arcs on non-adjacent edges that meet within tol.
std::vector<std::pair<std::size_t, std::size_t>> find_crossings(const RenderScene& scene, double tol = 1e-6);

std::string to_svg(const RenderScene& scene, double size = 600.0);

inline std::string render_polygon(const LegendrianPolygon& p) { return to_svg(polygon_scene(p)); }

}  // namespace legcirc
