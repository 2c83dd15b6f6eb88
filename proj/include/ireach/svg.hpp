#pragma once

#include <string>

#include "ireach/planar_set.hpp"

namespace ireach {

struct SvgStyle
{
  int width = 640;
  int height = 480;
  int arc_samples = 128;
  double point_radius = 4.0;
  double stroke_width = 2.0;
  std::string stroke = "#1f4e79";
  std::string fill = "#9dc3e6";
  std::string title;
};

/// Deterministic SVG of the first two coordinates: polygons as filled paths,
/// segments and arcs as polylines, points as circles, plus axes through the origin
/// (when visible) and a frame, fitted to the set's bounding box with a 5% margin.
std::string render_svg(const PlanarSet<double> & set, const SvgStyle & style = {});

/// Writes render_svg output; throws Error when the file cannot be written.
void write_svg(const PlanarSet<double> & set, const std::string & path, const SvgStyle & style = {});

}  // namespace ireach
