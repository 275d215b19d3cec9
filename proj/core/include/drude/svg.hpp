// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DRUDE_SVG_HPP
#define DRUDE_SVG_HPP

#include <string>
#include <vector>

#include "drude/types.hpp"

namespace drude::cli {

// Deterministic hand-emitted SVG 1.1 scatter plot in omega-plane
// coordinates. The vertical axis is flipped so Im increases upward; all
// numbers are rendered with fixed precision so the output is byte-stable
// for a fixed configuration. No timestamps are written.
class SvgPlot {
 public:
  SvgPlot(double re_min, double re_max, double im_min, double im_max,
          int width_px = 900);

  void polyline(const std::vector<Complex>& pts, const std::string& stroke,
                double stroke_width = 1.0);
  void segment(Complex a, Complex b, const std::string& stroke,
               double stroke_width = 1.0);
  void circle(Complex center, double radius_px, const std::string& fill);
  void cross(Complex center, double half_px, const std::string& stroke);
  void square(Complex center, double half_px, const std::string& fill);
  void axes(const std::string& stroke = "#cccccc");
  void label(Complex anchor, const std::string& text, const std::string& fill);

  std::string str() const;
  void write(const std::string& path) const;

 private:
  double to_x(double re) const;
  double to_y(double im) const;

  double re_min_, re_max_, im_min_, im_max_;
  int width_px_, height_px_;
  std::string body_;
};

}  // namespace drude::cli

#endif  // DRUDE_SVG_HPP
