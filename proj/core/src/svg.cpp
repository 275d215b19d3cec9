// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#include "drude/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace drude::cli {

namespace {

std::string fmt(double v) {
  if (!std::isfinite(v)) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

SvgPlot::SvgPlot(double re_min, double re_max, double im_min, double im_max,
                 int width_px)
    : re_min_(re_min), re_max_(re_max), im_min_(im_min), im_max_(im_max),
      width_px_(width_px) {
  if (!(re_max_ > re_min_) || !(im_max_ > im_min_))
    throw InvalidInput("SvgPlot: empty plot window");
  height_px_ = static_cast<int>(
      std::lround(width_px_ * (im_max_ - im_min_) / (re_max_ - re_min_)));
  height_px_ = std::max(height_px_, 80);
}

double SvgPlot::to_x(double re) const {
  return (re - re_min_) / (re_max_ - re_min_) * width_px_;
}

double SvgPlot::to_y(double im) const {
  return (im_max_ - im) / (im_max_ - im_min_) * height_px_;
}

void SvgPlot::polyline(const std::vector<Complex>& pts, const std::string& stroke,
                       double stroke_width) {
  if (pts.size() < 2) return;
  body_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
           fmt(stroke_width) + "\" points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) body_ += ' ';
    body_ += fmt(to_x(pts[i].real())) + "," + fmt(to_y(pts[i].imag()));
  }
  body_ += "\"/>\n";
}

void SvgPlot::segment(Complex a, Complex b, const std::string& stroke,
                      double stroke_width) {
  body_ += "<line x1=\"" + fmt(to_x(a.real())) + "\" y1=\"" + fmt(to_y(a.imag())) +
           "\" x2=\"" + fmt(to_x(b.real())) + "\" y2=\"" + fmt(to_y(b.imag())) +
           "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(stroke_width) +
           "\"/>\n";
}

void SvgPlot::circle(Complex center, double radius_px, const std::string& fill) {
  body_ += "<circle cx=\"" + fmt(to_x(center.real())) + "\" cy=\"" +
           fmt(to_y(center.imag())) + "\" r=\"" + fmt(radius_px) + "\" fill=\"" +
           fill + "\"/>\n";
}

void SvgPlot::cross(Complex center, double half_px, const std::string& stroke) {
  const double x = to_x(center.real());
  const double y = to_y(center.imag());
  body_ += "<path d=\"M " + fmt(x - half_px) + " " + fmt(y - half_px) + " L " +
           fmt(x + half_px) + " " + fmt(y + half_px) + " M " + fmt(x - half_px) +
           " " + fmt(y + half_px) + " L " + fmt(x + half_px) + " " +
           fmt(y - half_px) + "\" stroke=\"" + stroke + "\" fill=\"none\"/>\n";
}

void SvgPlot::square(Complex center, double half_px, const std::string& fill) {
  const double x = to_x(center.real());
  const double y = to_y(center.imag());
  body_ += "<rect x=\"" + fmt(x - half_px) + "\" y=\"" + fmt(y - half_px) +
           "\" width=\"" + fmt(2 * half_px) + "\" height=\"" + fmt(2 * half_px) +
           "\" fill=\"" + fill + "\"/>\n";
}

void SvgPlot::axes(const std::string& stroke) {
  if (im_min_ < 0.0 && im_max_ > 0.0)
    segment({re_min_, 0.0}, {re_max_, 0.0}, stroke, 0.5);
  if (re_min_ < 0.0 && re_max_ > 0.0)
    segment({0.0, im_min_}, {0.0, im_max_}, stroke, 0.5);
}

void SvgPlot::label(Complex anchor, const std::string& text, const std::string& fill) {
  body_ += "<text x=\"" + fmt(to_x(anchor.real())) + "\" y=\"" +
           fmt(to_y(anchor.imag())) + "\" font-size=\"11\" fill=\"" + fill +
           "\">" + text + "</text>\n";
}

std::string SvgPlot::str() const {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
      std::to_string(width_px_) + "\" height=\"" + std::to_string(height_px_) +
      "\" viewBox=\"0 0 " + std::to_string(width_px_) + " " +
      std::to_string(height_px_) + "\">\n<rect width=\"100%\" height=\"100%\" " +
      "fill=\"white\"/>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

void SvgPlot::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("SvgPlot: cannot open '" + path + "' for writing");
  f << str();
  if (!f) throw Error("SvgPlot: write failed for '" + path + "'");
}

}  // namespace drude::cli
