#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "geonet/net.hpp"

namespace geonet {

struct RenderStyle {
  double canvas = 800;          // width and height of the drawing in px
  double stroke = 1.0;          // width of a multiplicity-1 edge, in px
  double marker_radius = 4.0;   // circle around boundary vertices, in px
  double interior_radius = 1.2; // dot at interior vertices, 0 hides them
  int decimals = 3;             // decimal places of emitted coordinates
  bool labels = false;          // write vertex ids next to boundary vertices
};

namespace detail {

inline std::string fixed(double v, int decimals) {
  if (std::fabs(v) < 0.5 * std::pow(10.0, -decimals)) v = 0.0;  // no "-0.000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// Draws the net as line elements; width grows with log2 of the multiplicity
/// so heavy multinets stay legible. The view box is the vertex bounding box
/// with a 5% margin; y points up as in the plane.
template <class Real>
std::string render_svg(const PlanarNet<Real>& net, const RenderStyle& style = {}) {
  if (net.vertex_count() == 0) throw Error(ErrorCode::invalid_argument, "cannot render an empty net");
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  for (const auto& v : net.vertices()) {
    auto p = to_double(v.position);
    x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
  }
  double span = std::max({x1 - x0, y1 - y0, 1e-12});
  double margin = 0.05 * span;
  double scale = style.canvas / (span + 2 * margin);
  auto X = [&](double x) { return (x - x0 + margin) * scale; };
  auto Y = [&](double y) { return (y1 - y + margin) * scale; };
  const int d = style.decimals;
  const double w = (x1 - x0 + 2 * margin) * scale, h = (y1 - y0 + 2 * margin) * scale;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fixed(w, 0) + "\" height=\"" + detail::fixed(h, 0) +
       "\" viewBox=\"0 0 " + detail::fixed(w, d) + " " + detail::fixed(h, d) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<g stroke=\"black\" stroke-linecap=\"round\">\n";
  for (const Edge& e : net.edges()) {
    auto a = to_double(net.vertex(e.a).position), b = to_double(net.vertex(e.b).position);
    double sw = style.stroke * (1 + std::log2(static_cast<double>(e.multiplicity)));
    s += "<line x1=\"" + detail::fixed(X(a.x), d) + "\" y1=\"" + detail::fixed(Y(a.y), d) + "\" x2=\"" +
         detail::fixed(X(b.x), d) + "\" y2=\"" + detail::fixed(Y(b.y), d) + "\" stroke-width=\"" + detail::fixed(sw, d) + "\"/>\n";
  }
  s += "</g>\n";
  if (style.interior_radius > 0) {
    s += "<g fill=\"black\">\n";
    for (const auto& v : net.vertices()) {
      if (v.kind != VertexKind::interior) continue;
      auto p = to_double(v.position);
      s += "<circle cx=\"" + detail::fixed(X(p.x), d) + "\" cy=\"" + detail::fixed(Y(p.y), d) + "\" r=\"" +
           detail::fixed(style.interior_radius, d) + "\"/>\n";
    }
    s += "</g>\n";
  }
  s += "<g fill=\"none\" stroke=\"red\">\n";
  for (const auto& v : net.vertices()) {
    if (v.kind != VertexKind::boundary) continue;
    auto p = to_double(v.position);
    s += "<circle cx=\"" + detail::fixed(X(p.x), d) + "\" cy=\"" + detail::fixed(Y(p.y), d) + "\" r=\"" +
         detail::fixed(style.marker_radius, d) + "\"/>\n";
  }
  s += "</g>\n";
  if (style.labels) {
    s += "<g font-family=\"sans-serif\" font-size=\"10\">\n";
    for (const auto& v : net.vertices()) {
      if (v.kind != VertexKind::boundary) continue;
      auto p = to_double(v.position);
      s += "<text x=\"" + detail::fixed(X(p.x) + style.marker_radius + 1, d) + "\" y=\"" + detail::fixed(Y(p.y), d) + "\">" +
           detail::xml_escape(v.id) + "</text>\n";
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace geonet
