#include "conway/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "conway/oracle.hpp"
#include "conway/predicates.hpp"
#include "conway/theorems.hpp"

namespace conway {

namespace {

std::string num(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

struct Canvas {
  std::ostringstream body;
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool first = true;

  // SVG y grows downward; the embedding has C above the x-axis, so flip.
  static double flip(double y) { return -y; }

  void grow(double x, double y) {
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    } else {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }

  void line(double x1, double y1, double x2, double y2, const char* style) {
    y1 = flip(y1);
    y2 = flip(y2);
    grow(x1, y1);
    grow(x2, y2);
    body << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
         << "\" y2=\"" << num(y2) << "\" " << style << "/>\n";
  }

  void circle(double cx, double cy, double r, const char* style) {
    cy = flip(cy);
    grow(cx - r, cy - r);
    grow(cx + r, cy + r);
    body << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r) << "\" "
         << style << "/>\n";
  }

  void dot(double cx, double cy, double r, const char* style) {
    cy = flip(cy);
    grow(cx - r, cy - r);
    grow(cx + r, cy + r);
    body << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r) << "\" "
         << style << "/>\n";
  }

  void text(double x, double y, double size, const std::string& label) {
    y = flip(y);
    grow(x, y);
    body << "  <text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << num(size)
         << "\" font-family=\"sans-serif\">" << label << "</text>\n";
  }
};

double dx(const CartPoint& p) { return p.x.to_double(); }
double dy(const CartPoint& p) { return p.y.to_double(); }

}  // namespace

std::string render_svg(const Configuration& cfg, const RenderOptions& options) {
  for (const BaryPoint& p : cfg.bary)
    if (!p.is_finite())
      throw Error(ErrorCode::PointAtInfinity, "cannot render a point at infinity");

  const Triangle& t = cfg.triangle;
  Canvas canvas;
  constexpr const char* kEdgeStyle = "stroke=\"black\" stroke-width=\"0.03\" fill=\"none\"";
  constexpr const char* kCircleStyle = "stroke=\"steelblue\" stroke-width=\"0.03\" fill=\"none\"";
  constexpr const char* kAntiStyle = "stroke=\"darkorange\" stroke-width=\"0.03\" fill=\"none\"";
  constexpr const char* kLineStyle = "stroke=\"seagreen\" stroke-width=\"0.03\" fill=\"none\"";
  constexpr const char* kPointStyle = "fill=\"crimson\"";
  constexpr const char* kVertexStyle = "fill=\"black\"";

  // Scale-dependent marker sizes keep small and large triangles legible.
  double span = std::max(t.c().to_double(), 1.0);
  double marker = 0.02 * span;
  double font = 0.06 * span;
  double offset = 0.03 * span;

  const CartPoint& va = cfg.frame.vertex_a;
  const CartPoint& vb = cfg.frame.vertex_b;
  const CartPoint& vc = cfg.frame.vertex_c;

  canvas.line(dx(va), dy(va), dx(vb), dy(vb), kEdgeStyle);
  canvas.line(dx(vb), dy(vb), dx(vc), dy(vc), kEdgeStyle);
  canvas.line(dx(vc), dy(vc), dx(va), dy(va), kEdgeStyle);

  if (options.conway_circle) {
    FamilyVerdict verdict = verify_family(t, cfg.triplet);
    if (!verdict.cocyclic)
      throw Error(ErrorCode::VerificationFailed,
                  "requested circle, but the six points are not concyclic about the incenter");
    CartPoint center = cfg.frame.to_cartesian(incenter(t));
    canvas.circle(dx(center), dy(center), std::sqrt(verdict.radius_sq->to_double()), kCircleStyle);
  }

  if (options.anti_circles) {
    constexpr int quads[3][3] = {{kAPrime, kASecond, kBPrime},
                                 {kBPrime, kBSecond, kCPrime},
                                 {kCPrime, kCSecond, kAPrime}};
    for (const auto& quad : quads) {
      std::array<CartPoint, 3> pts{cfg.cart[quad[0]], cfg.cart[quad[1]], cfg.cart[quad[2]]};
      BruteForceCircle fit = brute_force_circle(pts);
      canvas.circle(dx(fit.center), dy(fit.center), std::sqrt(fit.radius_sq.to_double()), kAntiStyle);
    }
  }

  if (options.dussau_lines) {
    constexpr int pairs[3][2] = {{kAPrime, kCSecond}, {kBPrime, kASecond}, {kCPrime, kBSecond}};
    for (const auto& pair : pairs) {
      const CartPoint& p = cfg.cart[pair[0]];
      const CartPoint& q = cfg.cart[pair[1]];
      // Extend the segment 25% past each defining point; same infinite line.
      double px = dx(p), py = dy(p), qx = dx(q), qy = dy(q);
      double ex = qx - px, ey = qy - py;
      canvas.line(px - 0.25 * ex, py - 0.25 * ey, qx + 0.25 * ex, qy + 0.25 * ey, kLineStyle);
    }
    CartPoint nagel_cart = cfg.frame.to_cartesian(nagel(t));
    canvas.dot(dx(nagel_cart), dy(nagel_cart), 1.5 * marker, "fill=\"seagreen\"");
    if (options.labels) canvas.text(dx(nagel_cart) + offset, dy(nagel_cart) + offset, font, "I");
  }

  const CartPoint* vertices[3] = {&va, &vb, &vc};
  const char* vertex_labels[3] = {"A", "B", "C"};
  for (int i = 0; i < 3; ++i) {
    canvas.dot(dx(*vertices[i]), dy(*vertices[i]), marker, kVertexStyle);
    if (options.labels)
      canvas.text(dx(*vertices[i]) + offset, dy(*vertices[i]) + offset, font, vertex_labels[i]);
  }
  for (int i = 0; i < 6; ++i) {
    canvas.dot(dx(cfg.cart[i]), dy(cfg.cart[i]), marker, kPointStyle);
    if (options.labels)
      canvas.text(dx(cfg.cart[i]) + offset, dy(cfg.cart[i]) + offset, font, point_label(i));
  }

  double width = canvas.max_x - canvas.min_x;
  double height = canvas.max_y - canvas.min_y;
  double margin = 0.05 * std::max(width, height);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(canvas.min_x - margin) << " "
      << num(canvas.min_y - margin) << " " << num(width + 2 * margin) << " " << num(height + 2 * margin)
      << "\">\n";
  out << canvas.body.str();
  out << "</svg>\n";
  return out.str();
}

}  // namespace conway
