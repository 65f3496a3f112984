#include <algorithm>
#include <cmath>
#include <sstream>

#include "poolshot/prover.hpp"
#include "poolshot/tower.hpp"

namespace poolshot {

namespace {

struct Box {
  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
  void add(double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
};

std::string hue(size_t i) {
  // golden-angle spread keeps neighbouring indices apart
  std::ostringstream os;
  os << "hsl(" << static_cast<int>(std::fmod(static_cast<double>(i) * 137.508, 360.0)) << ",60%,62%)";
  return os.str();
}

}  // namespace

std::string render_tower_svg(const Tower& tower, const ShootingVector* w, SvgOptions opt) {
  const auto& t = tower.shape();
  const auto pos = tower.float_positions();
  Box box;
  for (const auto& p : pos) box.add(p[0], p[1]);
  const double pad = 0.15 * std::max(box.x1 - box.x0, box.y1 - box.y0) + 1e-9;
  const double s = opt.scale;
  const double W = (box.x1 - box.x0 + 2 * pad) * s, H = (box.y1 - box.y0 + 2 * pad) * s;
  auto X = [&](double x) { return (x - box.x0 + pad) * s; };
  auto Y = [&](double y) { return (box.y1 + pad - y) * s; };

  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << " " << H << "\">\n";
  os << "<g fill=\"#f4f1e8\" stroke=\"#555\" stroke-width=\"1\">\n";
  for (const auto& tri : t.triangles) {
    os << "<polygon points=\"";
    for (size_t k : tri) os << X(pos[k][0]) << "," << Y(pos[k][1]) << " ";
    os << "\"/>\n";
  }
  os << "</g>\n";

  // fan arcs
  os << "<g fill=\"none\" stroke=\"#9a7\" stroke-width=\"1.5\">\n";
  for (const auto& f : t.fans) {
    if (f.arc.size() < 2) continue;
    os << "<polyline points=\"";
    for (size_t k : f.arc) os << X(pos[k][0]) << "," << Y(pos[k][1]) << " ";
    os << "\"/>\n";
  }
  os << "</g>\n";

  // straightened path: the band through the base midpoint along the shooting vector
  if (w != nullptr) {
    const double c = w->c.mid_double(), d = w->d.mid_double();
    const double len = std::hypot(c, d);
    if (len > 0) {
      const auto& a = pos[t.base_black];
      const auto& b = pos[t.base_blue];
      double mx = (a[0] + b[0]) / 2, my = (a[1] + b[1]) / 2;
      double reach = 2 * std::hypot(box.x1 - box.x0, box.y1 - box.y0);
      os << "<line x1=\"" << X(mx) << "\" y1=\"" << Y(my) << "\" x2=\"" << X(mx + reach * c / len) << "\" y2=\""
         << Y(my + reach * d / len) << "\" stroke=\"#c33\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
    }
  }

  for (size_t k = 0; k < t.vertices.size(); ++k) {
    const auto& v = t.vertices[k];
    const char* fill = v.color == Color::Blue ? "#2962c4" : "#111";
    os << "<circle cx=\"" << X(pos[k][0]) << "\" cy=\"" << Y(pos[k][1]) << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
    if (opt.labels && v.label.k > 0)
      os << "<text x=\"" << X(pos[k][0]) + 4 << "\" y=\"" << Y(pos[k][1]) - 4
         << "\" font-size=\"10\" font-family=\"sans-serif\">" << v.label.to_string() << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_cover_svg(const CoverResult& r, double size) {
  Box box;
  for (const auto& p : r.target) box.add(p.x.get_d(), p.y.get_d());
  const double span = std::max(box.x1 - box.x0, box.y1 - box.y0);
  const double pad = 0.05 * span;
  const double k = size / (span + 2 * pad);
  auto X = [&](double x) { return (x - box.x0 + pad) * k; };
  auto Y = [&](double y) { return (box.y1 + pad - y) * k; };
  const double W = (box.x1 - box.x0 + 2 * pad) * k, H = (box.y1 - box.y0 + 2 * pad) * k;

  std::ostringstream os;
  os.precision(4);
  os << std::fixed;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << " " << H << "\">\n";
  auto rect = [&](const Square& s, const std::string& fill) {
    double cx = s.cx.get_d(), cy = s.cy.get_d(), rr = s.r.get_d();
    os << "<rect x=\"" << X(cx - rr) << "\" y=\"" << Y(cy + rr) << "\" width=\"" << 2 * rr * k << "\" height=\""
       << 2 * rr * k << "\" fill=\"" << fill << "\" stroke=\"#0003\" stroke-width=\"0.2\"/>\n";
  };
  for (const auto& rec : r.records) {
    switch (rec.kind) {
      case RecordKind::Square: rect(rec.square, hue(r.systems.at(rec.system).code_index)); break;
      case RecordKind::Triple: rect(rec.square, "#888"); break;
      case RecordKind::Failure: rect(rec.square, "#e00"); break;
    }
  }
  os << "<polygon fill=\"none\" stroke=\"#000\" stroke-width=\"1\" points=\"";
  for (const auto& p : r.target) os << X(p.x.get_d()) << "," << Y(p.y.get_d()) << " ";
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace poolshot
