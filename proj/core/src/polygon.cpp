#include "poolshot/polygon.hpp"

#include <algorithm>

namespace poolshot {

std::vector<Point2> clip(const std::vector<Point2>& poly, const HalfPlane& h) {
  std::vector<Point2> out;
  const size_t n = poly.size();
  if (n == 0) return out;
  for (size_t i = 0; i < n; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % n];
    Rational vp = h.value(p), vq = h.value(q);
    if (vp >= 0) out.push_back(p);
    if ((vp > 0 && vq < 0) || (vp < 0 && vq > 0)) {
      Rational t = vp / (vp - vq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  // drop repeated vertices
  std::vector<Point2> dedup;
  for (auto& p : out)
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

std::vector<Point2> clip_all(std::vector<Point2> poly, const std::vector<HalfPlane>& hs) {
  for (const auto& h : hs) {
    poly = clip(poly, h);
    if (poly.empty()) break;
  }
  return poly;
}

Rational signed_area2(const std::vector<Point2>& poly) {
  Rational s = 0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

std::vector<Point2> counterclockwise(std::vector<Point2> poly) {
  if (signed_area2(poly) < 0) std::reverse(poly.begin(), poly.end());
  return poly;
}

std::vector<HalfPlane> interior_halfplanes(const std::vector<Point2>& poly) {
  std::vector<HalfPlane> hs;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % n];
    // left of p->q: (q-p) x (v-p) > 0
    Rational a = -(q.y - p.y), b = q.x - p.x;
    hs.push_back({a, b, -(a * p.x + b * p.y)});
  }
  return hs;
}

std::vector<Point2> Square::corners() const {
  return {{cx - r, cy - r}, {cx + r, cy - r}, {cx + r, cy + r}, {cx - r, cy + r}};
}

std::vector<Square> Square::children() const {
  Rational h = r / 2;
  return {{cx - h, cy - h, h}, {cx + h, cy - h, h}, {cx - h, cy + h, h}, {cx + h, cy + h, h}};
}

Square bounding_square(const std::vector<Point2>& pts) {
  Rational x0 = pts.at(0).x, x1 = x0, y0 = pts[0].y, y1 = y0;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  Rational r = std::max(x1 - x0, y1 - y0) / 2;
  return {(x0 + x1) / 2, (y0 + y1) / 2, r};
}

bool overlaps_with_area(const Square& sq, const std::vector<Point2>& convex_ccw) {
  auto clipped = clip_all(sq.corners(), interior_halfplanes(convex_ccw));
  return clipped.size() >= 3 && signed_area2(clipped) != 0;
}

std::optional<std::pair<Point2, Point2>> line_in_square(const Rational& a, const Rational& b, const Rational& c,
                                                        const Square& sq) {
  // parametrize the line and clip against the four sides
  Point2 p0;
  Point2 dir;
  if (b != 0) {
    p0 = {Rational(0), c / b};
    dir = {Rational(1), -a / b};
  } else if (a != 0) {
    p0 = {c / a, Rational(0)};
    dir = {Rational(0), Rational(1)};
  } else {
    return std::nullopt;
  }
  std::optional<Rational> tlo, thi;
  auto bound = [&](const Rational& p, const Rational& d, const Rational& lo, const Rational& hi) {
    if (d == 0) return p >= lo && p <= hi;
    Rational t1 = (lo - p) / d, t2 = (hi - p) / d;
    if (t1 > t2) std::swap(t1, t2);
    if (!tlo || t1 > *tlo) tlo = t1;
    if (!thi || t2 < *thi) thi = t2;
    return true;
  };
  if (!bound(p0.x, dir.x, sq.cx - sq.r, sq.cx + sq.r)) return std::nullopt;
  if (!bound(p0.y, dir.y, sq.cy - sq.r, sq.cy + sq.r)) return std::nullopt;
  if (!tlo || !thi || *tlo > *thi) return std::nullopt;
  Point2 s{p0.x + *tlo * dir.x, p0.y + *tlo * dir.y};
  Point2 e{p0.x + *thi * dir.x, p0.y + *thi * dir.y};
  return std::make_pair(s, e);
}

std::optional<std::pair<Point2, Point2>> clip_segment(const Point2& p, const Point2& q,
                                                      const std::vector<HalfPlane>& hs) {
  Rational t0 = 0, t1 = 1;
  for (const auto& h : hs) {
    Rational vp = h.value(p), vq = h.value(q);
    Rational d = vq - vp;
    if (d == 0) {
      if (vp < 0) return std::nullopt;
      continue;
    }
    Rational t = -vp / d;
    if (d > 0) t0 = std::max(t0, t);
    else t1 = std::min(t1, t);
  }
  if (t0 > t1) return std::nullopt;
  return std::make_pair(Point2{p.x + t0 * (q.x - p.x), p.y + t0 * (q.y - p.y)},
                        Point2{p.x + t1 * (q.x - p.x), p.y + t1 * (q.y - p.y)});
}

}  // namespace poolshot
