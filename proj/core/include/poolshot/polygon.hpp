#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poolshot/rational.hpp"

namespace poolshot {

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

// a*x + b*y + c > 0
struct HalfPlane {
  Rational a, b, c;
  Rational value(const Point2& p) const { return a * p.x + b * p.y + c; }
};

// Clips a convex polygon (counterclockwise) to the closed half-plane value >= 0.
std::vector<Point2> clip(const std::vector<Point2>& poly, const HalfPlane& h);
std::vector<Point2> clip_all(std::vector<Point2> poly, const std::vector<HalfPlane>& hs);

Rational signed_area2(const std::vector<Point2>& poly);

// Half-planes of a convex polygon's interior (vertices counterclockwise).
std::vector<HalfPlane> interior_halfplanes(const std::vector<Point2>& poly);

// Makes the orientation counterclockwise.
std::vector<Point2> counterclockwise(std::vector<Point2> poly);

// Axis-aligned square with rational center and half side.
struct Square {
  Rational cx, cy, r;

  std::vector<Point2> corners() const;  // counterclockwise from lower left
  Point2 center() const { return {cx, cy}; }
  std::vector<Square> children() const;  // lower-left, lower-right, upper-left, upper-right
  friend bool operator==(const Square&, const Square&) = default;
};

// Part of the segment p-q where every half-plane value is >= 0.
std::optional<std::pair<Point2, Point2>> clip_segment(const Point2& p, const Point2& q,
                                                      const std::vector<HalfPlane>& hs);

// Smallest axis-aligned square containing the points.
Square bounding_square(const std::vector<Point2>& pts);

// Area of square intersect convex polygon is positive.
bool overlaps_with_area(const Square& sq, const std::vector<Point2>& convex_ccw);

// Segment of the line a*x + b*y = c inside the closed square, if any.
std::optional<std::pair<Point2, Point2>> line_in_square(const Rational& a, const Rational& b, const Rational& c,
                                                        const Square& sq);

}  // namespace poolshot
