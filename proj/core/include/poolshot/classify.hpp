#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poolshot/polygon.hpp"
#include "poolshot/rational.hpp"
#include "poolshot/sequences.hpp"

namespace poolshot {

// x*X + y*Y + c90*90 + theta*T in degrees, with Z written as 180 - X - Y.
struct AffineAngleForm {
  Rational x, y, c90;
  int theta = 0;

  static AffineAngleForm of(Angle a, const Rational& k = 1);
  static AffineAngleForm constant90(const Rational& k) { return {0, 0, k, 0}; }
  static AffineAngleForm shoot(int sign) { return {0, 0, 0, sign}; }

  AffineAngleForm& operator+=(const AffineAngleForm& o);
  AffineAngleForm& operator-=(const AffineAngleForm& o);
  friend AffineAngleForm operator+(AffineAngleForm a, const AffineAngleForm& b) { return a += b; }
  friend AffineAngleForm operator-(AffineAngleForm a, const AffineAngleForm& b) { return a -= b; }
  friend AffineAngleForm operator*(const Rational& k, const AffineAngleForm& a);
  AffineAngleForm operator-() const;
  friend bool operator==(const AffineAngleForm&, const AffineAngleForm&) = default;

  // Replaces T by the given theta-free form.
  AffineAngleForm substitute(const AffineAngleForm& theta_value) const;
  Rational value(const Rational& x_deg, const Rational& y_deg) const;  // requires theta == 0
  bool is_constant() const { return x == 0 && y == 0 && theta == 0; }
  std::string to_string() const;
};

enum class CodeType { CS, CNS, OSO, ONS, OSNO };
std::string to_string(CodeType t);
CodeType parse_code_type(const std::string& s);
bool is_stable_type(CodeType t);
bool theta_solvable(CodeType t);

struct StabilityDefect {
  long dX = 0, dY = 0, dZ = 0;
  bool stable() const { return dX == 0 && dY == 0 && dZ == 0; }
  friend bool operator==(const StabilityDefect&, const StabilityDefect&) = default;
};

// a*x + b*y = c*90, gcd-normalized with the first nonzero of (a, b) positive.
struct LineRegion {
  long a = 0, b = 0, c = 0;
  std::optional<std::pair<Point2, Point2>> segment;

  bool contains(const Point2& p) const { return Rational(a) * p.x + Rational(b) * p.y == Rational(c * 90); }
  std::string to_string() const;
  bool same_line(const LineRegion& o) const { return a == o.a && b == o.b && c == o.c; }
};

LineRegion normalize_line(long a, long b, long c);

// lower < form < upper, form free of T.
struct AngleConstraint {
  AffineAngleForm form;
  Rational lower, upper;
  std::string to_string() const;
};

struct BoundingPolygon {
  std::vector<AngleConstraint> constraints;
  std::optional<LineRegion> line;
  // counterclockwise vertices of the closure; two points for a line segment
  std::vector<Point2> vertices;

  std::vector<HalfPlane> halfplanes() const;
  bool empty() const;
  // strict satisfaction of every constraint (and the line, if any)
  bool contains(const Point2& p) const;
  bool contains_closure(const Point2& p) const;
};

StabilityDefect stability_defect(const CodeSequence& code, const AngleAssignment& asg);
std::optional<LineRegion> unstable_line(const StabilityDefect& d);

// CS/CNS pivot: rotation r at which the code reads E1 C1..Ck E2 Ck..C1.
std::optional<size_t> palindromic_pivot(const CodeSequence& code);
// Smallest odd block whose repetition gives the code.
std::optional<size_t> odd_period(const CodeSequence& code);

CodeType classify_code(const CodeSequence& code);

struct ReflectingAngle {
  size_t fan;     // 0-based
  int j;          // crossing index within the fan
  AffineAngleForm raw;    // theta_fan + j * U_fan
  AffineAngleForm acute;  // the angle constrained to (0, upper)
  Rational upper;         // 90, or 180 at the middle of an even fan
};

struct ShootingAngles {
  std::vector<AffineAngleForm> fan_first;  // k + 1 entries; the last is the wraparound
  std::vector<ReflectingAngle> reflecting;
};

ShootingAngles shooting_angle_sequence(const CodeSequence& code, const AngleAssignment& asg);
std::optional<AffineAngleForm> solve_theta(const CodeSequence& code, const AngleAssignment& asg);

// Rewrites a form on a line by eliminating y (or x when the line is vertical).
AffineAngleForm reduce_on_line(const AffineAngleForm& f, const LineRegion& line);

BoundingPolygon corner_bounding_polygon(const CodeSequence& code, const AngleAssignment& asg);
BoundingPolygon angle_bounding_polygon(const CodeSequence& code, const AngleAssignment& asg);

}  // namespace poolshot
