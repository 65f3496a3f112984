#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "poolshot/classify.hpp"
#include "poolshot/numeric/trig_poly.hpp"
#include "poolshot/sequences.hpp"

namespace poolshot {

struct Triangle {
  Rational x, y;  // angles at A and B in degrees

  Triangle(Rational x_deg, Rational y_deg);
  Rational z() const { return 180 - x - y; }
  double xd() const { return x.get_d(); }
  double yd() const { return y.get_d(); }
  Point2 point() const { return {x, y}; }
};

enum class Color { Blue, Black };
enum class Family { A, B, C };

Color opposite(Color c);
char to_char(Family f);

// L_(k, j): k numbers the fan centers in order (L_1 = B0, L_2 = A0), j the
// intermediate vertices of the fan centered at L_k.
struct VertexLabel {
  int k = 0, j = 0;
  std::string to_string() const;
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

struct SymbolicVertex {
  // Coordinates times two, as sine/cosine sums in x and y.
  TrigPoly X2, Y2;
  // Coordinates are parent's plus the edge terms; -1 for the seeds.
  int parent = -1;
  TrigPoly edge_X2, edge_Y2;
  Color color;
  Family family;
  int generation = 0;
  Angle type;  // the triangle angle sitting at this vertex
  VertexLabel label;
};

struct Fan {
  size_t center;
  Angle symbol;
  int code;
  std::vector<size_t> arc;        // arc[j] for j = 0..code
  std::vector<size_t> key_arc;    // indices into arc
  Color center_color;
};

// The unfolded mirror-image sequence of a code, built symbolically.
struct SymbolicTower {
  CodeSequence code;   // even length; odd codes are doubled
  AngleAssignment asg;
  CodeType type;
  std::vector<SymbolicVertex> vertices;
  std::vector<Fan> fans;
  std::vector<std::array<size_t, 3>> triangles;
  size_t base_blue = 1, base_black = 0, top_blue = 0, top_black = 0;
  // CS/CNS: the two fans whose middle side the path meets at 90 degrees.
  std::optional<std::pair<size_t, size_t>> special_fans;

  // The side (center, middle arc vertex) of a special fan.
  std::pair<size_t, size_t> special_side(size_t fan) const;
};

std::shared_ptr<const SymbolicTower> build_tower(const CodeSequence& code, const AngleAssignment& asg);

struct IntervalPoint {
  Interval x, y;  // coordinates times two
};

// A tower evaluated at a triangle.
struct Tower {
  std::shared_ptr<const SymbolicTower> sym;
  Triangle tri;
  Precision precision;
  std::vector<IntervalPoint> positions;
  bool parallel;      // exact: the code closes up at this triangle
  bool fans_below_180;  // exact: every central angle below 180 degrees

  const SymbolicTower& shape() const { return *sym; }
  std::vector<size_t> blue_vertices() const;
  std::vector<size_t> black_vertices() const;
  std::vector<std::array<double, 2>> float_positions() const;  // true coordinates
};

Tower unfold(const CodeSequence& code, const AngleAssignment& asg, const Triangle& tri, Precision p);
Tower evaluate_tower(std::shared_ptr<const SymbolicTower> sym, const Triangle& tri, Precision p);

// Positions of every vertex at a point, accumulated along parents.
std::vector<IntervalPoint> evaluate_positions(const SymbolicTower& t, TrigEvaluator& ev);
std::vector<std::array<double, 2>> float_positions(const SymbolicTower& t, double x, double y);

struct ShootingVector {
  Interval c, d;
  TrigPoly c_poly, d_poly;
  bool from_theta = false;
};

// (-cos T, sin T) for CS, CNS and OSO; A0 -> An otherwise.
TrigPoly theta_direction_c(const AffineAngleForm& theta);
TrigPoly theta_direction_d(const AffineAngleForm& theta);
ShootingVector shooting_vector(const CodeSequence& code, const AngleAssignment& asg, const Triangle& tri,
                               const Tower& tower);
ShootingVector tower_shooting_vector(const Tower& tower);

enum class Verdict { Pass, Fail, Indeterminate };
std::string to_string(Verdict v);

struct TestOutcome {
  Verdict verdict;
  Rational margin;  // smallest lower bound of ad - bc met
  std::string reason;
  bool passed() const { return verdict == Verdict::Pass; }
};

TestOutcome test_I(const Tower& tower, const ShootingVector& w);
TestOutcome test_II(const Tower& tower, const ShootingVector& w);
TestOutcome test_III(const Tower& tower, const ShootingVector& w);

// Key points of the tower: per fan the ends of its two arcs, without A_n and B_m.
std::vector<size_t> key_points(const SymbolicTower& t, Color color);

Verdict convex_hull_separation(const Tower& tower);
Verdict convex_hull_separation(const std::vector<std::array<double, 2>>& blue,
                               const std::vector<std::array<double, 2>>& black, double slack);

struct SvgOptions {
  double scale = 200;
  bool labels = true;
};
std::string render_tower_svg(const Tower& tower, const ShootingVector* w = nullptr, SvgOptions opt = {});

}  // namespace poolshot
