#pragma once

#include <array>
#include <optional>
#include <vector>

#include "poolshot/sequences.hpp"
#include "poolshot/tower.hpp"

namespace poolshot {

// Floating-point billiard simulation. Not rigorous; a cross-check only.

// A point on a side and a heading. Sides run A->B (1), B->C (2), C->A (3),
// so the interior lies to the left; direction is measured counterclockwise
// from the side's own direction and lies in (0, 180).
struct RayState {
  int side = 1;
  double t = 0.5;
  double direction = 90;
};

struct TraceResult {
  SideSequence sides{{}, false};  // sides hit, in order
  bool vertex_hit = false;
  std::vector<std::array<double, 2>> points;  // start point, then each bounce
  RayState final_state;
};

struct TriangleGeometry {
  std::array<std::array<long double, 2>, 3> v;  // A, B, C
  long double diameter;
  explicit TriangleGeometry(const Triangle& tri);
  std::array<long double, 2> side_start(int side) const;
  std::array<long double, 2> side_end(int side) const;
};

TraceResult trace(const Triangle& tri, const RayState& start, int max_bounces);

struct OrbitResult {
  RayState start;
  std::pair<int, int> start_pair;  // first two sides of the side sequence
  double theta;                    // degrees between the path and the side, toward the first fan's vertex
  double residual;                 // closure distance over the triangle diameter
  SideSequence sides;
};

// Searches for a periodic path with the code; relabelings are tried in an
// order fixed by the seed.
std::optional<OrbitResult> find_orbit(const Triangle& tri, const CodeSequence& code, unsigned seed = 0);
// Only the labeling that realizes the given angle assignment.
std::optional<OrbitResult> find_orbit(const Triangle& tri, const CodeSequence& code, const AngleAssignment& asg);

}  // namespace poolshot
