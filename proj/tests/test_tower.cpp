#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "poolshot/corpus.hpp"
#include "poolshot/error.hpp"
#include "poolshot/tower.hpp"

using namespace poolshot;

namespace {

constexpr double kDeg = M_PI / 180;

struct Unfolded {
  Tower tower;
  ShootingVector w;
};

Unfolded run(const CodeSequence& code, Angle a, Angle b, Rational x, Rational y, int digits = 7) {
  AngleAssignment asg = assign_angles(code, a, b);
  Triangle tri(x, y);
  Tower t = unfold(code, asg, tri, Precision{digits});
  ShootingVector w = shooting_vector(code, asg, tri, t);
  return {std::move(t), std::move(w)};
}

size_t find_label(const SymbolicTower& t, int k, int j) {
  for (size_t i = 0; i < t.vertices.size(); ++i)
    if (t.vertices[i].label == VertexLabel{k, j}) return i;
  ADD_FAILURE() << "no vertex L(" << k << "," << j << ")";
  return 0;
}

}  // namespace

TEST(Unfold, SeedsAndWorkedCenter) {
  const double x = 50, y = 50, z = 80;
  Unfolded r = run({1, 1, 2, 3, 3, 2}, Angle::X, Angle::Y, 50, 50);
  const auto& t = r.tower.shape();
  auto pos = r.tower.float_positions();
  auto l1 = pos[find_label(t, 1, 0)], l2 = pos[find_label(t, 2, 0)], l3 = pos[find_label(t, 3, 0)];
  EXPECT_NEAR(l1[0], std::sin(y * kDeg), 1e-12);
  EXPECT_NEAR(l1[1], 0, 1e-12);
  EXPECT_NEAR(l2[0], 0, 1e-12);
  EXPECT_NEAR(l2[1], 0, 1e-12);
  EXPECT_NEAR(l3[0], std::sin(z * kDeg) * std::cos(x * kDeg), 1e-12);
  EXPECT_NEAR(l3[1], std::sin(z * kDeg) * std::sin(x * kDeg), 1e-12);
  // L(4,1) = L(4,0) + sin y (cos(Z-Y+X), sin(Z-Y+X))
  auto l4 = pos[find_label(t, 4, 0)], l41 = pos[find_label(t, 4, 1)];
  EXPECT_NEAR(l41[0] - l4[0], std::sin(y * kDeg) * std::cos((z - y + x) * kDeg), 1e-12);
  EXPECT_NEAR(l41[1] - l4[1], std::sin(y * kDeg) * std::sin((z - y + x) * kDeg), 1e-12);
  EXPECT_TRUE(r.tower.shape().vertices[find_label(t, 2, 0)].color == Color::Blue);
  EXPECT_TRUE(r.tower.shape().vertices[find_label(t, 1, 0)].color == Color::Black);
}

TEST(Unfold, IntervalsContainFloatPositions) {
  Unfolded r = run({1, 1, 2, 3, 3, 2}, Angle::X, Angle::Y, Rational(101, 2), Rational(100, 3), 14);
  auto pos = r.tower.float_positions();
  for (size_t i = 0; i < pos.size(); ++i) {
    EXPECT_NEAR(r.tower.positions[i].x.mid_double() / 2, pos[i][0], 1e-12);
    EXPECT_NEAR(r.tower.positions[i].y.mid_double() / 2, pos[i][1], 1e-12);
  }
}

TEST(Unfold, StructureOfFans) {
  CodeSequence code{1, 1, 2, 3, 3, 2};
  Unfolded r = run(code, Angle::X, Angle::Y, 50, 50);
  const auto& t = r.tower.shape();
  EXPECT_EQ(t.fans.size(), code.size());
  for (const auto& f : t.fans) EXPECT_LE(f.key_arc.size(), 4u);
  EXPECT_THROW(unfold(code, assign_angles(code, Angle::X, Angle::Y), Triangle(100, 80), Precision{7}), DomainError);
}

TEST(Unfold, OrthicTopParallelToBase) {
  Unfolded r = run({1, 1, 1, 1, 1, 1}, Angle::X, Angle::Y, 60, 60);
  EXPECT_TRUE(r.tower.parallel);
  const auto& t = r.tower.shape();
  auto pos = r.tower.float_positions();
  auto A0 = pos[t.base_blue], B0 = pos[t.base_black], An = pos[t.top_blue], Bm = pos[t.top_black];
  // the top is the base moved by one period
  EXPECT_NEAR(An[0] - A0[0], Bm[0] - B0[0], 1e-12);
  EXPECT_NEAR(An[1] - A0[1], Bm[1] - B0[1], 1e-12);
}

TEST(Unfold, EveryTriangleHasBothColours) {
  Unfolded r = run({1, 1, 2, 3, 3, 2}, Angle::X, Angle::Y, 50, 50);
  const auto& t = r.tower.shape();
  for (size_t i = 0; i < t.triangles.size(); ++i) {
    int blue = 0;
    for (size_t v : t.triangles[i]) blue += t.vertices[v].color == Color::Blue;
    EXPECT_TRUE(blue == 1 || blue == 2) << "triangle " << i;
    if (i == 0) continue;
    // the shared edge with the previous triangle has one endpoint of each colour
    std::vector<size_t> shared;
    for (size_t v : t.triangles[i])
      for (size_t u : t.triangles[i - 1])
        if (u == v) shared.push_back(v);
    ASSERT_EQ(shared.size(), 2u);
    EXPECT_NE(t.vertices[shared[0]].color, t.vertices[shared[1]].color);
  }
}

TEST(ShootingVector, SixCodeOnTheDiagonal) {
  Unfolded r = run({1, 1, 2, 3, 3, 2}, Angle::X, Angle::Y, 50, 50);
  EXPECT_FALSE(r.w.from_theta);
  TrigPoly c = parse_trig_poly(
      "-2sin(y)-sin(3y)+sin(5y)-sin(2x-7y)+sin(2x-5y)-sin(2x-y)+sin(2x+y)+sin(2x+3y)-sin(2x+7y)");
  TrigPoly d = parse_trig_poly("-cos(3y)+cos(5y)+cos(2x-7y)-cos(2x-5y)+cos(2x-y)-cos(2x+y)+cos(2x+3y)-cos(2x+7y)");
  EXPECT_EQ(eliminate_x(r.w.c_poly, -1, 0), eliminate_x(c, -1, 0));
  EXPECT_EQ(eliminate_x(r.w.d_poly, -1, 0), eliminate_x(d, -1, 0));
}

TEST(ShootingVector, ThetaFormForRightTriangle) {
  Unfolded r = run({1, 2, 1, 2}, Angle::Z, Angle::X, 30, 60);
  EXPECT_TRUE(r.w.from_theta);
  // theta = 2X + Y - 90 = 30
  EXPECT_NEAR(r.w.c.mid_double(), -std::cos(30 * kDeg), 1e-7);
  EXPECT_NEAR(r.w.d.mid_double(), std::sin(30 * kDeg), 1e-7);
}

TEST(ShootingVector, ThetaAndTowerAgreeForOrthic) {
  Unfolded r = run({1, 1, 1}, Angle::X, Angle::Y, 60, 60, 14);
  ShootingVector tw = tower_shooting_vector(r.tower);
  EXPECT_TRUE(r.w.from_theta);
  Interval cross = r.w.c * tw.d - r.w.d * tw.c;
  Interval dot = r.w.c * tw.c + r.w.d * tw.d;
  EXPECT_TRUE(cross.contains_zero());
  EXPECT_TRUE(dot.positive());
}

TEST(Tests, KnownPaths) {
  Unfolded orthic = run({1, 1, 1}, Angle::X, Angle::Y, 60, 60);
  EXPECT_EQ(test_I(orthic.tower, orthic.w).verdict, Verdict::Pass);
  EXPECT_EQ(test_II(orthic.tower, orthic.w).verdict, Verdict::Pass);
  Unfolded obtuse = run({1, 1, 1}, Angle::X, Angle::Y, 20, 30);
  EXPECT_EQ(test_I(obtuse.tower, obtuse.w).verdict, Verdict::Fail);
  Unfolded right = run({1, 2, 1, 2}, Angle::Z, Angle::X, 30, 60);
  EXPECT_EQ(test_I(right.tower, right.w).verdict, Verdict::Pass);
  EXPECT_EQ(test_II(right.tower, right.w).verdict, Verdict::Pass);
  EXPECT_EQ(test_III(right.tower, right.w).verdict, Verdict::Pass);
  Unfolded iso = run({2, 2}, Angle::X, Angle::Y, 50, 50);
  EXPECT_EQ(test_III(iso.tower, iso.w).verdict, Verdict::Pass);
  Unfolded off = run({2, 2}, Angle::X, Angle::Y, 40, 50);
  EXPECT_EQ(test_III(off.tower, off.w).verdict, Verdict::Fail);
}

TEST(Tests, WideFanIsAPreconditionError) {
  // 1 1 7 1 1 7 puts a fan of 7 angles on one vertex
  CodeSequence code{1, 1, 7, 1, 1, 7};
  ASSERT_TRUE(is_legal_code(code));
  Unfolded r = run(code, Angle::X, Angle::Y, 30, 30);
  EXPECT_FALSE(r.tower.fans_below_180);
  EXPECT_THROW(test_II(r.tower, r.w), PreconditionError);
  EXPECT_NO_THROW(test_I(r.tower, r.w));
  EXPECT_THROW(test_III(run({1, 1, 1}, Angle::X, Angle::Y, 60, 60).tower, r.w), PreconditionError);
}

TEST(Tests, HullSeparation) {
  Unfolded orthic = run({1, 1, 1}, Angle::X, Angle::Y, 60, 60);
  EXPECT_EQ(convex_hull_separation(orthic.tower), Verdict::Pass);
  Unfolded obtuse = run({1, 1, 1}, Angle::X, Angle::Y, 20, 30);
  EXPECT_EQ(convex_hull_separation(obtuse.tower), Verdict::Fail);
  // two reflections of a triangle form a rhombus split by its diagonal
  EXPECT_EQ(convex_hull_separation({{0, 0}, {1, 1}}, {{1, 0}, {0, 1}}, 1e-12), Verdict::Fail);
  EXPECT_EQ(convex_hull_separation({{0, 0}, {0, 1}}, {{1, 0}, {1, 1}}, 1e-12), Verdict::Pass);
}

TEST(Tests, SpecialSidesArePerpendicular) {
  for (auto [code, a, b, x, y] : std::vector<std::tuple<CodeSequence, Angle, Angle, int, int>>{
           {{1, 2, 1, 2}, Angle::Z, Angle::X, 30, 60},
           {{2, 2}, Angle::X, Angle::Y, 50, 50},
           {{1, 1, 1, 1, 2, 1, 1, 1, 1, 2}, Angle::X, Angle::Y, 70, 60}}) {
    Unfolded r = run(code, a, b, x, y);
    const auto& t = r.tower.shape();
    ASSERT_TRUE(t.special_fans) << format_code(code);
    auto pos = r.tower.float_positions();
    for (size_t f : {t.special_fans->first, t.special_fans->second}) {
      auto [u, v] = t.special_side(f);
      double ex = pos[v][0] - pos[u][0], ey = pos[v][1] - pos[u][1];
      EXPECT_NEAR(ex * r.w.c.mid_double() + ey * r.w.d.mid_double(), 0, 1e-7) << format_code(code);
    }
  }
}

TEST(Tests, TestTwoAgreesWithTestOne) {
  auto corpus = corpus_codes(load_corpus(POOLSHOT_DATA_DIR "/strip_corpus.txt"));
  std::mt19937 rng(5);
  int compared = 0;
  for (int i = 0; i < 2000 && compared < 120; ++i) {
    const auto& code = corpus[rng() % corpus.size()];
    auto [a, b] = assignment_choices()[rng() % 6];
    AngleAssignment asg = assign_angles(code, a, b);
    Rational x = ratio(static_cast<long>(rng() % 800) + 50, 20), y = ratio(static_cast<long>(rng() % 1400) + 50, 20);
    if (x + y >= 180) continue;
    Triangle tri(x, y);
    Tower t = unfold(code, asg, tri, Precision{14});
    if (!t.fans_below_180) continue;
    ShootingVector w = shooting_vector(code, asg, tri, t);
    Verdict v1 = test_I(t, w).verdict, v2 = test_II(t, w).verdict;
    if (v1 == Verdict::Indeterminate || v2 == Verdict::Indeterminate) continue;
    EXPECT_EQ(v1, v2) << format_code(code) << " " << asg.to_string() << " at " << to_string(x) << "," << to_string(y);
    ++compared;
  }
  EXPECT_GT(compared, 50);
}
