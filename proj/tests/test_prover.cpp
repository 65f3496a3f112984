#include <gtest/gtest.h>

#include <random>

#include "poolshot/corpus.hpp"
#include "poolshot/error.hpp"
#include "poolshot/prover.hpp"

using namespace poolshot;

namespace {

Square square(Rational cx, Rational cy, Rational r) { return {std::move(cx), std::move(cy), std::move(r)}; }

std::vector<Point2> box(Rational x0, Rational y0, Rational x1, Rational y1) {
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

std::shared_ptr<RegionSystem> orthic() { return region_system({1, 1, 1}, assign_angles({1, 1, 1}, Angle::X, Angle::Y)); }

double rand_in(std::mt19937& rng, const Rational& c, const Rational& r) {
  return c.get_d() + (2.0 * std::uniform_real_distribution<double>(0, 1)(rng) - 1) * r.get_d();
}

}  // namespace

TEST(Certify, OrthicSquares) {
  auto sys = orthic();
  EXPECT_TRUE(certify_square(*sys, square(60, 60, Rational(1, 10))).passed());
  CertifyResult bad = certify_square(*sys, square(30, 20, Rational(1, 10)));
  EXPECT_EQ(bad.verdict, Verdict::Fail);
  EXPECT_FALSE(bad.reason.empty());
  // straddles the right-angle boundary x + y = 90
  EXPECT_FALSE(certify_square(*sys, square(45, 45, 1)).passed());
}

TEST(Certify, PassingSquaresSatisfyEveryInequality) {
  auto corpus = corpus_codes(load_corpus(POOLSHOT_DATA_DIR "/strip_corpus.txt"));
  std::mt19937 rng(17);
  int passed = 0;
  for (int i = 0; i < 300 && passed < 25; ++i) {
    const auto& code = corpus[rng() % corpus.size()];
    auto [a, b] = assignment_choices()[rng() % 6];
    auto sys = region_system(code, assign_angles(code, a, b));
    if (sys->empty || sys->is_line() || sys->feasible.empty()) continue;
    // a small square around the centroid of the feasible polygon
    Rational cx(0), cy(0);
    for (const auto& p : sys->feasible) cx += p.x, cy += p.y;
    cx /= static_cast<long>(sys->feasible.size());
    cy /= static_cast<long>(sys->feasible.size());
    Square sq = square(cx, cy, Rational(1, 1000));
    CertifyResult res = certify_square(*sys, sq);
    if (!res.passed()) continue;
    ++passed;
    EXPECT_GT(res.margin, 0);
    auto ineqs = sys->all_inequalities();
    for (int k = 0; k < 20; ++k) {
      double x = rand_in(rng, sq.cx, sq.r), y = rand_in(rng, sq.cy, sq.r);
      for (const auto& f : ineqs) EXPECT_GT(eval_double(f.f, x, y), 0) << sys->name() << " " << f.label;
    }
  }
  EXPECT_GE(passed, 10);
}

TEST(Certify, MorePrecisionKeepsAPass) {
  auto sys = orthic();
  for (auto sq : {square(60, 60, Rational(1, 10)), square(50, 70, 1), square(Rational(301, 5), Rational(61), 2)}) {
    CertifyResult lo = certify_square(*sys, sq, Precision{7});
    ASSERT_TRUE(lo.passed());
    for (int d : {14, 21, 30}) {
      CertifyResult hi = certify_square(*sys, sq, Precision{d});
      EXPECT_TRUE(hi.passed()) << d;
      EXPECT_GE(hi.margin, lo.margin) << d;
    }
  }
}

TEST(Cover, TinySquareIsOneRecord) {
  auto res = cover(box(Rational(5999, 100), Rational(5999, 100), Rational(6001, 100), Rational(6001, 100)),
                   std::vector<CodeSequence>{{1, 1, 1}});
  ASSERT_TRUE(res.complete());
  ASSERT_EQ(res.records.size(), 1u);
  EXPECT_EQ(res.records[0].kind, RecordKind::Square);
  EXPECT_EQ(res.records[0].path, "");
  EXPECT_EQ(res.stats.squares, 1u);
}

TEST(Cover, EmptyCorpusFailsAtOnce) {
  auto res = cover(box(59, 59, 61, 61), std::vector<CodeSequence>{});
  EXPECT_FALSE(res.complete());
  ASSERT_EQ(res.records.size(), 1u);
  EXPECT_EQ(res.records[0].kind, RecordKind::Failure);
  EXPECT_THROW(cover({{0, 0}, {1, 1}, {2, 2}}, std::vector<CodeSequence>{{1, 1, 1}}), DomainError);
}

TEST(Cover, FailuresWhereNothingApplies) {
  CoverOptions opt;
  opt.max_depth = 3;
  // the orthic region stops at x + y = 90
  auto res = cover(box(40, 40, 50, 50), std::vector<CodeSequence>{{1, 1, 1}}, opt);
  EXPECT_FALSE(res.complete());
  EXPECT_GT(res.stats.squares, 0u);
  for (const auto& r : res.records)
    if (r.kind == RecordKind::Failure) EXPECT_EQ(r.path.size(), 3u);
}

class AcuteCover : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    target_ = new std::vector<Point2>{{50, 60}, {70, 55}, {65, 75}};
    CoverOptions opt;
    opt.max_depth = 8;
    result_ = new CoverResult(cover(*target_, std::vector<CodeSequence>{{1, 1, 1}, {1, 1, 1, 1, 2, 1, 1, 1, 1, 2}}, opt));
  }
  static void TearDownTestSuite() {
    delete result_;
    delete target_;
  }
  static std::vector<Point2>* target_;
  static CoverResult* result_;
};
std::vector<Point2>* AcuteCover::target_ = nullptr;
CoverResult* AcuteCover::result_ = nullptr;

TEST_F(AcuteCover, Completes) {
  EXPECT_TRUE(result_->complete());
  EXPECT_EQ(result_->stats.squares, result_->records.size());
  ASSERT_TRUE(result_->stats.min_margin);
  EXPECT_GT(*result_->stats.min_margin, 0);
}

TEST_F(AcuteCover, SameResultWithThreads) {
  CoverOptions opt;
  opt.max_depth = 8;
  opt.threads = 3;
  auto again = cover(*target_, std::vector<CodeSequence>{{1, 1, 1}, {1, 1, 1, 1, 2, 1, 1, 1, 1, 2}}, opt);
  EXPECT_EQ(again, *result_);
}

TEST_F(AcuteCover, FileRoundTrip) {
  std::string text = write_cover(*result_);
  EXPECT_EQ(parse_cover(text), *result_);
  EXPECT_EQ(write_cover(parse_cover(text)), text);
  EXPECT_THROW(parse_cover(text.substr(0, text.size() / 2) + "\nnonsense line\n"), ParseError);
  std::string svg = render_cover_svg(*result_);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
}

TEST_F(AcuteCover, SquaresTileTheTarget) {
  const Square root = bounding_square(*target_);
  std::vector<const CoverRecord*> recs;
  for (const auto& r : result_->records) {
    // the square is the one its path names
    Square s = root;
    for (char c : r.path) s = s.children().at(static_cast<size_t>(c - '0'));
    EXPECT_EQ(s, r.square) << r.path;
    recs.push_back(&r);
  }
  for (size_t i = 0; i + 1 < recs.size(); ++i)
    EXPECT_NE(recs[i + 1]->path.rfind(recs[i]->path, 0), 0u) << recs[i]->path << " is a prefix";
  // random points of the target fall in some square
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  int inside = 0;
  while (inside < 2000) {
    double a = u(rng), b = u(rng);
    if (a + b > 1) a = 1 - a, b = 1 - b;
    const auto& t = *target_;
    double x = t[0].x.get_d() + a * Rational(t[1].x - t[0].x).get_d() + b * Rational(t[2].x - t[0].x).get_d();
    double y = t[0].y.get_d() + a * Rational(t[1].y - t[0].y).get_d() + b * Rational(t[2].y - t[0].y).get_d();
    ++inside;
    bool hit = false;
    for (const auto* r : recs)
      if (std::abs(x - r->square.cx.get_d()) <= r->square.r.get_d() &&
          std::abs(y - r->square.cy.get_d()) <= r->square.r.get_d())
        hit = true;
    ASSERT_TRUE(hit) << x << "," << y;
  }
}

TEST(TripleRule, SyntheticCrossing) {
  const LineRegion diag = normalize_line(1, -1, 0);  // y = x
  TrigPoly s = parse_trig_poly("sin(x-y)");
  TrigPoly u = parse_trig_poly("2+cos(x)");
  HalfPlane left{1, -1, 0}, right{-1, 1, 0};
  std::vector<HalfPlane> bounds{{1, 0, 0}, {0, 1, 0}, {-1, -1, 180}};
  auto with = [&](HalfPlane h) {
    auto v = bounds;
    v.push_back(h);
    return v;
  };
  // f1 = sin(x - y) u is positive below the line, f2 = -sin(x - y) u above it
  auto r1 = synthetic_system("below", {make_inequality(product2(s, u))}, with(left));
  auto r2 = synthetic_system("above", {make_inequality(-product2(s, u))}, with(right));
  auto r3 = synthetic_system("on", {make_inequality(u)}, bounds, diag);

  TripleOutcome t = triple_rule(square(45, 45, 1), *r1, *r2, *r3);
  EXPECT_EQ(t.verdict, TripleVerdict::Pass) << t.reason;
  EXPECT_GT(t.margin, 0);
  EXPECT_EQ(triple_rule(square(60, 30, 1), *r1, *r2, *r3).verdict, TripleVerdict::NotApplicable);
  EXPECT_EQ(triple_rule(square(45, 45, 1), *r1, *r3, *r2).verdict, TripleVerdict::NotApplicable);

  // both sides claim the same sign: no conclusion
  auto r2same = synthetic_system("above", {make_inequality(product2(s, u))}, with(right));
  EXPECT_EQ(triple_rule(square(45, 45, 1), *r1, *r2same, *r3).verdict, TripleVerdict::Fail);
  // the square reaches past the region of r2
  auto r2small = synthetic_system("above", {make_inequality(-product2(s, u))},
                                  {{1, 0, 0}, {0, 1, 0}, {-1, 1, 0}, {0, -1, 45}});
  EXPECT_EQ(triple_rule(square(45, 45, 1), *r1, *r2small, *r3).verdict, TripleVerdict::Fail);
}

TEST(TripleRule, SharedFactorOfCorpusLikePolynomials) {
  const LineRegion diag = normalize_line(1, -1, 0);
  TrigPoly f = product2(parse_trig_poly("sin(x-y)"), parse_trig_poly("cos(3y)+2"));
  TrigPoly g = product2(parse_trig_poly("sin(x-y)"), parse_trig_poly("sin(x)-3"));
  auto sf = shared_line_factor(f, g, diag);
  ASSERT_TRUE(sf);
  EXPECT_EQ(sf->kind, TrigKind::Sin);
  for (double x : {20.0, 44.0})
    for (double y : {10.0, 50.0}) {
      double arg = (sf->m * x + sf->n * y) / sf->den * M_PI / 180;
      double factor = sf->kind == TrigKind::Sin ? std::sin(arg) : std::cos(arg);
      EXPECT_NEAR(eval_double(f, x, y), factor * eval_double(sf->u, x, y), 1e-9);
      EXPECT_NEAR(eval_double(g, x, y), factor * eval_double(sf->v, x, y), 1e-9);
    }
  EXPECT_FALSE(divide_by(parse_trig_poly("sin(x)"), TrigKind::Sin, 1, -1, 1));
}

TEST(Patterns, Examples) {
  auto a = infinite_pattern(10, 80);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->kind, PatternKind::PatternII);
  EXPECT_EQ(a->n, 1);
  EXPECT_EQ(a->code, (CodeSequence{1, 2, 1, 2}));
  auto b = infinite_pattern(4, 70);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->kind, PatternKind::PatternII);
  EXPECT_EQ(b->n, 9);
  EXPECT_EQ(b->code, (CodeSequence{1, 2, 1, 18}));
  // x = 45/4 on the middle of the first band
  auto c = infinite_pattern(Rational(45, 4), Rational(1215, 16));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, PatternKind::PatternI);
  EXPECT_EQ(c->n, 1);
  EXPECT_EQ(c->code, (CodeSequence{1, 1, 3, 1, 2, 1, 3, 1, 1, 6}));
  // 180 - 2y = 9, so (180 - 2y)/x = 1.8 lies below every band
  EXPECT_FALSE(infinite_pattern(5, Rational(171, 2)));
  EXPECT_FALSE(infinite_pattern(30, 30));
  for (long n = 1; n <= 6; ++n) {
    EXPECT_TRUE(is_legal_code(pattern_code(PatternKind::PatternI, n)));
    EXPECT_TRUE(is_legal_code(pattern_code(PatternKind::PatternII, n)));
  }
}

TEST(Patterns, CodesCertifyInsideTheirBands) {
  for (long n = 1; n <= 4; ++n) {
    Rational x = ratio(45, 2 * n + 2);
    Rational y = (180 - (Rational(2 * n + 3, 2)) * x) / 2;
    auto p = infinite_pattern(x, y);
    ASSERT_TRUE(p);
    ASSERT_EQ(p->kind, PatternKind::PatternI);
    auto sys = region_system(p->code, assign_angles(p->code, Angle::Z, Angle::Y));
    EXPECT_TRUE(certify_square(*sys, square(x, y, Rational(1, 100000))).passed()) << n;
  }
}
