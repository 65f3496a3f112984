#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "poolshot/error.hpp"
#include "poolshot/numeric/trig_poly.hpp"

using namespace poolshot;

namespace {

const mpfr_prec_t kBits = Precision{7}.bits();

Interval iv(long a, long b) { return Interval(a, b, kBits); }

void expect_bounds(const Interval& v, const Rational& lo, const Rational& hi) {
  EXPECT_EQ(v.lower(), lo);
  EXPECT_EQ(v.upper(), hi);
}

Rational q(const char* s) { return parse_rational(s); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(q("37.5"), Rational(75, 2));
  EXPECT_EQ(q("-3/4"), Rational(-3, 4));
  EXPECT_EQ(q("1e-3"), Rational(1, 1000));
  EXPECT_EQ(q("0.0189"), Rational(189, 10000));  // leading zeros are decimal
  EXPECT_EQ(q("010/08"), Rational(5, 4));
  EXPECT_EQ(to_string(Rational(75, 2)), "37.5");
  EXPECT_EQ(to_string(Rational(1, 3)), "1/3");
  EXPECT_EQ(to_decimal_floor(Rational(2, 3), 4), "0.6666");
  EXPECT_EQ(to_decimal_floor(Rational(-2, 3), 4), "-0.6667");
  EXPECT_THROW(q("1/0"), ParseError);
  EXPECT_THROW(q("abc"), ParseError);
}

TEST(Rational, RatioIsReduced) {
  Rational r = ratio(90, 2);
  EXPECT_EQ(r, Rational(45));
  EXPECT_EQ(r.get_den(), 1);
  EXPECT_EQ(ratio(-6, -4), Rational(3, 2));
  EXPECT_THROW(ratio(1, 0), DomainError);
}

TEST(Interval, RingFormulas) {
  expect_bounds(iv(1, 2) + iv(3, 4), 4, 6);
  expect_bounds(iv(1, 2) - iv(3, 4), -3, -1);
  expect_bounds(iv(-1, 2) * iv(3, 4), -4, 8);
  expect_bounds(iv(-2, -1) * iv(-4, 3), -6, 8);
  expect_bounds(-iv(1, 2), -2, -1);
}

TEST(Interval, OutwardRounding) {
  Interval third = Interval::point(Rational(1, 3), kBits);
  EXPECT_TRUE(third.contains(Rational(1, 3)));
  EXPECT_LT(third.lower(), third.upper());
  Interval sum = third + third + third;
  EXPECT_TRUE(sum.contains(Rational(1)));
}

TEST(Enclose, PiHalfAtSevenDigits) {
  EXPECT_EQ(pi_half_lower(Precision{7}), q("1.57079631"));
  EXPECT_EQ(pi_half_upper(Precision{7}), q("1.57079637"));
  for (int d = 7; d < 30; ++d) {
    EXPECT_LE(pi_half_lower(Precision{d}), pi_half_lower(Precision{d + 1}));
    EXPECT_GE(pi_half_upper(Precision{d}), pi_half_upper(Precision{d + 1}));
  }
}

TEST(Enclose, SpecialAngles) {
  Interval c90 = enclose_cos({Rational(90)}, Precision{7});
  EXPECT_TRUE(c90.contains(Rational(0)));
  EXPECT_LE(c90.width(), Rational(1, 10000000));
  EXPECT_TRUE(enclose_sin({Rational(30)}, Precision{7}).contains(Rational(1, 2)));
  EXPECT_TRUE(enclose_sin({Rational(-390)}, Precision{7}).contains(Rational(-1, 2)));
  EXPECT_TRUE(enclose_cos({Rational(180)}, Precision{7}).contains(Rational(-1)));
}

TEST(Enclose, AgreesWithHighPrecision) {
  Interval lo = enclose_sin({q("13.7")}, Precision{7});
  Interval hi = enclose_sin({q("13.7")}, Precision{30});
  EXPECT_TRUE(lo.contains(hi));
  EXPECT_NEAR(lo.mid_double(), std::sin(13.7 * M_PI / 180), 1e-7);
}

TEST(Enclose, RaisingPrecisionNeverWidens) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    Rational a = ratio(static_cast<long>(rng() % 720000) - 360000, 1000);
    Interval prev = enclose_cos({a}, Precision{7});
    for (int d : {14, 21, 28}) {
      Interval next = enclose_cos({a}, Precision{d});
      EXPECT_TRUE(prev.contains(next)) << to_string(a) << " at " << d;
      prev = next;
    }
  }
}

TEST(TrigPoly, ParseAndPrint) {
  TrigPoly f = parse_trig_poly("-2sin(y)-sin(3y)+sin(5y)-sin(2x-7y)");
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(parse_trig_poly(f.to_string()), f);
  EXPECT_EQ(parse_trig_poly("1-cos(2y)"), TrigPoly::constant(1) - TrigPoly::term(TrigKind::Cos, {0, 2, 0}));
  // the first nonzero coefficient of the argument is kept positive
  EXPECT_EQ(parse_trig_poly("sin(-x+y)"), parse_trig_poly("-sin(x-y)"));
  EXPECT_EQ(parse_trig_poly("cos(-x+y)"), parse_trig_poly("cos(x-y)"));
  EXPECT_THROW(parse_trig_poly("sin(x"), ParseError);
}

TEST(TrigPoly, FoldsMultiplesOfNinety) {
  EXPECT_EQ(TrigPoly::term(TrigKind::Sin, {1, 0, 2}), parse_trig_poly("-sin(x)"));  // sin(x+180)
  EXPECT_EQ(TrigPoly::term(TrigKind::Cos, {1, 0, 1}), parse_trig_poly("-sin(x)"));  // cos(x+90)
  EXPECT_EQ(TrigPoly::term(TrigKind::Sin, {0, 0, 1}), TrigPoly::constant(1));
  EXPECT_TRUE(TrigPoly::term(TrigKind::Sin, {0, 0, 2}).is_zero());
}

TEST(Simplify, WorkedProducts) {
  // 2 sin z cos(x + 6y) with z = 180 - x - y
  SideTrigProduct p{1, LinearAngle{-1, -1, 2}, TrigKind::Cos, LinearAngle{1, 6, 0}};
  EXPECT_EQ(simplify({p}), parse_trig_poly("sin(2x+7y)-sin(5y)"));
  SideTrigProduct s{1, LinearAngle{0, 1, 0}, TrigKind::Sin, LinearAngle{0, 1, 0}};
  EXPECT_EQ(simplify({s}), parse_trig_poly("1-cos(2y)"));
  SideTrigProduct plain{3, std::nullopt, TrigKind::Cos, LinearAngle{1, 0, 0}};
  EXPECT_EQ(simplify({plain}), parse_trig_poly("6cos(x)"));
}

TEST(Simplify, AgreesWithDirectEvaluation) {
  std::mt19937 rng(11);
  auto lin = [&]() {
    return LinearAngle{static_cast<std::int64_t>(rng() % 9) - 4, static_cast<std::int64_t>(rng() % 9) - 4,
                       static_cast<std::int64_t>(rng() % 4)};
  };
  for (int k = 0; k < 200; ++k) {
    std::vector<SideTrigProduct> e;
    int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      SideTrigProduct p;
      p.coeff = static_cast<std::int64_t>(rng() % 5) - 2;
      if (rng() % 3) p.side = lin();
      p.kind = rng() % 2 ? TrigKind::Sin : TrigKind::Cos;
      p.angle = lin();
      e.push_back(p);
    }
    TrigPoly f = simplify(e);
    double x = 10 + static_cast<double>(rng() % 700) / 10, y = 5 + static_cast<double>(rng() % 600) / 10;
    double direct = 0;
    auto val = [](const LinearAngle& a, double xd, double yd) {
      return (static_cast<double>(a.m) * xd + static_cast<double>(a.n) * yd + 90.0 * static_cast<double>(a.c90)) *
             M_PI / 180;
    };
    for (const auto& p : e) {
      double sv = p.side ? std::sin(val(*p.side, x, y)) : 1.0;
      double tv = p.kind == TrigKind::Sin ? std::sin(val(p.angle, x, y)) : std::cos(val(p.angle, x, y));
      direct += 2 * static_cast<double>(p.coeff) * sv * tv;
    }
    EXPECT_NEAR(eval_double(f, x, y), direct, 1e-9) << f.to_string();
  }
}

TEST(Product2, MatchesPointwise) {
  TrigPoly f = parse_trig_poly("sin(x)+2cos(x-y)");
  TrigPoly g = parse_trig_poly("cos(3y)-sin(2x+y)");
  TrigPoly h = product2(f, g);
  for (double x : {12.5, 40.0, 71.0})
    for (double y : {3.0, 33.3, 88.0})
      EXPECT_NEAR(eval_double(h, x, y), 2 * eval_double(f, x, y) * eval_double(g, x, y), 1e-9);
}

TEST(Gradient, Examples) {
  EXPECT_EQ(gradient_bound(parse_trig_poly("sin(2x-7y)")).G, 9);
  EXPECT_EQ(gradient_bound(parse_trig_poly("-2sin(y)")).G, 2);
  TrigPoly d = parse_trig_poly("-cos(3y)+cos(5y)+cos(2x-7y)-cos(2x-5y)+cos(2x-y)-cos(2x+y)+cos(2x+3y)-cos(2x+7y)");
  EXPECT_EQ(gradient_bound(d).G, 44);
  // half-angle arguments halve the bound
  EXPECT_EQ(gradient_bound(TrigPoly::term(TrigKind::Sin, {1, 1, 0}, 1, 2)).G, 1);
}

TEST(Eval, Examples) {
  const Precision p{7};
  EXPECT_TRUE(eval(parse_trig_poly("sin(x)+sin(y)"), {Rational(30)}, {Rational(30)}, p).contains(Rational(1)));
  EXPECT_TRUE(eval(parse_trig_poly("cos(x+y)"), {Rational(45)}, {Rational(45)}, p).contains(Rational(0)));
  TrigPoly c = parse_trig_poly(
      "-2sin(y)-sin(3y)+sin(5y)-sin(2x-7y)+sin(2x-5y)-sin(2x-y)+sin(2x+y)+sin(2x+3y)-sin(2x+7y)");
  Interval lo = eval(c, {Rational(20)}, {Rational(20)}, p);
  Interval hi = eval(c, {Rational(20)}, {Rational(20)}, Precision{30});
  EXPECT_TRUE(lo.contains(hi));
}

TEST(Eval, EvaluatorMatchesFreeFunction) {
  TrigPoly f = parse_trig_poly("3sin(2x-y)-cos(x+4y)+1");
  TrigEvaluator ev(Rational(101, 3), Rational(47, 2), Precision{14});
  Interval a = ev.eval(f);
  Interval b = eval(f, {Rational(101, 3)}, {Rational(47, 2)}, Precision{14});
  EXPECT_TRUE(a.overlaps(b));
  EXPECT_NEAR(a.mid_double(), eval_double(f, 101.0 / 3, 23.5), 1e-12);
}

TEST(TrigPoly, EliminateX) {
  // on y = x: sin(4x - 5y) = -sin(y)
  EXPECT_EQ(eliminate_x(parse_trig_poly("sin(4x-5y)"), -1, 0), parse_trig_poly("-sin(y)"));
  // on x + y = 90: cos(x) = sin(y)
  EXPECT_EQ(eliminate_x(parse_trig_poly("cos(x)"), 1, 1), parse_trig_poly("sin(y)"));
}
