// Acceptance checks. Each criterion prints one PASS/FAIL line; with no
// arguments all of them run.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "poolshot/corpus.hpp"
#include "poolshot/oracle.hpp"
#include "poolshot/prover.hpp"

using namespace poolshot;

namespace {

const std::string kCorpus = POOLSHOT_DATA_DIR "/strip_corpus.txt";

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string point_str(const Rational& x, const Rational& y) { return "(" + to_string(x) + ", " + to_string(y) + ")"; }

void corpus_integrity(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  CorpusReport rep = verify_corpus(read_file(kCorpus));
  double t = seconds_since(t0);
  for (const auto& i : rep.issues) o.require(false, "line " + std::to_string(i.line) + ": " + i.message);
  o.require(rep.entries > 0, "no entries");
  o.require(t < 1, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail << rep.entries << " entries verified in " << t << " s";
}

void automaton_equivalence(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  long words = 0;
  for (int len = 1; len <= 12; ++len)
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::string w;
      for (int i = 0; i < len; ++i) w += (bits >> i & 1) ? 'E' : 'O';
      ++words;
      AlphabetSequence a{w};
      if (automaton_legal(a) != reduction_legal(a)) o.require(false, "disagree on " + w);
    }
  double t = seconds_since(t0);
  o.require(t < 10, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail << words << " words in " << t << " s";
}

struct Case {
  Tower tower;
  ShootingVector w;
};

Case unfold_case(const CodeSequence& code, Angle a, Angle b, Rational x, Rational y) {
  AngleAssignment asg = assign_angles(code, a, b);
  Triangle tri(x, y);
  Tower t = unfold(code, asg, tri, Precision{14});
  ShootingVector w = shooting_vector(code, asg, tri, t);
  return {std::move(t), std::move(w)};
}

void known_paths(Outcome& o) {
  Case orthic = unfold_case({1, 1, 1}, Angle::X, Angle::Y, 60, 60);
  o.require(test_I(orthic.tower, orthic.w).verdict == Verdict::Pass, "1 1 1 at (60,60) fails test I");
  o.require(test_II(orthic.tower, orthic.w).verdict == Verdict::Pass, "1 1 1 at (60,60) fails test II");
  Case iso = unfold_case({2, 2}, Angle::X, Angle::Y, 50, 50);
  o.require(test_II(iso.tower, iso.w).verdict == Verdict::Pass, "2 2 at (50,50) fails test II");
  o.require(test_III(iso.tower, iso.w).verdict == Verdict::Pass, "2 2 at (50,50) fails test III");
  Case obtuse = unfold_case({1, 1, 1}, Angle::X, Angle::Y, 20, 30);
  o.require(test_I(obtuse.tower, obtuse.w).verdict == Verdict::Fail, "1 1 1 at (20,30) does not fail test I");
  o.require(test_II(obtuse.tower, obtuse.w).verdict == Verdict::Fail, "1 1 1 at (20,30) does not fail test II");

  // right triangles: (30, 60) and nine more along x + y = 90
  const CodeSequence code{1, 2, 1, 2};
  const AngleAssignment asg = assign_angles(code, Angle::Z, Angle::X);
  const BoundingPolygon bp = angle_bounding_polygon(code, asg);
  const AffineAngleForm theta = *solve_theta(code, asg);
  std::vector<Point2> pts{{30, 60}};
  std::mt19937 rng(90);
  while (pts.size() < 10) {
    Rational t = ratio(static_cast<long>(rng() % 999) + 1, 1000);
    Point2 p{bp.vertices[0].x + t * (bp.vertices[1].x - bp.vertices[0].x),
             bp.vertices[0].y + t * (bp.vertices[1].y - bp.vertices[0].y)};
    if (bp.contains(p)) pts.push_back(p);
  }
  double worst = 0;
  for (const auto& p : pts) {
    Case c = unfold_case(code, Angle::Z, Angle::X, p.x, p.y);
    o.require(test_III(c.tower, c.w).verdict == Verdict::Pass, "1 2 1 2 fails the line test at " + point_str(p.x, p.y));
    auto orbit = find_orbit(Triangle(p.x, p.y), code, asg);
    if (!orbit) {
      o.require(false, "oracle finds no 1 2 1 2 path at " + point_str(p.x, p.y));
      continue;
    }
    double want = Rational(theta.x * p.x + theta.y * p.y + 90 * theta.c90).get_d();
    worst = std::max(worst, std::abs(want - orbit->theta));
  }
  o.require(worst < 1e-6, "theta differs from the oracle by " + std::to_string(worst));
  if (o.pass) o.detail << "10 right triangles, theta within " << worst << " degrees of the oracle";
}

void unstable_lines(Outcome& o) {
  struct Want {
    CodeSequence code;
    Angle a, b;
    long A, B, C;
    const char* name;
  };
  // A x + B y = 90 C
  for (const auto& w : std::vector<Want>{{{2, 2}, Angle::X, Angle::Y, 1, -1, 0, "Y=X"},
                                         {{1, 2, 1, 6}, Angle::Y, Angle::Z, 1, -1, -1, "Y=90+X"},
                                         {{1, 1, 2, 1, 3, 2}, Angle::X, Angle::Y, 2, -1, 0, "Y=2X"},
                                         {{1, 2, 1, 2}, Angle::Z, Angle::X, 1, 1, 1, "X+Y=90"}}) {
    auto line = unstable_line(stability_defect(w.code, assign_angles(w.code, w.a, w.b)));
    o.require(line && line->same_line(normalize_line(w.A, w.B, w.C)),
              format_code(w.code) + " gives " + (line ? line->to_string() : "no line") + ", expected " + w.name);
  }
  if (o.pass) o.detail << "4 lines match";
}

void theta_formulas(Outcome& o) {
  CodeSequence cs{1, 1, 1, 1, 2, 1, 1, 1, 1, 2};
  auto t1 = solve_theta(cs, assign_angles(cs, Angle::X, Angle::Y));
  o.require(t1 && *t1 == AffineAngleForm{1, 1, -1, 0}, "1 1 1 1 2 1 1 1 1 2 gives " + (t1 ? t1->to_string() : "none"));
  CodeSequence cns{1, 2, 1, 6};
  auto g = assign_angles(cns, Angle::Y, Angle::Z);
  auto t2 = solve_theta(cns, g);
  auto line = unstable_line(stability_defect(cns, g));
  bool ok = t2 && line && reduce_on_line(*t2, *line) == AffineAngleForm{-3, 0, 1, 0};
  o.require(ok, "1 2 1 6 gives " + (t2 ? t2->to_string() : "none"));
  if (o.pass) o.detail << "X+Y-90 and 90-3X";
}

void six_code_vector(Outcome& o) {
  const CodeSequence code{1, 1, 2, 3, 3, 2};
  const AngleAssignment asg = assign_angles(code, Angle::X, Angle::Y);
  Tower t = unfold(code, asg, Triangle(50, 50), Precision{7});
  ShootingVector w = tower_shooting_vector(t);
  const TrigPoly c = parse_trig_poly(
      "-2sin(y)-sin(3y)+sin(5y)-sin(2x-7y)+sin(2x-5y)-sin(2x-y)+sin(2x+y)+sin(2x+3y)-sin(2x+7y)");
  const TrigPoly d =
      parse_trig_poly("-cos(3y)+cos(5y)+cos(2x-7y)-cos(2x-5y)+cos(2x-y)-cos(2x+y)+cos(2x+3y)-cos(2x+7y)");
  o.require(c.size() == 9 && d.size() == 8, "reference sums do not have 9 and 8 terms");
  // restricted to y = x
  o.require(eliminate_x(w.c_poly, -1, 0) == eliminate_x(c, -1, 0),
            "c is " + eliminate_x(w.c_poly, -1, 0).to_string() + " on y=x");
  o.require(eliminate_x(w.d_poly, -1, 0) == eliminate_x(d, -1, 0),
            "d is " + eliminate_x(w.d_poly, -1, 0).to_string() + " on y=x");
  if (o.pass) o.detail << "c and d equal the reference sums on y=x";
}

void strip_cover(Outcome& o) {
  const std::vector<Point2> target{{Rational(75, 2), Rational(75, 2)}, {40, 40}, {Rational(25, 2), Rational(135, 2)},
                                   {Rational(15, 2), Rational(135, 2)}};
  CoverOptions opt;
  opt.precision = Precision{7};
  opt.max_depth = 20;
  auto t0 = std::chrono::steady_clock::now();
  CoverResult r = cover(target, corpus_codes(load_corpus(kCorpus)), opt);
  double t = seconds_since(t0);
  o.require(r.complete(), std::to_string(r.stats.failures) + " uncovered squares");
  o.require(r.stats.min_margin && *r.stats.min_margin > 0, "minimum margin not positive");
  o.require(r.stats.squares + r.stats.triples <= 200000, std::to_string(r.stats.squares) + " squares");
  o.require(t <= 1800, "took " + std::to_string(t) + " s");
  o.detail << (o.pass ? "" : "; ") << r.stats.squares << " squares, " << r.stats.triples << " triples, depth "
           << r.stats.max_depth << ", min margin "
           << (r.stats.min_margin ? to_decimal_floor(*r.stats.min_margin, 12) : "none") << ", " << t << " s";
}

void infinite_patterns(Outcome& o) {
  const Rational r(1, 100000);
  int ok = 0;
  for (long n = 1; n <= 10; ++n) {
    // Pattern I: inside (n+1)x + 2y < 180 < (n+2)x + 2y
    Rational x = ratio(45, 2 * n + 2);
    Rational y = (180 - Rational(2 * n + 3, 2) * x) / 2;
    CodeSequence code = pattern_code(PatternKind::PatternI, n);
    auto sys = region_system(code, assign_angles(code, Angle::Z, Angle::Y));
    CertifyResult c = certify_square(*sys, {x, y, r});
    o.require(c.passed(), "pattern I n=" + std::to_string(n) + " at " + point_str(x, y) + ": " + c.reason);
    ok += c.passed();
    // Pattern II: on (n+1)x + 2y = 180
    Rational x2 = ratio(45, n);
    Rational y2 = (180 - (n + 1) * x2) / 2;
    CodeSequence code2 = pattern_code(PatternKind::PatternII, n);
    auto sys2 = region_system(code2, assign_angles(code2, Angle::Z, n == 1 ? Angle::X : Angle::Y));
    CertifyResult c2 = certify_square(*sys2, {x2, y2, r});
    o.require(c2.passed(), "pattern II n=" + std::to_string(n) + " at " + point_str(x2, y2) + ": " + c2.reason);
    ok += c2.passed();
  }
  if (o.pass) o.detail << ok << " of 20 samples certify";
}

void interval_soundness(Outcome& o) {
  std::mt19937_64 rng(9);
  int bad = 0;
  for (int i = 0; i < 10000; ++i) {
    Rational a = ratio(static_cast<long>(rng() % 14400001) - 7200000, static_cast<long>(rng() % 9999) + 1);
    RationalAngle ang{a};
    bool sin = i % 2 == 0;
    Interval lo = sin ? enclose_sin(ang, Precision{7}) : enclose_cos(ang, Precision{7});
    Interval hi = sin ? enclose_sin(ang, Precision{30}) : enclose_cos(ang, Precision{30});
    if (!lo.contains(hi)) {
      if (++bad <= 3) o.require(false, (sin ? "sin " : "cos ") + to_string(a) + " at 7 digits misses the 30-digit value");
    }
  }
  o.require(bad == 0, std::to_string(bad) + " enclosures unsound");

  // dyadic endpoints keep every result representable, so the formulas hold exactly
  const mpfr_prec_t bits = Precision{7}.bits();
  auto dyadic = [&] { return ratio(static_cast<long>(rng() % (1 << 21)) - (1 << 20), 1 << 10); };
  int wrong = 0;
  for (int i = 0; i < 10000; ++i) {
    Rational a = dyadic(), b = dyadic(), c = dyadic(), d = dyadic();
    if (b < a) std::swap(a, b);
    if (d < c) std::swap(c, d);
    Interval p(a, b, bits), q(c, d, bits);
    Interval s = p + q, m = p - q, t = p * q;
    Rational ps[] = {a * c, a * d, b * c, b * d};
    Rational tlo = *std::min_element(std::begin(ps), std::end(ps)), thi = *std::max_element(std::begin(ps), std::end(ps));
    bool ok = s.lower() == a + c && s.upper() == b + d && m.lower() == a - d && m.upper() == b - c &&
              t.lower() == tlo && t.upper() == thi;
    if (!ok && ++wrong <= 3)
      o.require(false, "ring formulas fail for [" + to_string(a) + ", " + to_string(b) + "] and [" + to_string(c) +
                           ", " + to_string(d) + "]");
  }
  o.require(wrong == 0, std::to_string(wrong) + " ring results differ");
  if (o.pass) o.detail << "10000 enclosures and 10000 ring operations";
}

void gradient_soundness(Outcome& o) {
  std::mt19937 rng(13);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  std::uniform_real_distribution<double> u(-1, 1);
  int bad = 0;
  double worst = -1e300;
  for (int i = 0; i < 1000; ++i) {
    TrigPoly f;
    int den = pick(1, 2), terms = pick(1, 8);
    for (int k = 0; k < terms; ++k)
      f += TrigPoly::term(pick(0, 1) ? TrigKind::Sin : TrigKind::Cos, {pick(-9, 9), pick(-9, 9), pick(0, 3) * den},
                          pick(-5, 5), den);
    double G = gradient_bound(f).G.get_d();
    double cx = pick(0, 900) / 10.0, cy = pick(0, 900) / 10.0, r = std::pow(10.0, -pick(0, 4));
    for (int k = 0; k < 10; ++k) {
      double x1 = cx + r * u(rng), y1 = cy + r * u(rng), x2 = cx + r * u(rng), y2 = cy + r * u(rng);
      double dist = std::max(std::abs(x1 - x2), std::abs(y1 - y2)) * M_PI / 180;
      double var = std::abs(eval_double(f, x1, y1) - eval_double(f, x2, y2));
      double slack = 1e-12 * (1 + static_cast<double>(f.size()));
      worst = std::max(worst, var - G * dist);
      if (var > G * dist + slack && ++bad <= 3) o.require(false, f.to_string() + " varies beyond its bound");
    }
  }
  o.require(bad == 0, std::to_string(bad) + " violations");
  if (o.pass) o.detail << "10000 point pairs over 1000 polynomials within the bound";
}

void oracle_agreement(Outcome& o) {
  auto corpus = corpus_codes(load_corpus(kCorpus));
  std::mt19937 rng(1);
  int n = 0, passes = 0, excluded = 0;
  while (n < 200) {
    const auto& code = corpus[rng() % corpus.size()];
    auto [a, b] = assignment_choices()[rng() % 6];
    AngleAssignment asg = assign_angles(code, a, b);
    BoundingPolygon bp = angle_bounding_polygon(code, asg);
    if (bp.empty()) continue;
    Point2 p;
    if (bp.line) {
      Rational t = ratio(static_cast<long>(rng() % 999) + 1, 1000);
      p = {bp.vertices[0].x + t * (bp.vertices[1].x - bp.vertices[0].x),
           bp.vertices[0].y + t * (bp.vertices[1].y - bp.vertices[0].y)};
    } else {
      Rational x0 = bp.vertices[0].x, x1 = x0, y0 = bp.vertices[0].y, y1 = y0;
      for (const auto& v : bp.vertices) {
        x0 = std::min(x0, v.x), x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y), y1 = std::max(y1, v.y);
      }
      p = {x0 + ratio(static_cast<long>(rng() % 1000), 1000) * (x1 - x0),
           y0 + ratio(static_cast<long>(rng() % 1000), 1000) * (y1 - y0)};
    }
    if (!bp.contains(p)) continue;
    Triangle tri(p.x, p.y);
    Verdict v = Verdict::Indeterminate;
    for (int digits : {15, 30}) {
      Tower t = unfold(code, asg, tri, Precision{digits});
      v = test_II(t, shooting_vector(code, asg, tri, t)).verdict;
      if (v != Verdict::Indeterminate) break;
    }
    if (v == Verdict::Indeterminate) {
      ++excluded;
      continue;
    }
    ++n;
    bool found = find_orbit(tri, code, asg).has_value();
    passes += v == Verdict::Pass;
    if ((v == Verdict::Pass) != found)
      o.require(false, format_code(code) + " " + asg.to_string() + " at " + point_str(p.x, p.y) + ": test II " +
                           to_string(v) + ", oracle " + (found ? "found" : "none"));
  }
  if (o.pass) o.detail << "200 samples agree (" << passes << " paths, " << excluded << " indeterminate excluded)";
}

const std::map<int, std::pair<const char*, std::function<void(Outcome&)>>> kCriteria{
    {1, {"corpus integrity", corpus_integrity}},
    {2, {"automaton equivalence", automaton_equivalence}},
    {3, {"known paths", known_paths}},
    {4, {"unstable lines", unstable_lines}},
    {5, {"theta formulas", theta_formulas}},
    {6, {"six-code shooting vector", six_code_vector}},
    {7, {"strip cover", strip_cover}},
    {8, {"infinite patterns", infinite_patterns}},
    {9, {"interval soundness", interval_soundness}},
    {10, {"gradient soundness", gradient_soundness}},
    {11, {"oracle agreement", oracle_agreement}},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (const auto& [k, v] : kCriteria) which.push_back(k);
  bool all = true;
  for (int k : which) {
    auto it = kCriteria.find(k);
    if (it == kCriteria.end()) {
      std::fprintf(stderr, "unknown criterion %d\n", k);
      return 2;
    }
    Outcome o;
    try {
      it->second.second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %d %s: %s (%s)\n", k, it->second.first, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
