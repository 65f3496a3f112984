#include "poolshot/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "poolshot/error.hpp"

namespace poolshot {

AffineAngleForm AffineAngleForm::of(Angle a, const Rational& k) {
  switch (a) {
    case Angle::X: return {k, 0, 0, 0};
    case Angle::Y: return {0, k, 0, 0};
    default: return {-k, -k, 2 * k, 0};
  }
}

AffineAngleForm& AffineAngleForm::operator+=(const AffineAngleForm& o) {
  x += o.x;
  y += o.y;
  c90 += o.c90;
  theta += o.theta;
  return *this;
}

AffineAngleForm& AffineAngleForm::operator-=(const AffineAngleForm& o) {
  x -= o.x;
  y -= o.y;
  c90 -= o.c90;
  theta -= o.theta;
  return *this;
}

AffineAngleForm operator*(const Rational& k, const AffineAngleForm& a) {
  if (a.theta != 0 && k != 1 && k != -1) throw DomainError("theta coefficient must stay in {-1, 0, 1}");
  return {k * a.x, k * a.y, k * a.c90, a.theta == 0 ? 0 : (k > 0 ? a.theta : -a.theta)};
}

AffineAngleForm AffineAngleForm::operator-() const { return {-x, -y, -c90, -theta}; }

AffineAngleForm AffineAngleForm::substitute(const AffineAngleForm& t) const {
  if (t.theta != 0) throw DomainError("theta value must be free of theta");
  AffineAngleForm out{x, y, c90, 0};
  if (theta != 0) out += Rational(theta) * t;
  return out;
}

Rational AffineAngleForm::value(const Rational& xd, const Rational& yd) const {
  if (theta != 0) throw DomainError("cannot evaluate a form containing theta");
  return x * xd + y * yd + c90 * 90;
}

std::string AffineAngleForm::to_string() const {
  std::vector<std::pair<Rational, std::string>> parts;
  if (x != 0) parts.push_back({x, "X"});
  if (y != 0) parts.push_back({y, "Y"});
  if (theta != 0) parts.push_back({Rational(theta), "T"});
  Rational k = c90 * 90;
  if (k != 0) {
    if (!parts.empty() && parts.front().first < 0 && k > 0) parts.insert(parts.begin(), {k, ""});
    else parts.push_back({k, ""});
  }
  if (parts.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    const auto& [c, v] = parts[i];
    bool neg = c < 0;
    Rational a = abs(c);
    if (i == 0) s += neg ? "-" : "";
    else s += neg ? "-" : "+";
    if (v.empty()) s += poolshot::to_string(a);
    else {
      if (a != 1) s += poolshot::to_string(a);
      s += v;
    }
  }
  return s;
}

std::string to_string(CodeType t) {
  switch (t) {
    case CodeType::CS: return "CS";
    case CodeType::CNS: return "CNS";
    case CodeType::OSO: return "OSO";
    case CodeType::ONS: return "ONS";
    default: return "OSNO";
  }
}

CodeType parse_code_type(const std::string& s) {
  if (s == "CS") return CodeType::CS;
  if (s == "CNS") return CodeType::CNS;
  if (s == "OSO") return CodeType::OSO;
  if (s == "ONS") return CodeType::ONS;
  if (s == "OSNO") return CodeType::OSNO;
  throw ParseError("unknown code type '" + s + "'");
}

bool is_stable_type(CodeType t) { return t == CodeType::CS || t == CodeType::OSO || t == CodeType::OSNO; }
bool theta_solvable(CodeType t) { return t == CodeType::CS || t == CodeType::CNS || t == CodeType::OSO; }

LineRegion normalize_line(long a, long b, long c) {
  long g = std::gcd(std::gcd(std::labs(a), std::labs(b)), std::labs(c));
  if (g == 0) return {};
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c, std::nullopt};
}

std::string LineRegion::to_string() const {
  AffineAngleForm lhs{a, b, 0, 0};
  return lhs.to_string() + " = " + poolshot::to_string(Rational(c * 90));
}

std::string AngleConstraint::to_string() const {
  return poolshot::to_string(lower) + " < " + form.to_string() + " < " + poolshot::to_string(upper);
}

namespace {

// lower < a*x + b*y < upper
struct Canon {
  Rational a, b, lower, upper;
};

std::optional<Canon> canonical(const AngleConstraint& c) {
  Rational a = c.form.x, b = c.form.y;
  Rational lo = c.lower - c.form.c90 * 90, hi = c.upper - c.form.c90 * 90;
  if (a == 0 && b == 0) return std::nullopt;
  Rational lead = a != 0 ? a : b;
  if (lead > 0) return Canon{a / lead, b / lead, lo / lead, hi / lead};
  Rational m = -lead;
  return Canon{-a / m, -b / m, -hi / m, -lo / m};
}

std::vector<AngleConstraint> base_constraints() {
  return {{AffineAngleForm::of(Angle::X), 0, 180},
          {AffineAngleForm::of(Angle::Y), 0, 180},
          {AffineAngleForm::of(Angle::Z), 0, 180}};
}

std::vector<Point2> domain_triangle() {
  return {{Rational(0), Rational(0)}, {Rational(180), Rational(0)}, {Rational(0), Rational(180)}};
}

BoundingPolygon finish(std::vector<AngleConstraint> raw, std::optional<LineRegion> line, bool infeasible) {
  BoundingPolygon poly;
  poly.line = line;
  // merge constraints with identical direction
  std::vector<Canon> merged;
  for (const auto& c : raw) {
    auto k = canonical(c);
    if (!k) {
      Rational v = c.form.c90 * 90;
      if (!(c.lower < v && v < c.upper)) infeasible = true;
      continue;
    }
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Canon& m) { return m.a == k->a && m.b == k->b; });
    if (it == merged.end()) merged.push_back(*k);
    else {
      it->lower = std::max(it->lower, k->lower);
      it->upper = std::min(it->upper, k->upper);
    }
  }
  for (const auto& m : merged) poly.constraints.push_back({{m.a, m.b, 0, 0}, m.lower, m.upper});
  if (infeasible) {
    poly.constraints.push_back({{0, 0, 0, 0}, 1, 0});
    return poly;
  }
  std::vector<Point2> v = clip_all(domain_triangle(), poly.halfplanes());
  if (!line) {
    poly.vertices = v;
    return poly;
  }
  Square box{90, 90, 90};
  auto seg = line_in_square(Rational(line->a), Rational(line->b), Rational(line->c * 90), box);
  if (seg) {
    // clip the segment to the polygon
    Point2 p = seg->first, q = seg->second;
    Rational t0 = 0, t1 = 1;
    bool ok = true;
    for (const auto& h : poly.halfplanes()) {
      Rational vp = h.value(p), vq = h.value(q);
      // value(t) = vp + t (vq - vp) >= 0
      Rational d = vq - vp;
      if (d == 0) {
        if (vp < 0) ok = false;
      } else {
        Rational t = -vp / d;
        if (d > 0) t0 = std::max(t0, t);
        else t1 = std::min(t1, t);
      }
    }
    if (ok && t0 <= t1) {
      Point2 s{p.x + t0 * (q.x - p.x), p.y + t0 * (q.y - p.y)};
      Point2 e{p.x + t1 * (q.x - p.x), p.y + t1 * (q.y - p.y)};
      poly.vertices = {s, e};
      poly.line->segment = std::make_pair(s, e);
    }
  }
  return poly;
}

}  // namespace

std::vector<HalfPlane> BoundingPolygon::halfplanes() const {
  std::vector<HalfPlane> hs;
  for (const auto& c : constraints) {
    Rational k = c.form.c90 * 90;
    hs.push_back({c.form.x, c.form.y, k - c.lower});
    hs.push_back({-c.form.x, -c.form.y, c.upper - k});
  }
  return hs;
}

bool BoundingPolygon::empty() const {
  if (line) return vertices.size() < 2 || vertices[0] == vertices[1];
  return vertices.size() < 3 || signed_area2(vertices) == 0;
}

bool BoundingPolygon::contains(const Point2& p) const {
  if (line && !line->contains(p)) return false;
  for (const auto& h : halfplanes())
    if (h.value(p) <= 0) return false;
  return true;
}

bool BoundingPolygon::contains_closure(const Point2& p) const {
  if (line && !line->contains(p)) return false;
  for (const auto& h : halfplanes())
    if (h.value(p) < 0) return false;
  return true;
}

StabilityDefect stability_defect(const CodeSequence& code, const AngleAssignment& asg) {
  if (asg.size() != code.size()) throw DomainError("assignment length differs from code length");
  CodeSequence c = doubled_if_odd(code);
  StabilityDefect d;
  for (size_t i = 0; i < c.size(); ++i) {
    long v = i % 2 == 0 ? c[i] : -c[i];
    switch (asg[i]) {
      case Angle::X: d.dX += v; break;
      case Angle::Y: d.dY += v; break;
      default: d.dZ += v; break;
    }
  }
  return d;
}

std::optional<LineRegion> unstable_line(const StabilityDefect& d) {
  if (d.stable()) return std::nullopt;
  return normalize_line(d.dX - d.dZ, d.dY - d.dZ, -2 * d.dZ);
}

std::optional<size_t> palindromic_pivot(const CodeSequence& code) {
  const size_t k = code.size();
  if (k % 2 != 0) return std::nullopt;
  const size_t h = k / 2;
  for (size_t r = 0; r < k; ++r) {
    auto at = [&](size_t i) { return code[(r + i) % k]; };
    if (at(0) % 2 != 0 || at(h) % 2 != 0) continue;
    bool pal = true;
    for (size_t i = 0; i + 1 < h && pal; ++i) pal = at(1 + i) == at(k - 1 - i);
    if (pal) return r;
  }
  return std::nullopt;
}

std::optional<size_t> odd_period(const CodeSequence& code) {
  const size_t k = code.size();
  if (k % 2 == 1) return k;
  for (size_t p = 1; p < k; p += 2) {
    if (k % p != 0) continue;
    bool periodic = true;
    for (size_t i = p; i < k && periodic; ++i) periodic = code[i] == code[i - p];
    if (periodic && is_legal_code(CodeSequence(code.begin(), code.begin() + static_cast<long>(p)))) return p;
  }
  return std::nullopt;
}

CodeType classify_code(const CodeSequence& code) {
  require_legal_code(code);
  if (odd_period(code)) return CodeType::OSO;
  AngleAssignment asg = assign_angles(code, Angle::X, Angle::Y);
  bool stable = stability_defect(code, asg).stable();
  bool shape = palindromic_pivot(code).has_value();
  if (shape) return stable ? CodeType::CS : CodeType::CNS;
  return stable ? CodeType::OSNO : CodeType::ONS;
}

ShootingAngles shooting_angle_sequence(const CodeSequence& code, const AngleAssignment& asg) {
  const size_t k = code.size();
  if (asg.size() != k) throw DomainError("assignment length differs from code length");
  ShootingAngles out;
  out.fan_first.push_back(AffineAngleForm::shoot(1));
  for (size_t i = 0; i < k; ++i) {
    const AffineAngleForm t = out.fan_first[i];
    out.fan_first.push_back(AffineAngleForm::constant90(2) - t - AffineAngleForm::of(asg[i], code[i]));
    const int c = code[i];
    const int half = c / 2;
    for (int j = 0; j < c; ++j) {
      AffineAngleForm raw = t + AffineAngleForm::of(asg[i], j);
      ReflectingAngle ra{i, j, raw, raw, 90};
      bool below = c % 2 == 1 ? j <= half : j < half;
      if (c % 2 == 0 && j == half) {
        ra.upper = 180;
      } else if (!below) {
        ra.acute = AffineAngleForm::constant90(2) - raw;
      }
      out.reflecting.push_back(ra);
    }
  }
  return out;
}

std::optional<AffineAngleForm> solve_theta(const CodeSequence& code, const AngleAssignment& asg) {
  const size_t k = code.size();
  if (auto p = odd_period(code); p) {
    CodeSequence block(code.begin(), code.begin() + static_cast<long>(*p));
    AngleAssignment basg{std::vector<Angle>(asg.symbols.begin(), asg.symbols.begin() + static_cast<long>(*p))};
    ShootingAngles s = shooting_angle_sequence(block, basg);
    const AffineAngleForm& w = s.fan_first[*p];  // -T + A
    AffineAngleForm a = w;
    a.theta = 0;
    return Rational(1, 2) * a;
  }
  auto r = palindromic_pivot(code);
  if (!r) return std::nullopt;
  (void)k;
  ShootingAngles s = shooting_angle_sequence(code, asg);
  const AffineAngleForm& f = s.fan_first[*r];
  int e = code[*r];
  AffineAngleForm a = f;
  a.theta = 0;
  AffineAngleForm rhs = AffineAngleForm::constant90(1) - AffineAngleForm::of(asg[*r], e / 2) - a;
  return Rational(f.theta) * rhs;
}

AffineAngleForm reduce_on_line(const AffineAngleForm& f, const LineRegion& line) {
  if (line.b != 0) {
    Rational b(line.b);
    return {f.x - f.y * Rational(line.a) / b, 0, f.c90 + f.y * Rational(line.c) / b, f.theta};
  }
  if (line.a != 0) return {0, f.y, f.c90 + f.x * Rational(line.c) / Rational(line.a), f.theta};
  return f;
}

BoundingPolygon corner_bounding_polygon(const CodeSequence& code, const AngleAssignment& asg) {
  std::map<Angle, int> top;
  for (size_t i = 0; i < code.size(); ++i) top[asg[i]] = std::max(top[asg[i]], code[i]);
  std::vector<AngleConstraint> cs = base_constraints();
  for (auto [w, n] : top) cs.push_back({AffineAngleForm::of(w, n), 0, 180});
  return finish(cs, std::nullopt, false);
}

BoundingPolygon angle_bounding_polygon(const CodeSequence& code, const AngleAssignment& asg) {
  const CodeType type = classify_code(code);
  std::optional<LineRegion> line;
  if (!is_stable_type(type)) line = unstable_line(stability_defect(code, asg));
  CodeSequence walk = code;
  AngleAssignment wasg = asg;
  if (auto p = odd_period(code); p && *p < code.size()) {
    walk.assign(code.begin(), code.begin() + static_cast<long>(*p));
    wasg.symbols.assign(asg.symbols.begin(), asg.symbols.begin() + static_cast<long>(*p));
  }
  ShootingAngles s = shooting_angle_sequence(walk, wasg);
  std::vector<AngleConstraint> cs = base_constraints();
  bool infeasible = false;
  if (auto theta = solve_theta(code, asg); theta) {
    for (const auto& ra : s.reflecting) {
      AffineAngleForm f = ra.acute.substitute(*theta);
      if (f.x == 0 && f.y == 0) {
        Rational v = f.c90 * 90;
        // the perpendicular pivots sit at exactly 90
        if (v == 90) continue;
        if (!(0 < v && v < ra.upper)) infeasible = true;
        continue;
      }
      cs.push_back({f, 0, ra.upper});
    }
  } else {
    std::vector<const ReflectingAngle*> plus, minus;
    for (const auto& ra : s.reflecting) (ra.acute.theta > 0 ? plus : minus).push_back(&ra);
    for (auto* p : plus) {
      for (auto* m : minus) {
        AffineAngleForm sum = p->acute + m->acute;
        cs.push_back({Rational(1, 2) * sum, 0, (p->upper + m->upper) / 2});
      }
    }
  }
  return finish(cs, line, infeasible);
}

}  // namespace poolshot
