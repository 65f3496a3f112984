#include "poolshot/tower.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "poolshot/error.hpp"

namespace poolshot {

namespace {

LinearAngle lin(Angle a) {
  switch (a) {
    case Angle::X: return {1, 0, 0};
    case Angle::Y: return {0, 1, 0};
    default: return {-1, -1, 2};
  }
}

Rational angle_value(Angle a, const Triangle& t) {
  switch (a) {
    case Angle::X: return t.x;
    case Angle::Y: return t.y;
    default: return t.z();
  }
}

}  // namespace

Triangle::Triangle(Rational x_deg, Rational y_deg) : x(std::move(x_deg)), y(std::move(y_deg)) {
  if (x <= 0 || y <= 0 || x + y >= 180) throw DomainError("degenerate triangle: need x > 0, y > 0, x + y < 180");
}

Color opposite(Color c) { return c == Color::Blue ? Color::Black : Color::Blue; }
char to_char(Family f) { return "ABC"[static_cast<int>(f)]; }

std::string VertexLabel::to_string() const {
  return "L(" + std::to_string(k) + "," + std::to_string(j) + ")";
}

std::pair<size_t, size_t> SymbolicTower::special_side(size_t fan) const {
  const Fan& f = fans.at(fan);
  return {f.center, f.arc.at(static_cast<size_t>(f.code / 2))};
}

std::shared_ptr<const SymbolicTower> build_tower(const CodeSequence& code_in, const AngleAssignment& asg_in) {
  require_legal_code(code_in);
  if (asg_in.size() != code_in.size()) throw DomainError("assignment length differs from code length");
  auto t = std::make_shared<SymbolicTower>();
  t->type = classify_code(code_in);
  t->code = doubled_if_odd(code_in);
  t->asg = asg_in;
  if (t->code.size() != code_in.size())
    t->asg.symbols.insert(t->asg.symbols.end(), asg_in.symbols.begin(), asg_in.symbols.end());
  const auto& code = t->code;
  const size_t k = code.size();
  const Angle P = t->asg[0], Q = t->asg[k - 1];
  if (P == Q) throw IllegalCodeError("first and last fans share an angle");
  const Angle R = third_angle(P, Q);
  auto family_of = [&](Angle a) { return a == P ? Family::A : (a == Q ? Family::B : Family::C); };
  int generation[3] = {0, 0, 0};

  SymbolicVertex b0;
  b0.X2 = TrigPoly::term(TrigKind::Sin, lin(R), 2);
  b0.color = Color::Black;
  b0.family = Family::B;
  b0.generation = generation[1]++;
  b0.type = Q;
  b0.label = {1, 0};
  SymbolicVertex a0;
  a0.color = Color::Blue;
  a0.family = Family::A;
  a0.generation = generation[0]++;
  a0.type = P;
  a0.label = {2, 0};
  t->vertices.push_back(b0);
  t->vertices.push_back(a0);

  size_t prev = 0, cur = 1;
  LinearAngle phi;
  std::int64_t s = 1;
  for (size_t i = 0; i < k; ++i) {
    const SymbolicVertex center = t->vertices[cur];
    if (center.type != t->asg[i]) throw IllegalCodeError("tower fan center does not match the angle assignment");
    const Angle vt = center.type;
    const Angle prev_t = t->vertices[prev].type;
    const Angle other_t = third_angle(vt, prev_t);
    Fan fan{cur, vt, code[i], {prev}, {}, center.color};
    for (int j = 1; j <= code[i]; ++j) {
      Angle at = j % 2 == 0 ? prev_t : other_t;
      Angle side = third_angle(vt, at);
      LinearAngle dir = phi + (s * j) * lin(vt);
      SymbolicVertex v;
      v.parent = static_cast<int>(cur);
      v.edge_X2 = simplify({{1, lin(side), TrigKind::Cos, dir}});
      v.edge_Y2 = simplify({{1, lin(side), TrigKind::Sin, dir}});
      v.X2 = center.X2 + v.edge_X2;
      v.Y2 = center.Y2 + v.edge_Y2;
      v.color = opposite(center.color);
      v.type = at;
      v.family = family_of(at);
      v.generation = generation[static_cast<int>(v.family)]++;
      v.label = j == code[i] ? VertexLabel{center.label.k + 1, 0} : VertexLabel{center.label.k, j};
      t->vertices.push_back(std::move(v));
      fan.arc.push_back(t->vertices.size() - 1);
    }
    for (int j = 0; j < code[i]; ++j)
      t->triangles.push_back({fan.center, fan.arc[static_cast<size_t>(j)], fan.arc[static_cast<size_t>(j) + 1]});
    const int c = code[i];
    std::set<size_t> keys{0, static_cast<size_t>(c % 2 == 0 ? c : c - 1), 1, static_cast<size_t>(c % 2 == 1 ? c : c - 1)};
    fan.key_arc.assign(keys.begin(), keys.end());
    phi = phi + (s * c) * lin(vt) + LinearAngle{0, 0, 2};
    s = -s;
    prev = cur;
    cur = fan.arc.back();
    t->fans.push_back(std::move(fan));
  }
  t->top_black = prev;
  t->top_blue = cur;
  if (t->vertices[t->top_blue].color != Color::Blue || t->vertices[t->top_black].color != Color::Black)
    throw IllegalCodeError("tower top is not a blue/black pair");
  if (t->type == CodeType::CS || t->type == CodeType::CNS) {
    if (auto r = palindromic_pivot(code); r) t->special_fans = std::make_pair(*r, (*r + k / 2) % k);
  }
  return t;
}

std::vector<IntervalPoint> evaluate_positions(const SymbolicTower& t, TrigEvaluator& ev) {
  const mpfr_prec_t bits = ev.precision().bits();
  std::vector<IntervalPoint> pos;
  pos.reserve(t.vertices.size());
  for (const auto& v : t.vertices) {
    if (v.parent < 0) {
      pos.push_back({ev.eval(v.X2), ev.eval(v.Y2)});
    } else {
      const IntervalPoint& p = pos[static_cast<size_t>(v.parent)];
      pos.push_back({p.x + ev.eval(v.edge_X2), p.y + ev.eval(v.edge_Y2)});
    }
  }
  (void)bits;
  return pos;
}

std::vector<std::array<double, 2>> float_positions(const SymbolicTower& t, double x, double y) {
  std::vector<std::array<double, 2>> pos;
  for (const auto& v : t.vertices) {
    if (v.parent < 0) {
      pos.push_back({eval_double(v.X2, x, y) / 2, eval_double(v.Y2, x, y) / 2});
    } else {
      const auto& p = pos[static_cast<size_t>(v.parent)];
      pos.push_back({p[0] + eval_double(v.edge_X2, x, y) / 2, p[1] + eval_double(v.edge_Y2, x, y) / 2});
    }
  }
  return pos;
}

Tower evaluate_tower(std::shared_ptr<const SymbolicTower> sym, const Triangle& tri, Precision p) {
  TrigEvaluator ev(tri.x, tri.y, p);
  auto positions = evaluate_positions(*sym, ev);
  StabilityDefect d = stability_defect(sym->code, sym->asg);
  bool parallel = Rational(d.dX) * tri.x + Rational(d.dY) * tri.y + Rational(d.dZ) * tri.z() == 0;
  bool fans_ok = true;
  for (const auto& f : sym->fans)
    if (f.code * angle_value(f.symbol, tri) >= 180) fans_ok = false;
  return Tower{std::move(sym), tri, p, std::move(positions), parallel, fans_ok};
}

Tower unfold(const CodeSequence& code, const AngleAssignment& asg, const Triangle& tri, Precision p) {
  return evaluate_tower(build_tower(code, asg), tri, p);
}

std::vector<size_t> Tower::blue_vertices() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < sym->vertices.size(); ++i)
    if (sym->vertices[i].color == Color::Blue) out.push_back(i);
  return out;
}

std::vector<size_t> Tower::black_vertices() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < sym->vertices.size(); ++i)
    if (sym->vertices[i].color == Color::Black) out.push_back(i);
  return out;
}

std::vector<std::array<double, 2>> Tower::float_positions() const {
  return poolshot::float_positions(*sym, tri.xd(), tri.yd());
}

TrigPoly theta_direction_c(const AffineAngleForm& theta) {
  mpz_class den = lcm(lcm(theta.x.get_den(), theta.y.get_den()), theta.c90.get_den());
  if (den != 1 && den != 2) throw DomainError("shooting angle has an unsupported denominator");
  int dd = static_cast<int>(den.get_si());
  Rational m = theta.x * dd, n = theta.y * dd, c = theta.c90 * dd;
  return TrigPoly::term(TrigKind::Cos, {m.get_num().get_si(), n.get_num().get_si(), c.get_num().get_si()}, -1, dd);
}

TrigPoly theta_direction_d(const AffineAngleForm& theta) {
  mpz_class den = lcm(lcm(theta.x.get_den(), theta.y.get_den()), theta.c90.get_den());
  if (den != 1 && den != 2) throw DomainError("shooting angle has an unsupported denominator");
  int dd = static_cast<int>(den.get_si());
  Rational m = theta.x * dd, n = theta.y * dd, c = theta.c90 * dd;
  return TrigPoly::term(TrigKind::Sin, {m.get_num().get_si(), n.get_num().get_si(), c.get_num().get_si()}, 1, dd);
}

ShootingVector tower_shooting_vector(const Tower& tower) {
  const auto& t = tower.shape();
  const auto& a0 = tower.positions[t.base_blue];
  const auto& an = tower.positions[t.top_blue];
  ShootingVector w{an.x - a0.x, an.y - a0.y, t.vertices[t.top_blue].X2 - t.vertices[t.base_blue].X2,
                   t.vertices[t.top_blue].Y2 - t.vertices[t.base_blue].Y2, false};
  if (w.c.contains_zero() && w.d.contains_zero()) throw PrecisionError("shooting vector enclosure contains zero");
  return w;
}

ShootingVector shooting_vector(const CodeSequence& code, const AngleAssignment& asg, const Triangle& tri,
                               const Tower& tower) {
  CodeType type = classify_code(code);
  if (theta_solvable(type)) {
    auto theta = solve_theta(code, asg);
    if (theta) {
      TrigPoly c = theta_direction_c(*theta), d = theta_direction_d(*theta);
      TrigEvaluator ev(tri.x, tri.y, tower.precision);
      ShootingVector w{ev.eval(c), ev.eval(d), c, d, true};
      if (w.c.contains_zero() && w.d.contains_zero()) throw PrecisionError("shooting vector enclosure contains zero");
      return w;
    }
  }
  return tower_shooting_vector(tower);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "indeterminate";
  }
}

namespace {

TestOutcome run_pairs(const Tower& tower, const ShootingVector& w, const std::vector<size_t>& blue,
                      const std::vector<size_t>& black) {
  if (!tower.parallel) return {Verdict::Fail, Rational(0), "tower is not parallel at this triangle"};
  bool indeterminate = false;
  std::optional<Rational> margin;
  std::string reason;
  for (size_t u : blue) {
    for (size_t k : black) {
      const auto& pu = tower.positions[u];
      const auto& pk = tower.positions[k];
      Interval v = (pk.x - pu.x) * w.d - (pk.y - pu.y) * w.c;
      Rational lo = v.lower();
      if (!margin || lo < *margin) margin = lo;
      if (!(mpfr_sgn(v.hi()) > 0)) {
        const auto& t = tower.shape();
        return {Verdict::Fail, lo,
                "ad-bc <= 0 for " + t.vertices[u].label.to_string() + " -> " + t.vertices[k].label.to_string()};
      }
      if (!v.positive()) indeterminate = true;
    }
  }
  if (indeterminate) return {Verdict::Indeterminate, margin.value_or(0), "an enclosure straddles zero"};
  return {Verdict::Pass, margin.value_or(0), ""};
}

}  // namespace

TestOutcome test_I(const Tower& tower, const ShootingVector& w) {
  return run_pairs(tower, w, tower.blue_vertices(), tower.black_vertices());
}

std::vector<size_t> key_points(const SymbolicTower& t, Color color) {
  std::set<size_t> out;
  for (const auto& f : t.fans)
    for (size_t j : f.key_arc) {
      size_t v = f.arc[j];
      if (t.vertices[v].color == color) out.insert(v);
    }
  out.erase(t.top_blue);
  out.erase(t.top_black);
  return {out.begin(), out.end()};
}

TestOutcome test_II(const Tower& tower, const ShootingVector& w) {
  if (!tower.fans_below_180) throw PreconditionError("a fan has central angle of at least 180 degrees; use test_I");
  return run_pairs(tower, w, key_points(tower.shape(), Color::Blue), key_points(tower.shape(), Color::Black));
}

TestOutcome test_III(const Tower& tower, const ShootingVector& w) {
  const auto& t = tower.shape();
  if (!t.special_fans) throw PreconditionError("test III needs a CS or CNS code");
  if (!tower.fans_below_180) throw PreconditionError("a fan has central angle of at least 180 degrees; use test_I");
  auto proj = [&](size_t v) { return tower.positions[v].x * w.c + tower.positions[v].y * w.d; };
  Interval t1 = proj(t.fans[t.special_fans->first].center);
  Interval t2 = proj(t.fans[t.special_fans->second].center);
  Interval band = t1.hull(t2);
  auto filter = [&](Color c) {
    std::vector<size_t> out;
    for (size_t v : key_points(t, c))
      if (proj(v).overlaps(band)) out.push_back(v);
    return out;
  };
  return run_pairs(tower, w, filter(Color::Blue), filter(Color::Black));
}

namespace {

using P2 = std::array<double, 2>;

double cross(const P2& o, const P2& a, const P2& b) { return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]); }

std::vector<P2> hull(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P2> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

Verdict convex_hull_separation(const std::vector<P2>& blue, const std::vector<P2>& black, double slack) {
  auto hb = hull(blue), hk = hull(black);
  // separating axis over edge normals of both hulls
  bool all_overlap_clearly = true;
  auto try_axes = [&](const std::vector<P2>& h) -> bool {
    const size_t n = h.size();
    for (size_t i = 0; i < n; ++i) {
      P2 a = h[i], b = h[(i + 1) % n];
      double nx = -(b[1] - a[1]), ny = b[0] - a[0];
      double len = std::hypot(nx, ny);
      if (len == 0) continue;
      nx /= len;
      ny /= len;
      double bmin = 1e300, bmax = -1e300, kmin = 1e300, kmax = -1e300;
      for (auto& p : blue) {
        double v = p[0] * nx + p[1] * ny;
        bmin = std::min(bmin, v);
        bmax = std::max(bmax, v);
      }
      for (auto& p : black) {
        double v = p[0] * nx + p[1] * ny;
        kmin = std::min(kmin, v);
        kmax = std::max(kmax, v);
      }
      double gap = std::max(kmin - bmax, bmin - kmax);
      if (gap > slack) return true;
      if (gap > -slack) all_overlap_clearly = false;
    }
    return false;
  };
  if (try_axes(hb) || try_axes(hk)) return Verdict::Pass;
  return all_overlap_clearly ? Verdict::Fail : Verdict::Indeterminate;
}

Verdict convex_hull_separation(const Tower& tower) {
  std::vector<P2> blue, black;
  double slack = 1e-12;
  for (size_t i = 0; i < tower.positions.size(); ++i) {
    const auto& p = tower.positions[i];
    P2 q{p.x.mid_double() / 2, p.y.mid_double() / 2};
    slack = std::max({slack, (p.x.upper_double() - p.x.lower_double()), (p.y.upper_double() - p.y.lower_double())});
    (tower.shape().vertices[i].color == Color::Blue ? blue : black).push_back(q);
  }
  return convex_hull_separation(blue, black, 2 * slack + 1e-12);
}

}  // namespace poolshot
