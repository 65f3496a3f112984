#include <algorithm>

#include "poolshot/error.hpp"
#include "poolshot/prover.hpp"

namespace poolshot {

namespace {

std::vector<Point2> domain_triangle() {
  return {{Rational(0), Rational(0)}, {Rational(180), Rational(0)}, {Rational(0), Rational(180)}};
}

bool same_halfplane(const HalfPlane& a, const HalfPlane& b) {
  // equal up to a positive factor
  Rational s = a.a != 0 ? b.a / a.a : (a.b != 0 ? b.b / a.b : (a.c != 0 ? b.c / a.c : Rational(0)));
  if (s <= 0) return false;
  return b.a == s * a.a && b.b == s * a.b && b.c == s * a.c;
}

void set_geometry(RegionSystem& sys, std::vector<HalfPlane> hs) {
  std::vector<HalfPlane> uniq;
  for (auto& h : hs)
    if (std::none_of(uniq.begin(), uniq.end(), [&](const HalfPlane& u) { return same_halfplane(u, h); }))
      uniq.push_back(std::move(h));
  sys.halfplanes = std::move(uniq);
  sys.halfplanes_d.clear();
  for (const auto& h : sys.halfplanes) {
    sys.halfplanes_d.push_back(h.a.get_d());
    sys.halfplanes_d.push_back(h.b.get_d());
    sys.halfplanes_d.push_back(h.c.get_d());
  }
  if (sys.line) {
    Square box{90, 90, 90};
    auto seg = line_in_square(Rational(sys.line->a), Rational(sys.line->b), Rational(sys.line->c * 90), box);
    std::optional<std::pair<Point2, Point2>> part;
    if (seg) part = clip_segment(seg->first, seg->second, sys.halfplanes);
    sys.feasible.clear();
    if (part) sys.feasible = {part->first, part->second};
    sys.line->segment = part;
    sys.empty = !part || part->first == part->second;
    if (!sys.empty) {
      // the open segment must satisfy the strict constraints
      Point2 mid{(part->first.x + part->second.x) / 2, (part->first.y + part->second.y) / 2};
      for (const auto& h : sys.halfplanes)
        if (h.value(mid) <= 0) sys.empty = true;
    }
  } else {
    sys.feasible = clip_all(domain_triangle(), sys.halfplanes);
    sys.empty = sys.feasible.size() < 3 || signed_area2(sys.feasible) == 0;
  }
}

TrigPoly dot2(const TrigPoly& x, const TrigPoly& y, const TrigPoly& c, const TrigPoly& d) {
  return product2(x, c) + product2(y, d);
}

}  // namespace

Inequality make_inequality(TrigPoly f, std::string label) {
  Rational G = gradient_bound(f).G;
  return {std::move(f), std::move(G), std::move(label)};
}

TrigPoly PairSystem::point_poly(size_t vertex) const {
  const auto& v = tower->vertices.at(vertex);
  return product2(v.X2, d) - product2(v.Y2, c);
}

TrigPoly PairSystem::pair_poly(size_t bi, size_t ki) const {
  const auto& u = tower->vertices.at(blue.at(bi));
  const auto& k = tower->vertices.at(black.at(ki));
  return product2(k.X2 - u.X2, d) - product2(k.Y2 - u.Y2, c);
}

std::string RegionSystem::name() const {
  if (!label.empty()) return label;
  return format_code(code) + " [" + asg.to_string() + "]";
}

std::shared_ptr<RegionSystem> region_shell(const CodeSequence& code, const AngleAssignment& asg) {
  auto sys = std::make_shared<RegionSystem>();
  sys->code = code;
  sys->asg = asg;
  sys->type = classify_code(code);
  sys->polygon = angle_bounding_polygon(code, asg);
  sys->line = sys->polygon.line;
  std::vector<HalfPlane> hs = sys->polygon.halfplanes();
  for (const auto& h : corner_bounding_polygon(code, asg).halfplanes()) hs.push_back(h);
  set_geometry(*sys, std::move(hs));
  return sys;
}

void RegionSystem::ensure_complete() const {
  if (synthetic) return;
  std::call_once(completed, [this] {
    auto self = const_cast<RegionSystem*>(this);
    auto ps = std::make_shared<PairSystem>();
    ps->tower = build_tower(code, asg);
    const SymbolicTower& t = *ps->tower;
    const auto& a0 = t.vertices[t.base_blue];
    const auto& an = t.vertices[t.top_blue];
    const auto& b0 = t.vertices[t.base_black];
    const auto& bm = t.vertices[t.top_black];
    TrigPoly dxa = an.X2 - a0.X2, dya = an.Y2 - a0.Y2;
    bool theta_route = false;
    if (type == CodeType::CS || type == CodeType::OSO) {
      if (auto theta = solve_theta(code, asg); theta) {
        TrigPoly c = theta_direction_c(*theta), d = theta_direction_d(*theta);
        // the direction must be parallel to the tower's translation
        bool parallel_a = (product2(dxa, d) - product2(dya, c)).is_zero();
        bool parallel_b = (product2(bm.X2 - b0.X2, d) - product2(bm.Y2 - b0.Y2, c)).is_zero();
        if (parallel_a && parallel_b) {
          ps->c = std::move(c);
          ps->d = std::move(d);
          theta_route = true;
        }
      }
    }
    if (!theta_route) {
      ps->c = dxa;
      ps->d = dya;
    }
    ps->from_theta = theta_route;
    ps->blue = key_points(t, Color::Blue);
    ps->black = key_points(t, Color::Black);
    for (size_t v : ps->blue) ps->G_blue.push_back(gradient_bound(ps->point_poly(v)).G);
    for (size_t v : ps->black) ps->G_black.push_back(gradient_bound(ps->point_poly(v)).G);
    if (theta_route) self->inequalities.push_back(make_inequality(dot2(dxa, dya, ps->c, ps->d), "orientation"));
    self->pairs = std::move(ps);
  });
}

std::shared_ptr<RegionSystem> region_system(const CodeSequence& code, const AngleAssignment& asg) {
  auto sys = region_shell(code, asg);
  sys->ensure_complete();
  return sys;
}

std::shared_ptr<RegionSystem> synthetic_system(std::string name, std::vector<Inequality> inequalities,
                                               std::vector<HalfPlane> halfplanes, std::optional<LineRegion> line) {
  auto sys = std::make_shared<RegionSystem>();
  sys->synthetic = true;
  sys->inequalities = std::move(inequalities);
  sys->line = line;
  sys->type = line ? CodeType::CNS : CodeType::CS;
  sys->label = std::move(name);
  set_geometry(*sys, std::move(halfplanes));
  return sys;
}

std::vector<Inequality> RegionSystem::all_inequalities() const {
  ensure_complete();
  std::vector<Inequality> out = inequalities;
  if (pairs) {
    for (size_t i = 0; i < pairs->blue.size(); ++i)
      for (size_t k = 0; k < pairs->black.size(); ++k) {
        const auto& t = *pairs->tower;
        out.push_back(make_inequality(pairs->pair_poly(i, k), t.vertices[pairs->blue[i]].label.to_string() + " -> " +
                                                                  t.vertices[pairs->black[k]].label.to_string()));
      }
  }
  return out;
}

std::vector<std::shared_ptr<RegionSystem>> corpus_systems(const std::vector<CodeSequence>& corpus) {
  std::vector<std::shared_ptr<RegionSystem>> out;
  for (size_t i = 0; i < corpus.size(); ++i) {
    std::vector<std::string> seen;
    for (auto [a, b] : assignment_choices()) {
      AngleAssignment asg;
      try {
        asg = assign_angles(corpus[i], a, b);
      } catch (const DomainError&) {
        continue;
      }
      std::string key = asg.to_string();
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      auto sys = region_shell(corpus[i], asg);
      sys->code_id = i;
      out.push_back(std::move(sys));
    }
  }
  return out;
}

}  // namespace poolshot
