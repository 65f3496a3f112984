#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "certify_detail.hpp"
#include "poolshot/error.hpp"

namespace poolshot {

namespace detail {

namespace {

// Exact pair gradients computed per call, at most.
constexpr size_t kPairBudget = 64;

void note(CertifyResult& out, bool& indeterminate, bool& have_margin, const Rational& lower, const Rational& upper,
          const std::string& what) {
  if (!have_margin || lower < out.margin) out.margin = lower;
  have_margin = true;
  if (upper <= 0) {
    if (out.verdict != Verdict::Fail) {
      out.verdict = Verdict::Fail;
      out.reason = what;
    }
  } else if (lower <= 0) {
    indeterminate = true;
    if (out.reason.empty()) out.reason = what + " is not resolved at this precision";
  }
}

Rational pair_gradient(const RegionSystem& sys, size_t bi, size_t ki) {
  {
    std::lock_guard lock(sys.cache_mutex);
    auto it = sys.pair_G.find({bi, ki});
    if (it != sys.pair_G.end()) return it->second;
  }
  Rational G = gradient_bound(sys.pairs->pair_poly(bi, ki)).G;
  std::lock_guard lock(sys.cache_mutex);
  sys.pair_G.emplace(std::make_pair(bi, ki), G);
  return G;
}

}  // namespace

std::optional<Frame> frame(const RegionSystem& sys, const Square& sq) {
  if (!sys.line) return Frame{sq.center(), sq.r};
  const auto& l = *sys.line;
  auto seg = line_in_square(Rational(l.a), Rational(l.b), Rational(l.c * 90), sq);
  if (!seg) return std::nullopt;
  const auto& [p, q] = *seg;
  Point2 mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
  Rational r = std::max(abs(p.x - q.x), abs(p.y - q.y)) / 2;
  return Frame{mid, r};
}

void check_functions(const std::vector<Inequality>& fs, TrigEvaluator& ev, const Rational& r_rad,
                     CertifyResult& out, bool& indeterminate, bool& have_margin) {
  for (const auto& f : fs) {
    Interval v = ev.eval(f.f);
    Rational rG = r_rad * f.G;
    note(out, indeterminate, have_margin, v.lower() - rG, v.upper() - rG, f.label.empty() ? f.f.to_string() : f.label);
    double cap = f.G == 0 ? std::numeric_limits<double>::infinity() : v.lower_double() / f.G.get_d();
    out.score = std::min(out.score, cap);
  }
}

CertifyResult certify_at(const RegionSystem& sys, TrigEvaluator& ev, const Rational& r_rad, const Skip* skip) {
  CertifyResult out;
  out.verdict = Verdict::Pass;
  out.score = std::numeric_limits<double>::infinity();
  bool indeterminate = false;
  bool have_margin = false;

  if (skip && !skip->explicit_ids.empty()) {
    std::vector<Inequality> kept;
    for (size_t i = 0; i < sys.inequalities.size(); ++i)
      if (!skip->explicit_ids.count(i)) kept.push_back(sys.inequalities[i]);
    check_functions(kept, ev, r_rad, out, indeterminate, have_margin);
  } else {
    check_functions(sys.inequalities, ev, r_rad, out, indeterminate, have_margin);
  }
  if (out.verdict == Verdict::Fail) return out;

  if (sys.pairs) {
    const PairSystem& ps = *sys.pairs;
    const SymbolicTower& t = *ps.tower;
    std::vector<IntervalPoint> pos = evaluate_positions(t, ev);
    Interval c, d;
    if (ps.from_theta) {
      c = ev.eval(ps.c);
      d = ev.eval(ps.d);
    } else {
      c = pos[t.top_blue].x - pos[t.base_blue].x;
      d = pos[t.top_blue].y - pos[t.base_blue].y;
    }
    auto s_of = [&](size_t v) {
      Interval s = pos[v].x * d - pos[v].y * c;
      return s + s;
    };
    const size_t nb = ps.blue.size(), nk = ps.black.size();
    std::vector<Interval> su, sk;
    for (size_t v : ps.blue) su.push_back(s_of(v));
    for (size_t v : ps.black) sk.push_back(s_of(v));
    // black k: s.lo - rG, blue u: s.hi + rG
    std::vector<Rational> klo(nk), uhi(nb);
    for (size_t k = 0; k < nk; ++k) klo[k] = sk[k].lower() - r_rad * ps.G_black[k];
    for (size_t u = 0; u < nb; ++u) uhi[u] = su[u].upper() + r_rad * ps.G_blue[u];
    if (nk > 0 && nb > 0) {
      double gk = 0, gu = 0, sk_min = std::numeric_limits<double>::infinity(),
             su_max = -std::numeric_limits<double>::infinity();
      for (size_t k = 0; k < nk; ++k) {
        gk = std::max(gk, ps.G_black[k].get_d());
        sk_min = std::min(sk_min, sk[k].lower_double());
      }
      for (size_t u = 0; u < nb; ++u) {
        gu = std::max(gu, ps.G_blue[u].get_d());
        su_max = std::max(su_max, su[u].upper_double());
      }
      out.score = std::min(out.score, (sk_min - su_max) / std::max(gk + gu, 1e-300));

      std::vector<size_t> order(nb);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return uhi[a] > uhi[b]; });
      // violating pairs: uhi[u] >= klo[k]
      std::vector<std::pair<size_t, size_t>> hard;
      for (size_t k = 0; k < nk; ++k) {
        size_t i = 0;
        while (i < nb && uhi[order[i]] >= klo[k]) {
          hard.push_back({order[i], k});
          ++i;
        }
        if (i < nb) {
          Rational lo = klo[k] - uhi[order[i]];
          if (!have_margin || lo < out.margin) out.margin = lo;
          have_margin = true;
        }
      }
      // centers where the function itself is not positive need no gradient
      std::vector<std::pair<size_t, size_t>> need;
      for (auto [u, k] : hard) {
        if (skip && skip->pairs.count({u, k})) continue;
        Rational vlo = sk[k].lower() - su[u].upper();
        Rational vhi = sk[k].upper() - su[u].lower();
        const std::string what =
            t.vertices[ps.blue[u]].label.to_string() + " -> " + t.vertices[ps.black[k]].label.to_string();
        if (vlo <= 0) {
          note(out, indeterminate, have_margin, vlo, vhi, what);
          if (out.verdict == Verdict::Fail) return out;
        } else {
          need.push_back({u, k});
        }
      }
      if (need.size() > kPairBudget) {
        out.verdict = Verdict::Fail;
        out.reason = "too many pairs need exact gradients";
        if (!have_margin) out.margin = 0;
        return out;
      }
      for (auto [u, k] : need) {
        Rational G = pair_gradient(sys, u, k);
        Rational rG = r_rad * G;
        Rational vlo = sk[k].lower() - su[u].upper() - rG;
        Rational vhi = sk[k].upper() - su[u].lower() - rG;
        note(out, indeterminate, have_margin, vlo, vhi,
             t.vertices[ps.blue[u]].label.to_string() + " -> " + t.vertices[ps.black[k]].label.to_string());
        if (out.verdict == Verdict::Fail) return out;
      }
    }
  }
  if (!have_margin) {
    out.margin = 0;
    out.vacuous = true;
  }
  if (out.verdict == Verdict::Pass && indeterminate) out.verdict = Verdict::Indeterminate;
  if (out.verdict == Verdict::Pass) out.reason.clear();
  return out;
}

}  // namespace detail

bool square_may_fit(const RegionSystem& sys, const Square& sq) {
  if (sys.empty) return false;
  const double cx = sq.cx.get_d(), cy = sq.cy.get_d(), r = sq.r.get_d();
  const double slack = 1e-9 * (1 + std::abs(cx) + std::abs(cy));
  const auto& h = sys.halfplanes_d;
  if (!sys.line) {
    for (size_t i = 0; i + 2 < h.size(); i += 3) {
      double v = h[i] * cx + h[i + 1] * cy + h[i + 2] - r * (std::abs(h[i]) + std::abs(h[i + 1]));
      if (v < -slack * (std::abs(h[i]) + std::abs(h[i + 1]) + 1)) return false;
    }
    return true;
  }
  // the line must come near the square and the polygon must reach it
  const auto& l = *sys.line;
  double a = static_cast<double>(l.a), b = static_cast<double>(l.b), c = 90.0 * static_cast<double>(l.c);
  double dist = std::abs(a * cx + b * cy - c);
  if (dist > r * (std::abs(a) + std::abs(b)) + slack) return false;
  for (size_t i = 0; i + 2 < h.size(); i += 3) {
    double v = h[i] * cx + h[i + 1] * cy + h[i + 2] + r * (std::abs(h[i]) + std::abs(h[i + 1]));
    if (v < -slack) return false;
  }
  return true;
}

bool square_in_polygon(const RegionSystem& sys, const Square& sq) {
  if (sys.empty) return false;
  std::vector<Point2> pts;
  if (sys.line) {
    const auto& l = *sys.line;
    auto seg = line_in_square(Rational(l.a), Rational(l.b), Rational(l.c * 90), sq);
    if (!seg) return false;
    pts = {seg->first, seg->second};
  } else {
    pts = sq.corners();
  }
  for (const auto& h : sys.halfplanes)
    for (const auto& p : pts)
      if (h.value(p) <= 0) return false;
  return true;
}

CertifyResult certify_square(const RegionSystem& sys, const Square& sq, Precision p) {
  if (sq.r <= 0) throw DomainError("square half side must be positive");
  CertifyResult out;
  if (sys.empty) {
    out.reason = "region is empty";
    return out;
  }
  if (!square_in_polygon(sys, sq)) {
    out.reason = sys.line ? "line segment in the square leaves the bounding polygon"
                          : "square leaves the bounding polygon";
    return out;
  }
  auto fr = detail::frame(sys, sq);
  if (!fr) {
    out.reason = "line misses the square";
    return out;
  }
  sys.ensure_complete();
  Rational r_rad = degrees_to_radians_upper(fr->r, p);
  TrigEvaluator ev(fr->center.x, fr->center.y, p);
  return detail::certify_at(sys, ev, r_rad);
}

CertifyResult certify_functions(const std::vector<Inequality>& fs, const Square& sq, Precision p) {
  if (sq.r <= 0) throw DomainError("square half side must be positive");
  Rational r_rad = degrees_to_radians_upper(sq.r, p);
  TrigEvaluator ev(sq.cx, sq.cy, p);
  CertifyResult out;
  out.verdict = Verdict::Pass;
  out.score = std::numeric_limits<double>::infinity();
  bool indeterminate = false, have_margin = false;
  detail::check_functions(fs, ev, r_rad, out, indeterminate, have_margin);
  if (!have_margin) {
    out.margin = 0;
    out.vacuous = true;
  }
  if (out.verdict == Verdict::Pass && indeterminate) out.verdict = Verdict::Indeterminate;
  return out;
}

}  // namespace poolshot
