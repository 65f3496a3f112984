#include <cmath>
#include <map>

#include "certify_detail.hpp"
#include "poolshot/error.hpp"

namespace poolshot {

namespace {

using Gauss = std::pair<std::int64_t, std::int64_t>;  // re, im
using Freq = std::pair<std::int64_t, std::int64_t>;

Gauss operator+(Gauss a, Gauss b) { return {a.first + b.first, a.second + b.second}; }
Gauss operator-(Gauss a, Gauss b) { return {a.first - b.first, a.second - b.second}; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Option for the factor: kind and L = lambda * (a x + b y), lambda in {1/2, 1}.
struct FactorShape {
  TrigKind kind;
  std::int32_t m, n;
  int den;
  Rational L0;  // value of L on the line
};

std::vector<FactorShape> shapes_for(const LineRegion& line) {
  std::vector<FactorShape> out;
  for (int den : {1, 2}) {
    Rational L0 = ratio(line.c * 90, den);
    Rational k = L0 / 180;
    if (k.get_den() == 1) {
      out.push_back({TrigKind::Sin, static_cast<std::int32_t>(line.a), static_cast<std::int32_t>(line.b), den, L0});
    } else {
      Rational k2 = (L0 - 90) / 180;
      if (k2.get_den() == 1)
        out.push_back(
            {TrigKind::Cos, static_cast<std::int32_t>(line.a), static_cast<std::int32_t>(line.b), den, L0});
    }
  }
  return out;
}

struct FactorItems {
  std::vector<size_t> explicit_ids;
  std::vector<std::pair<size_t, size_t>> pairs;
  std::vector<TrigPoly> quotients;
};

// Inequalities of sys that vanish along the line and divide by the factor.
FactorItems factor_items(const RegionSystem& sys, const FactorShape& fs, const std::vector<std::array<double, 2>>& at) {
  FactorItems out;
  auto vanishes = [&](auto value_at, double scale) {
    for (const auto& p : at)
      if (std::abs(value_at(p[0], p[1])) > 1e-9 * (1 + scale)) return false;
    return true;
  };
  for (size_t i = 0; i < sys.inequalities.size(); ++i) {
    const auto& f = sys.inequalities[i];
    if (!vanishes([&](double x, double y) { return eval_double(f.f, x, y); }, f.G.get_d())) continue;
    if (auto u = divide_by(f.f, fs.kind, fs.m, fs.n, fs.den); u) {
      out.explicit_ids.push_back(i);
      out.quotients.push_back(std::move(*u));
    }
  }
  if (sys.pairs) {
    const PairSystem& ps = *sys.pairs;
    std::vector<std::vector<std::array<double, 2>>> pos;
    std::vector<std::array<double, 2>> w;
    for (const auto& p : at) {
      pos.push_back(float_positions(*ps.tower, p[0], p[1]));
      w.push_back({eval_double(ps.c, p[0], p[1]), eval_double(ps.d, p[0], p[1])});
    }
    for (size_t u = 0; u < ps.blue.size(); ++u)
      for (size_t k = 0; k < ps.black.size(); ++k) {
        bool zero = true;
        for (size_t s = 0; s < at.size() && zero; ++s) {
          const auto& pu = pos[s][ps.blue[u]];
          const auto& pk = pos[s][ps.black[k]];
          double v = 4 * ((pk[0] - pu[0]) * w[s][1] - (pk[1] - pu[1]) * w[s][0]);
          double scale = Rational(ps.G_blue[u] + ps.G_black[k]).get_d();
          zero = std::abs(v) <= 1e-9 * (1 + scale);
        }
        if (!zero) continue;
        if (auto q = divide_by(ps.pair_poly(u, k), fs.kind, fs.m, fs.n, fs.den); q) {
          out.pairs.push_back({u, k});
          out.quotients.push_back(std::move(*q));
        }
      }
  }
  return out;
}

// Points of the square on the closed side h >= 0 must satisfy every
// half-plane of sys; strictly away from the dividing line.
bool side_in_polygon(const RegionSystem& sys, const Square& sq, const HalfPlane& side) {
  std::vector<Point2> part = clip(sq.corners(), side);
  if (part.empty()) return true;
  for (const auto& h : sys.halfplanes)
    for (const auto& p : part) {
      Rational v = h.value(p);
      if (v < 0) return false;
      if (v == 0 && side.value(p) != 0) return false;
    }
  return true;
}

}  // namespace

std::string to_string(TripleVerdict v) {
  switch (v) {
    case TripleVerdict::Pass: return "pass";
    case TripleVerdict::Fail: return "fail";
    default: return "not applicable";
  }
}

std::optional<TrigPoly> divide_by(const TrigPoly& f, TrigKind kind, std::int32_t m, std::int32_t n, int den) {
  if (m == 0 && n == 0) throw DomainError("factor argument must not be constant");
  if (den != 1 && den != 2) throw DomainError("factor denominator must be 1 or 2");
  const int D = std::max(f.den(), den);
  const std::int64_t sf = D / f.den(), sl = D / den;
  // 2f in exponentials
  std::map<Freq, Gauss> F;
  for (const auto& t : f.terms()) {
    Freq k{t.m * sf, t.n * sf}, mk{-k.first, -k.second};
    if (t.kind == TrigKind::Cos) {
      F[k] = F[k] + Gauss{t.coeff, 0};
      F[mk] = F[mk] + Gauss{t.coeff, 0};
    } else {
      F[k] = F[k] + Gauss{0, -t.coeff};
      F[mk] = F[mk] + Gauss{0, t.coeff};
    }
  }
  Freq l{m * sl, n * sl};
  if (l.first < 0 || (l.first == 0 && l.second < 0)) l = {-l.first, -l.second};
  // group by cosets of the factor's frequency
  std::map<Freq, std::map<std::int64_t, Gauss>> cosets;
  for (const auto& [k, c] : F) {
    if (c == Gauss{0, 0}) continue;
    std::int64_t j = l.first != 0 ? floor_div(k.first, l.first) : floor_div(k.second, l.second);
    Freq base{k.first - j * l.first, k.second - j * l.second};
    cosets[base][j] = c;
  }
  std::map<Freq, Gauss> Q;
  for (const auto& [base, cs] : cosets) {
    const std::int64_t jmin = cs.begin()->first, jmax = cs.rbegin()->first;
    std::map<std::int64_t, Gauss> q;
    auto get = [&](std::int64_t j) {
      auto it = q.find(j);
      return it == q.end() ? Gauss{0, 0} : it->second;
    };
    for (std::int64_t j = jmax; j >= jmin; --j) {
      auto it = cs.find(j);
      Gauss c = it == cs.end() ? Gauss{0, 0} : it->second;
      q[j - 1] = kind == TrigKind::Sin ? c + get(j + 1) : c - get(j + 1);
    }
    if (get(jmin - 1) != Gauss{0, 0} || get(jmin) != Gauss{0, 0}) return std::nullopt;
    for (const auto& [j, c] : q)
      if (c != Gauss{0, 0}) Q[{base.first + j * l.first, base.second + j * l.second}] = c;
  }
  // u = iQ for sine, Q for cosine
  std::vector<TrigTerm> terms;
  for (const auto& [k, c0] : Q) {
    Gauss c = kind == TrigKind::Sin ? Gauss{-c0.second, c0.first} : c0;
    bool positive = k.first > 0 || (k.first == 0 && k.second > 0);
    if (k.first == 0 && k.second == 0) {
      if (c.second != 0) return std::nullopt;
      terms.push_back({TrigKind::Cos, 0, 0, c.first});
      continue;
    }
    if (!positive) continue;
    auto it = Q.find({-k.first, -k.second});
    Gauss other = it == Q.end() ? Gauss{0, 0} : it->second;
    if (kind == TrigKind::Sin) other = Gauss{-other.second, other.first};
    if (other.first != c.first || other.second != -c.second) return std::nullopt;
    auto mm = static_cast<std::int32_t>(k.first), nn = static_cast<std::int32_t>(k.second);
    if (c.first != 0) terms.push_back({TrigKind::Cos, mm, nn, 2 * c.first});
    if (c.second != 0) terms.push_back({TrigKind::Sin, mm, nn, -2 * c.second});
  }
  TrigPoly u = TrigPoly::from_terms(std::move(terms), D);
  TrigPoly factor = TrigPoly::term(kind, {m, n, 0}, 1, den);
  if (!(product2(factor, u) == 2 * f)) return std::nullopt;
  return u;
}

std::optional<SharedFactor> shared_line_factor(const TrigPoly& f, const TrigPoly& g, const LineRegion& line) {
  for (const auto& fs : shapes_for(line)) {
    auto u = divide_by(f, fs.kind, fs.m, fs.n, fs.den);
    if (!u) continue;
    auto v = divide_by(g, fs.kind, fs.m, fs.n, fs.den);
    if (!v) continue;
    return SharedFactor{fs.kind, fs.m, fs.n, fs.den, std::move(*u), std::move(*v)};
  }
  return std::nullopt;
}

TripleOutcome triple_rule(const Square& sq, const RegionSystem& r1, const RegionSystem& r2, const RegionSystem& r3,
                          Precision p) {
  TripleOutcome out;
  if (!r3.line || r1.is_line() || r2.is_line()) {
    out.reason = "needs two area regions and one line region";
    return out;
  }
  if (r1.empty || r2.empty || r3.empty) {
    out.reason = "a region is empty";
    return out;
  }
  const LineRegion& line = *r3.line;
  auto seg = line_in_square(Rational(line.a), Rational(line.b), Rational(line.c * 90), sq);
  if (!seg) {
    out.reason = "line misses the square";
    return out;
  }
  r1.ensure_complete();
  r2.ensure_complete();
  r3.ensure_complete();
  std::vector<std::array<double, 2>> at;
  for (int i = 1; i <= 2; ++i) {
    Rational t(i, 3);
    at.push_back({Rational(seg->first.x + t * (seg->second.x - seg->first.x)).get_d(),
                  Rational(seg->first.y + t * (seg->second.y - seg->first.y)).get_d()});
  }
  for (const auto& fs : shapes_for(line)) {
    FactorItems a = factor_items(r1, fs, at);
    if (a.quotients.empty()) continue;
    FactorItems b = factor_items(r2, fs, at);
    if (b.quotients.empty()) continue;

    // 1. corners within one period of the factor's zeros
    HalfPlane above{ratio(fs.m, fs.den), ratio(fs.n, fs.den), -fs.L0};
    for (const auto& c : sq.corners()) {
      Rational v = above.value(c);
      if (!(v > -180 && v < 180)) {
        out.verdict = TripleVerdict::Fail;
        out.reason = "a corner leaves the band around the line";
        return out;
      }
    }
    // 2. gradient checks; the quotients must have opposite constant signs
    auto sign_of = [&](const std::vector<TrigPoly>& qs, Rational& margin) -> int {
      for (int s : {1, -1}) {
        std::vector<Inequality> fs2;
        for (const auto& q : qs) fs2.push_back(make_inequality(s * q));
        CertifyResult r = certify_functions(fs2, sq, p);
        if (r.passed()) {
          margin = r.margin;
          return s;
        }
      }
      return 0;
    };
    Rational mu, mv;
    int su = sign_of(a.quotients, mu), sv = sign_of(b.quotients, mv);
    if (su == 0 || sv == 0 || su == sv) {
      out.verdict = TripleVerdict::Fail;
      out.reason = "quotients are not of opposite constant sign on the square";
      return out;
    }
    Precision pp = p;
    Rational r_rad = degrees_to_radians_upper(sq.r, pp);
    TrigEvaluator ev(sq.cx, sq.cy, pp);
    detail::Skip skip1{{a.explicit_ids.begin(), a.explicit_ids.end()}, {a.pairs.begin(), a.pairs.end()}};
    detail::Skip skip2{{b.explicit_ids.begin(), b.explicit_ids.end()}, {b.pairs.begin(), b.pairs.end()}};
    CertifyResult c1 = detail::certify_at(r1, ev, r_rad, &skip1);
    CertifyResult c2 = detail::certify_at(r2, ev, r_rad, &skip2);
    if (!c1.passed() || !c2.passed()) {
      out.verdict = TripleVerdict::Fail;
      out.reason = "remaining inequalities do not hold on the square";
      return out;
    }
    // sign of the factor just above the line
    int above_sign;
    if (fs.kind == TrigKind::Sin) above_sign = Rational(fs.L0 / 180).get_num() % 2 == 0 ? 1 : -1;
    else above_sign = Rational((fs.L0 - 90) / 180).get_num() % 2 == 0 ? -1 : 1;
    HalfPlane below{-above.a, -above.b, -above.c};
    const HalfPlane& side1 = above_sign == su ? above : below;
    const HalfPlane& side2 = above_sign == su ? below : above;
    if (!side_in_polygon(r1, sq, side1) || !side_in_polygon(r2, sq, side2)) {
      out.verdict = TripleVerdict::Fail;
      out.reason = "square leaves a bounding polygon on its side of the line";
      return out;
    }
    // 3. the line itself
    CertifyResult c3 = certify_square(r3, sq, p);
    if (!c3.passed()) {
      out.verdict = TripleVerdict::Fail;
      out.reason = "line region does not certify: " + c3.reason;
      return out;
    }
    out.verdict = TripleVerdict::Pass;
    out.margin = std::min({mu, mv, c3.margin});
    for (const CertifyResult* c : {&c1, &c2})
      if (!c->vacuous) out.margin = std::min(out.margin, c->margin);
    return out;
  }
  out.reason = "no shared factor along the line";
  return out;
}

}  // namespace poolshot
