#include "poolshot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "poolshot/error.hpp"

namespace poolshot {

namespace {

using V = std::array<long double, 2>;
constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kVertexTol = 1e-12L;
constexpr long double kClosureTol = 1e-9L;

V sub(const V& a, const V& b) { return {a[0] - b[0], a[1] - b[1]}; }
V add(const V& a, const V& b) { return {a[0] + b[0], a[1] + b[1]}; }
V scale(const V& a, long double k) { return {a[0] * k, a[1] * k}; }
long double dot(const V& a, const V& b) { return a[0] * b[0] + a[1] * b[1]; }
long double cross(const V& a, const V& b) { return a[0] * b[1] - a[1] * b[0]; }
long double norm(const V& a) { return std::sqrt(dot(a, a)); }
long double radians(long double deg) { return deg * kPi / 180; }

// Index of the vertex shared by two sides.
int shared_vertex(int a, int b) {
  // side 1 = AB, 2 = BC, 3 = CA
  int lo = std::min(a, b), hi = std::max(a, b);
  if (lo == 1 && hi == 2) return 1;
  if (lo == 2 && hi == 3) return 2;
  return 0;
}

struct Affine {
  long double m[2][2] = {{1, 0}, {0, 1}};
  V t{0, 0};
  V apply(const V& p) const { return {m[0][0] * p[0] + m[0][1] * p[1] + t[0], m[1][0] * p[0] + m[1][1] * p[1] + t[1]}; }
  // this followed after o: x -> this(o(x))
  Affine after(const Affine& o) const {
    Affine r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    V ot = o.t;
    r.t = {m[0][0] * ot[0] + m[0][1] * ot[1] + t[0], m[1][0] * ot[0] + m[1][1] * ot[1] + t[1]};
    return r;
  }
};

Affine reflection(const V& p, const V& q) {
  V e = sub(q, p);
  long double len = norm(e);
  V n{-e[1] / len, e[0] / len};
  Affine r;
  r.m[0][0] = 1 - 2 * n[0] * n[0];
  r.m[0][1] = -2 * n[0] * n[1];
  r.m[1][0] = -2 * n[1] * n[0];
  r.m[1][1] = 1 - 2 * n[1] * n[1];
  long double c = 2 * dot(n, p);
  r.t = {c * n[0], c * n[1]};
  return r;
}

struct Walk {
  std::vector<int> hits;
  std::vector<V> starts, dirs;  // per segment
  V end_point, end_dir;
  bool vertex_hit = false;
  int vertex = -1;  // the vertex hit, if any
};

Walk walk(const TriangleGeometry& g, int side, const V& p0, const V& d0, int max_bounces) {
  Walk w;
  V p = p0, d = d0;
  int cur = side;
  for (int b = 0; b < max_bounces; ++b) {
    w.starts.push_back(p);
    w.dirs.push_back(d);
    long double best = INFINITY;
    int hit = -1;
    long double best_mu = 0;
    for (int s = 1; s <= 3; ++s) {
      if (s == cur) continue;
      V a = g.side_start(s), e = sub(g.side_end(s), a);
      long double den = cross(d, e);
      if (std::abs(den) < 1e-30L) continue;
      V ap = sub(a, p);
      long double lambda = cross(ap, e) / den;
      long double mu = cross(ap, d) / den;
      if (lambda <= 0) continue;
      long double tol = kVertexTol * g.diameter / norm(e);
      if (mu < -tol || mu > 1 + tol) continue;
      if (lambda < best) {
        best = lambda;
        hit = s;
        best_mu = mu;
      }
    }
    if (hit < 0) {
      w.vertex_hit = true;
      break;
    }
    V a = g.side_start(hit), e = sub(g.side_end(hit), a);
    long double tol = kVertexTol * g.diameter / norm(e);
    p = add(p, scale(d, best));
    w.hits.push_back(hit);
    if (best_mu <= tol || best_mu >= 1 - tol) {
      w.vertex_hit = true;
      w.vertex = best_mu <= tol ? shared_vertex(hit, hit == 1 ? 3 : hit - 1) : shared_vertex(hit, hit == 3 ? 1 : hit + 1);
      break;
    }
    long double len = norm(e);
    V n{-e[1] / len, e[0] / len};
    d = sub(d, scale(n, 2 * dot(d, n)));
    cur = hit;
  }
  w.end_point = p;
  w.end_dir = d;
  return w;
}

RayState state_of(const TriangleGeometry& g, int side, const V& p, const V& d) {
  V a = g.side_start(side), e = sub(g.side_end(side), a);
  long double t = dot(sub(p, a), e) / dot(e, e);
  long double ang = std::atan2(cross(e, d), dot(e, d)) * 180 / kPi;
  return {side, static_cast<double>(t), static_cast<double>(ang)};
}

std::optional<OrbitResult> search(const TriangleGeometry& g, const CodeSequence& code, std::pair<int, int> start) {
  SideSequence seq;
  try {
    seq = code_to_side(doubled_if_odd(code), start);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  const auto& S = seq.symbols;
  const int N = static_cast<int>(S.size());
  Affine M;
  for (int i = 1; i <= N; ++i) {
    int s = S[static_cast<size_t>(i % N)];
    M = M.after(reflection(g.side_start(s), g.side_end(s)));
  }
  // M maps T_0 to T_N; with an identity linear part it is the period translation
  long double off = std::abs(M.m[0][0] - 1) + std::abs(M.m[1][1] - 1) + std::abs(M.m[0][1]) + std::abs(M.m[1][0]);
  if (off > 1e-9L) return std::nullopt;
  long double tl = norm(M.t);
  if (tl < 1e-12L * g.diameter) return std::nullopt;
  V d0 = scale(M.t, 1 / tl);
  const int a = S[0];
  V pa = g.side_start(a), e0 = sub(g.side_end(a), pa);
  if (cross(e0, d0) <= 0) return std::nullopt;
  const long double turn = cross(d0, e0) > 0 ? 1 : -1;

  long double lo = 0, hi = 1;
  for (int iter = 0; iter < 200 && hi - lo > 1e-17L; ++iter) {
    long double s = (lo + hi) / 2;
    V p0 = add(pa, scale(e0, s));
    Walk w = walk(g, a, p0, d0, N);
    // first disagreement with the expected sequence
    int bad = -1;
    for (int j = 0; j < static_cast<int>(w.hits.size()); ++j)
      if (w.hits[static_cast<size_t>(j)] != S[static_cast<size_t>((j + 1) % N)]) {
        bad = j;
        break;
      }
    if (bad < 0 && !w.vertex_hit && static_cast<int>(w.hits.size()) == N) {
      long double residual = norm(sub(w.end_point, p0)) / g.diameter;
      if (residual < kClosureTol) {
        V P = g.v[static_cast<size_t>(shared_vertex(S[0], S[1]))];
        V toward = sub(P, p0);
        long double theta = std::atan2(std::abs(cross(d0, toward)), dot(d0, toward)) * 180 / kPi;
        OrbitResult r;
        r.start = state_of(g, a, p0, d0);
        r.start_pair = start;
        r.theta = static_cast<double>(theta);
        r.residual = static_cast<double>(residual);
        r.sides = seq;
        return r;
      }
      return std::nullopt;
    }
    int j;
    int Q;
    if (bad >= 0) {
      j = bad;
      Q = shared_vertex(w.hits[static_cast<size_t>(j)], S[static_cast<size_t>((j + 1) % N)]);
    } else {
      // a vertex was hit on the expected side: step off it
      j = static_cast<int>(w.hits.size()) - 1;
      if (j < 0 || w.vertex < 0) return std::nullopt;
      Q = w.vertex;
      // the vertex lies on the expected side; the other side at the vertex is wrong
    }
    const V& pj = w.starts[static_cast<size_t>(j)];
    const V& dj = w.dirs[static_cast<size_t>(j)];
    long double side = cross(dj, sub(g.v[static_cast<size_t>(Q)], pj));
    if (side == 0) {
      // exactly through the vertex; the parallel family has no interior here
      if (bad < 0) {
        side = 1;  // arbitrary nudge; the bracket still shrinks
      } else {
        return std::nullopt;
      }
    }
    long double parity = j % 2 == 0 ? 1 : -1;
    long double want = (side > 0 ? 1 : -1) * parity * turn;
    if (bad < 0) want = -want;  // for a vertex hit at the right side, move away from it
    if (want > 0) lo = s;
    else hi = s;
  }
  return std::nullopt;
}

}  // namespace

TriangleGeometry::TriangleGeometry(const Triangle& tri) {
  long double x = radians(static_cast<long double>(tri.xd()));
  long double y = radians(static_cast<long double>(tri.yd()));
  long double z = kPi - x - y;
  long double ac = std::sin(y) / std::sin(z);
  v[0] = {0, 0};
  v[1] = {1, 0};
  v[2] = {ac * std::cos(x), ac * std::sin(x)};
  diameter = std::max({norm(sub(v[1], v[0])), norm(sub(v[2], v[1])), norm(sub(v[0], v[2]))});
}

std::array<long double, 2> TriangleGeometry::side_start(int side) const {
  switch (side) {
    case 1: return v[0];
    case 2: return v[1];
    case 3: return v[2];
    default: throw DomainError("side label must be 1, 2 or 3");
  }
}

std::array<long double, 2> TriangleGeometry::side_end(int side) const {
  switch (side) {
    case 1: return v[1];
    case 2: return v[2];
    case 3: return v[0];
    default: throw DomainError("side label must be 1, 2 or 3");
  }
}

TraceResult trace(const Triangle& tri, const RayState& start, int max_bounces) {
  if (start.side < 1 || start.side > 3) throw DomainError("side label must be 1, 2 or 3");
  if (!(start.t > 0 && start.t < 1)) throw DomainError("start parameter must lie strictly inside the side");
  if (!(start.direction > 0 && start.direction < 180)) throw DomainError("direction must point into the triangle");
  if (max_bounces < 0) throw DomainError("bounce count must be non-negative");
  TriangleGeometry g(tri);
  V a = g.side_start(start.side), e = sub(g.side_end(start.side), a);
  V p0 = add(a, scale(e, start.t));
  long double ang = radians(start.direction);
  long double len = norm(e);
  V u = scale(e, 1 / len), nrm{-u[1], u[0]};
  V d0 = add(scale(u, std::cos(ang)), scale(nrm, std::sin(ang)));
  Walk w = walk(g, start.side, p0, d0, max_bounces);
  TraceResult r;
  r.sides = SideSequence{w.hits, false};
  r.vertex_hit = w.vertex_hit;
  r.points.push_back({static_cast<double>(p0[0]), static_cast<double>(p0[1])});
  for (size_t i = 1; i < w.starts.size(); ++i)
    r.points.push_back({static_cast<double>(w.starts[i][0]), static_cast<double>(w.starts[i][1])});
  r.points.push_back({static_cast<double>(w.end_point[0]), static_cast<double>(w.end_point[1])});
  int last = w.hits.empty() ? start.side : w.hits.back();
  r.final_state = state_of(g, last, w.end_point, w.end_dir);
  return r;
}

std::optional<OrbitResult> find_orbit(const Triangle& tri, const CodeSequence& code, unsigned seed) {
  require_legal_code(code);
  TriangleGeometry g(tri);
  std::vector<std::pair<int, int>> starts;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      if (a != b) starts.push_back({a, b});
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::shuffle(starts.begin(), starts.end(), rng);
  }
  for (auto st : starts)
    if (auto r = search(g, code, st)) return r;
  return std::nullopt;
}

std::optional<OrbitResult> find_orbit(const Triangle& tri, const CodeSequence& code, const AngleAssignment& asg) {
  require_legal_code(code);
  if (asg.size() != code.size()) throw DomainError("assignment length differs from code length");
  TriangleGeometry g(tri);
  auto side_of = [](Angle u, Angle v) {
    // the side joining the vertices with angles u and v
    auto idx = [](Angle w) { return w == Angle::X ? 0 : (w == Angle::Y ? 1 : 2); };
    int i = idx(u), j = idx(v);
    int lo = std::min(i, j), hi = std::max(i, j);
    if (lo == 0 && hi == 1) return 1;
    if (lo == 1 && hi == 2) return 2;
    return 3;
  };
  const Angle P = asg[0], Q = asg[code.size() - 1];
  if (P == Q) return std::nullopt;
  const Angle R = third_angle(P, Q);
  return search(g, code, {side_of(P, Q), side_of(P, R)});
}

}  // namespace poolshot
