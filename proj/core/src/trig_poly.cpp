#include "poolshot/numeric/trig_poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "poolshot/error.hpp"

namespace poolshot {

namespace {

constexpr std::int64_t kBias = std::int64_t{1} << 30;

std::uint64_t pack(TrigKind kind, std::int64_t m, std::int64_t n) {
  return (static_cast<std::uint64_t>(kind) << 62) | (static_cast<std::uint64_t>(m + kBias) << 31) |
         static_cast<std::uint64_t>(n + kBias);
}

TrigTerm unpack(std::uint64_t key, std::int64_t coeff) {
  auto kind = static_cast<TrigKind>(key >> 62);
  auto m = static_cast<std::int64_t>((key >> 31) & ((std::uint64_t{1} << 31) - 1)) - kBias;
  auto n = static_cast<std::int64_t>(key & ((std::uint64_t{1} << 31) - 1)) - kBias;
  return {kind, static_cast<std::int32_t>(m), static_cast<std::int32_t>(n), coeff};
}

bool term_less(const TrigTerm& a, const TrigTerm& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.m != b.m) return a.m < b.m;
  return a.n < b.n;
}

// Adds coeff*trig(m x + n y + q*90) (q any integer) in canonical form.
struct Accumulator {
  std::unordered_map<std::uint64_t, std::int64_t> acc;

  void add(TrigKind kind, std::int64_t m, std::int64_t n, std::int64_t q, std::int64_t coeff) {
    if (coeff == 0) return;
    q = ((q % 4) + 4) % 4;
    // fold quarter turns
    if (kind == TrigKind::Sin) {
      switch (q) {
        case 1: kind = TrigKind::Cos; break;
        case 2: coeff = -coeff; break;
        case 3: kind = TrigKind::Cos; coeff = -coeff; break;
        default: break;
      }
    } else {
      switch (q) {
        case 1: kind = TrigKind::Sin; coeff = -coeff; break;
        case 2: coeff = -coeff; break;
        case 3: kind = TrigKind::Sin; break;
        default: break;
      }
    }
    if (m < 0 || (m == 0 && n < 0)) {
      m = -m;
      n = -n;
      if (kind == TrigKind::Sin) coeff = -coeff;
    }
    if (m == 0 && n == 0 && kind == TrigKind::Sin) return;
    if (m >= kBias || n >= kBias || n <= -kBias) throw DomainError("trig argument coefficient too large");
    acc[pack(kind, m, n)] += coeff;
  }

  std::vector<TrigTerm> take() {
    std::vector<TrigTerm> out;
    out.reserve(acc.size());
    for (auto& [k, c] : acc)
      if (c != 0) out.push_back(unpack(k, c));
    std::sort(out.begin(), out.end(), term_less);
    return out;
  }
};

std::string angle_text(std::int64_t m, std::int64_t n) {
  std::string s;
  auto part = [&](std::int64_t c, char v) {
    if (c == 0) return;
    if (c < 0) s += '-';
    else if (!s.empty()) s += '+';
    if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c);
    s += v;
  };
  part(m, 'x');
  part(n, 'y');
  return s.empty() ? "0" : s;
}

}  // namespace

LinearAngle& LinearAngle::operator+=(const LinearAngle& o) {
  m += o.m;
  n += o.n;
  c90 += o.c90;
  return *this;
}

LinearAngle& LinearAngle::operator-=(const LinearAngle& o) {
  m -= o.m;
  n -= o.n;
  c90 -= o.c90;
  return *this;
}

TrigPoly::TrigPoly(int den) : den_(den) {
  if (den != 1 && den != 2) throw DomainError("trig polynomial denominator must be 1 or 2");
}

TrigPoly TrigPoly::constant(std::int64_t c) {
  TrigPoly p;
  if (c != 0) p.terms_.push_back({TrigKind::Cos, 0, 0, c});
  return p;
}

TrigPoly TrigPoly::term(TrigKind kind, const LinearAngle& angle, std::int64_t coeff, int den) {
  TrigPoly p(den);
  if (angle.c90 % den != 0) throw DomainError("constant part of a trig argument is not a multiple of 90 degrees");
  Accumulator a;
  a.add(kind, angle.m, angle.n, angle.c90 / den, coeff);
  p.terms_ = a.take();
  p.reduce_den();
  return p;
}

TrigPoly TrigPoly::from_terms(std::vector<TrigTerm> terms, int den) {
  TrigPoly p(den);
  Accumulator a;
  for (const auto& t : terms) a.add(t.kind, t.m, t.n, 0, t.coeff);
  p.terms_ = a.take();
  p.reduce_den();
  return p;
}

void TrigPoly::reduce_den() {
  if (den_ == 1) return;
  for (const auto& t : terms_)
    if (t.m % 2 != 0 || t.n % 2 != 0) return;
  for (auto& t : terms_) {
    t.m /= 2;
    t.n /= 2;
  }
  den_ = 1;
}

TrigPoly TrigPoly::with_den(int den) const {
  if (den == den_) return *this;
  if (den_ == 2 && den == 1) throw DomainError("cannot lower a trig polynomial denominator");
  if (den != 2) throw DomainError("trig polynomial denominator must be 1 or 2");
  TrigPoly p(2);
  p.terms_ = terms_;
  for (auto& t : p.terms_) {
    t.m *= 2;
    t.n *= 2;
  }
  return p;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  int den = std::max(den_, o.den_);
  const TrigPoly a = with_den(den);
  const TrigPoly b = o.with_den(den);
  std::vector<TrigTerm> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && term_less(a.terms_[i], b.terms_[j]))) {
      out.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || term_less(b.terms_[j], a.terms_[i])) {
      out.push_back(b.terms_[j++]);
    } else {
      TrigTerm t = a.terms_[i++];
      t.coeff += b.terms_[j++].coeff;
      if (t.coeff != 0) out.push_back(t);
    }
  }
  terms_ = std::move(out);
  den_ = den;
  reduce_den();
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) { return *this += -o; }

TrigPoly& TrigPoly::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    den_ = 1;
    return *this;
  }
  for (auto& t : terms_) t.coeff *= k;
  return *this;
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

bool operator==(const TrigPoly& a, const TrigPoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.den_ == b.den_ && a.terms_ == b.terms_;
}

std::string TrigPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    std::int64_t c = t.coeff;
    if (c < 0) s += s.empty() ? "-" : " - ";
    else if (!s.empty()) s += " + ";
    std::int64_t a = c < 0 ? -c : c;
    if (t.m == 0 && t.n == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a);
    s += t.kind == TrigKind::Sin ? "sin(" : "cos(";
    std::string arg = angle_text(t.m, t.n);
    if (den_ != 1) arg = "(" + arg + ")/" + std::to_string(den_);
    s += arg + ")";
  }
  return s;
}

TrigPoly product2(const TrigPoly& f, const TrigPoly& g) {
  int den = std::max(f.den(), g.den());
  const TrigPoly a = f.with_den(den);
  const TrigPoly b = g.with_den(den);
  Accumulator acc;
  acc.acc.reserve(a.size() * b.size() * 2);
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      std::int64_t c = s.coeff * t.coeff;
      std::int64_t pm = std::int64_t{s.m} + t.m, pn = std::int64_t{s.n} + t.n;
      std::int64_t dm = std::int64_t{s.m} - t.m, dn = std::int64_t{s.n} - t.n;
      bool ss = s.kind == TrigKind::Sin, ts = t.kind == TrigKind::Sin;
      if (ss && ts) {
        // 2 sinA sinB = cos(A-B) - cos(A+B)
        acc.add(TrigKind::Cos, dm, dn, 0, c);
        acc.add(TrigKind::Cos, pm, pn, 0, -c);
      } else if (!ss && !ts) {
        // 2 cosA cosB = cos(A-B) + cos(A+B)
        acc.add(TrigKind::Cos, dm, dn, 0, c);
        acc.add(TrigKind::Cos, pm, pn, 0, c);
      } else if (ss) {
        // 2 sinA cosB = sin(A+B) + sin(A-B)
        acc.add(TrigKind::Sin, pm, pn, 0, c);
        acc.add(TrigKind::Sin, dm, dn, 0, c);
      } else {
        // 2 cosA sinB = sin(A+B) - sin(A-B)
        acc.add(TrigKind::Sin, pm, pn, 0, c);
        acc.add(TrigKind::Sin, dm, dn, 0, -c);
      }
    }
  }
  return TrigPoly::from_terms(acc.take(), den);
}

TrigPoly simplify(const std::vector<SideTrigProduct>& expr) {
  TrigPoly out;
  for (const auto& e : expr) {
    TrigPoly factor = TrigPoly::term(e.kind, e.angle, e.coeff);
    if (e.side) {
      out += product2(TrigPoly::term(TrigKind::Sin, *e.side), factor);
    } else {
      out += 2 * factor;
    }
  }
  return out;
}

GradientBound gradient_bound(const TrigPoly& f) {
  mpz_class g = 0;
  for (const auto& t : f.terms()) {
    mpz_class u(static_cast<long>(t.coeff < 0 ? -t.coeff : t.coeff));
    g += u * (std::abs(static_cast<long>(t.m)) + std::abs(static_cast<long>(t.n)));
  }
  Rational G(g, f.den());
  G.canonicalize();
  return {G};
}

TrigEvaluator::TrigEvaluator(Rational x, Rational y, Precision p) : x_(std::move(x)), y_(std::move(y)), p_(p) {}

const SinCos& TrigEvaluator::at(std::int32_t m, std::int32_t n, int den) {
  std::uint64_t key = pack(den == 2 ? TrigKind::Sin : TrigKind::Cos, m, n);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Rational a = (Rational(m) * x_ + Rational(n) * y_) / den;
  return cache_.emplace(key, enclose_sin_cos(a, p_)).first->second;
}

Interval TrigEvaluator::eval(const TrigPoly& f) {
  const mpfr_prec_t bits = p_.bits();
  Interval sum(bits);
  mpfr_t t;
  mpfr_init2(t, bits + 64);
  for (const auto& term : f.terms()) {
    const SinCos& sc = at(term.m, term.n, f.den());
    const Interval& v = term.kind == TrigKind::Sin ? sc.sin : sc.cos;
    long k = static_cast<long>(term.coeff);
    if (k > 0) {
      mpfr_mul_si(t, v.lo(), k, MPFR_RNDD);
      mpfr_add(sum.lo(), sum.lo(), t, MPFR_RNDD);
      mpfr_mul_si(t, v.hi(), k, MPFR_RNDU);
      mpfr_add(sum.hi(), sum.hi(), t, MPFR_RNDU);
    } else {
      mpfr_mul_si(t, v.hi(), k, MPFR_RNDD);
      mpfr_add(sum.lo(), sum.lo(), t, MPFR_RNDD);
      mpfr_mul_si(t, v.lo(), k, MPFR_RNDU);
      mpfr_add(sum.hi(), sum.hi(), t, MPFR_RNDU);
    }
  }
  mpfr_clear(t);
  return sum;
}

Interval eval(const TrigPoly& f, const RationalAngle& x, const RationalAngle& y, Precision p) {
  TrigEvaluator ev(x.degrees, y.degrees, p);
  return ev.eval(f);
}

double eval_double(const TrigPoly& f, double x_deg, double y_deg) {
  const double k = std::numbers::pi / 180.0 / f.den();
  double s = 0;
  for (const auto& t : f.terms()) {
    double a = (t.m * x_deg + t.n * y_deg) * k;
    s += static_cast<double>(t.coeff) * (t.kind == TrigKind::Sin ? std::sin(a) : std::cos(a));
  }
  return s;
}

TrigPoly eliminate_x(const TrigPoly& f, std::int64_t b, std::int64_t c90) {
  TrigPoly out(f.den());
  for (const auto& t : f.terms()) {
    LinearAngle a{0, t.n - t.m * b, t.m * c90};
    out += TrigPoly::term(t.kind, a, t.coeff, f.den());
  }
  return out;
}

TrigPoly parse_trig_poly(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "0") return TrigPoly();
  size_t i = 0;
  TrigPoly out;
  auto fail = [&](const std::string& why) { throw ParseError(why + " in '" + std::string(text) + "'"); };
  auto read_int = [&](std::int64_t& v) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) return false;
    v = std::stoll(s.substr(start, i - start));
    return true;
  };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected sign");
    }
    std::int64_t coeff = 1;
    bool had = read_int(coeff);
    if (i < s.size() && s[i] == '*') ++i;
    if (s.compare(i, 4, "sin(") == 0 || s.compare(i, 4, "cos(") == 0) {
      TrigKind kind = s[i] == 's' ? TrigKind::Sin : TrigKind::Cos;
      i += 4;
      LinearAngle a;
      bool first = true;
      while (i < s.size() && s[i] != ')') {
        std::int64_t sg = 1;
        if (s[i] == '+' || s[i] == '-') {
          sg = s[i] == '-' ? -1 : 1;
          ++i;
        } else if (!first) {
          fail("expected sign inside argument");
        }
        std::int64_t c = 1;
        bool hc = read_int(c);
        if (i < s.size() && (s[i] == 'x' || s[i] == 'y')) {
          (s[i] == 'x' ? a.m : a.n) += sg * c;
          ++i;
        } else if (hc) {
          if (c % 90 != 0) fail("constant argument must be a multiple of 90");
          a.c90 += sg * c / 90;
        } else {
          fail("malformed argument");
        }
        first = false;
      }
      if (i >= s.size()) fail("unterminated argument");
      ++i;
      out += TrigPoly::term(kind, a, sign * coeff);
    } else if (had) {
      out += TrigPoly::constant(sign * coeff);
    } else {
      fail("expected term");
    }
  }
  return out;
}

}  // namespace poolshot
