#include "poolshot/numeric/enclose.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "poolshot/error.hpp"

namespace poolshot {

namespace {

mpz_class pow10(int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

struct PiHalf {
  Rational lo, hi;
};

const PiHalf& pi_half_bounds(int digits) {
  static std::mutex mu;
  static std::map<int, PiHalf> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(digits);
  if (it != cache.end()) return it->second;
  mpfr_t pi;
  mpfr_init2(pi, static_cast<mpfr_prec_t>(digits * 4 + 128));
  mpfr_const_pi(pi, MPFR_RNDD);
  mpfr_div_2ui(pi, pi, 1, MPFR_RNDD);
  mpz_class scale = pow10(digits + 1);
  mpfr_mul_z(pi, pi, scale.get_mpz_t(), MPFR_RNDD);
  mpz_class t;
  mpfr_get_z(t.get_mpz_t(), pi, MPFR_RNDD);
  mpfr_clear(pi);
  PiHalf ph{Rational(t - 1, scale), Rational(t + 5, scale)};
  ph.lo.canonicalize();
  ph.hi.canonicalize();
  return cache.emplace(digits, ph).first->second;
}

// Reduces degrees to r in [-45, 45] and a quarter-turn count k in 0..3 with
// angle = r + 90k (mod 360).
void quarter_reduce(const Rational& deg, Rational& r, int& k) {
  Rational q = deg / 90;
  // nearest integer to q, ties toward floor
  mpz_class n = floor(q + Rational(1, 2));
  r = (q - Rational(n)) * 90;
  mpz_class m;
  mpz_fdiv_r_ui(m.get_mpz_t(), n.get_mpz_t(), 4);
  k = static_cast<int>(m.get_si());
}

SinCos reduced_sin_cos(const Rational& r, Precision p) {
  const mpfr_prec_t bits = p.bits();
  SinCos out{Interval(bits), Interval(bits)};
  if (r == 0) {
    out.sin = Interval::point(0, bits);
    out.cos = Interval::point(1, bits);
    return out;
  }
  const PiHalf& h = pi_half_bounds(p.digits);
  Rational a = r / 90;
  Rational rlo = a > 0 ? a * h.lo : a * h.hi;
  Rational rhi = a > 0 ? a * h.hi : a * h.lo;
  mpfr_t lo, hi;
  mpfr_init2(lo, bits + 16);
  mpfr_init2(hi, bits + 16);
  mpfr_set_q(lo, rlo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi, rhi.get_mpq_t(), MPFR_RNDU);
  // sin is increasing on [-pi/4, pi/4] (with margin)
  mpfr_sin(out.sin.lo(), lo, MPFR_RNDD);
  mpfr_sin(out.sin.hi(), hi, MPFR_RNDU);
  // cos is unimodal with its maximum at 0
  if (mpfr_sgn(lo) > 0) {
    mpfr_cos(out.cos.lo(), hi, MPFR_RNDD);
    mpfr_cos(out.cos.hi(), lo, MPFR_RNDU);
  } else if (mpfr_sgn(hi) < 0) {
    mpfr_cos(out.cos.lo(), lo, MPFR_RNDD);
    mpfr_cos(out.cos.hi(), hi, MPFR_RNDU);
  } else {
    mpfr_t t;
    mpfr_init2(t, bits);
    mpfr_cos(out.cos.lo(), lo, MPFR_RNDD);
    mpfr_cos(t, hi, MPFR_RNDD);
    mpfr_min(out.cos.lo(), out.cos.lo(), t, MPFR_RNDD);
    mpfr_set_si(out.cos.hi(), 1, MPFR_RNDU);
    mpfr_clear(t);
  }
  mpfr_clear(lo);
  mpfr_clear(hi);
  // exact shortcut: sin(+-30) = +-1/2
  if (abs(r) == 30) out.sin = Interval::point(r > 0 ? Rational(1, 2) : Rational(-1, 2), bits);
  out.sin.clamp_unit();
  out.cos.clamp_unit();
  return out;
}

}  // namespace

mpfr_prec_t Precision::bits() const {
  if (digits < 1) throw DomainError("precision must be positive");
  long b = static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 32;
  return static_cast<mpfr_prec_t>(std::max(64L, b));
}

Rational pi_half_lower(Precision p) { return pi_half_bounds(p.digits).lo; }
Rational pi_half_upper(Precision p) { return pi_half_bounds(p.digits).hi; }

Interval pi_half(Precision p) {
  const PiHalf& h = pi_half_bounds(p.digits);
  return Interval(h.lo, h.hi, p.bits());
}

Rational degrees_to_radians_upper(const Rational& degrees, Precision p) {
  return degrees * pi_half_bounds(p.digits).hi / 90;
}

SinCos enclose_sin_cos(const Rational& degrees, Precision p) {
  Rational r;
  int k;
  quarter_reduce(degrees, r, k);
  SinCos base = reduced_sin_cos(r, p);
  switch (k) {
    case 0:
      return base;
    case 1:
      return SinCos{base.cos, -base.sin};
    case 2:
      return SinCos{-base.sin, -base.cos};
    default:
      return SinCos{-base.cos, base.sin};
  }
}

Interval enclose_sin(const RationalAngle& angle, Precision p) { return enclose_sin_cos(angle.degrees, p).sin; }
Interval enclose_cos(const RationalAngle& angle, Precision p) { return enclose_sin_cos(angle.degrees, p).cos; }

}  // namespace poolshot
