#include "poolshot/numeric/interval.hpp"

#include <algorithm>
#include <ostream>

namespace poolshot {

void Interval::init(mpfr_prec_t bits) {
  bits_ = bits;
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
}

Interval::Interval(mpfr_prec_t bits) {
  init(bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t bits) {
  init(bits);
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(long lo, long hi, mpfr_prec_t bits) {
  init(bits);
  mpfr_set_si(lo_, lo, MPFR_RNDD);
  mpfr_set_si(hi_, hi, MPFR_RNDU);
}

Interval Interval::point(const Rational& v, mpfr_prec_t bits) { return Interval(v, v, bits); }
Interval Interval::point(long v, mpfr_prec_t bits) { return Interval(v, v, bits); }

Interval::Interval(const Interval& other) {
  init(other.bits_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  init(other.bits_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    if (bits_ != other.bits_) {
      mpfr_set_prec(lo_, other.bits_);
      mpfr_set_prec(hi_, other.bits_);
      bits_ = other.bits_;
    }
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  std::swap(bits_, other.bits_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Rational to_rational(mpfr_srcptr v) {
  Rational out;
  mpfr_get_q(out.get_mpq_t(), v);
  return out;
}

Rational Interval::lower() const { return to_rational(lo_); }
Rational Interval::upper() const { return to_rational(hi_); }
Rational Interval::width() const { return upper() - lower(); }
Rational Interval::midpoint() const { return (lower() + upper()) / 2; }
double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid_double() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

bool Interval::contains(const Rational& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& o) const {
  return mpfr_lessequal_p(lo_, o.lo_) && mpfr_greaterequal_p(hi_, o.hi_);
}

bool Interval::overlaps(const Interval& o) const {
  return mpfr_lessequal_p(lo_, o.hi_) && mpfr_lessequal_p(o.lo_, hi_);
}

Interval& Interval::operator+=(const Interval& b) {
  if (b.bits_ > bits_) {
    mpfr_prec_round(lo_, b.bits_, MPFR_RNDD);
    mpfr_prec_round(hi_, b.bits_, MPFR_RNDU);
    bits_ = b.bits_;
  }
  mpfr_add(lo_, lo_, b.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, b.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& b) {
  if (b.bits_ > bits_) {
    mpfr_prec_round(lo_, b.bits_, MPFR_RNDD);
    mpfr_prec_round(hi_, b.bits_, MPFR_RNDU);
    bits_ = b.bits_;
  }
  mpfr_sub(lo_, lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, b.lo_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator*=(const Interval& b) {
  *this = *this * b;
  return *this;
}

Interval& Interval::add_scaled(const Interval& v, long k) {
  if (k == 0) return *this;
  // Products are formed at doubled precision so that only the final add rounds.
  mpfr_t t;
  mpfr_init2(t, v.bits_ + 64);
  if (k > 0) {
    mpfr_mul_si(t, v.lo_, k, MPFR_RNDD);
    mpfr_add(lo_, lo_, t, MPFR_RNDD);
    mpfr_mul_si(t, v.hi_, k, MPFR_RNDU);
    mpfr_add(hi_, hi_, t, MPFR_RNDU);
  } else {
    mpfr_mul_si(t, v.hi_, k, MPFR_RNDD);
    mpfr_add(lo_, lo_, t, MPFR_RNDD);
    mpfr_mul_si(t, v.lo_, k, MPFR_RNDU);
    mpfr_add(hi_, hi_, t, MPFR_RNDU);
  }
  mpfr_clear(t);
  return *this;
}

Interval Interval::operator-() const {
  Interval r(bits_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& b) const {
  Interval r(std::max(bits_, b.bits_));
  mpfr_min(r.lo_, lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, hi_, b.hi_, MPFR_RNDU);
  return r;
}

void Interval::clamp_unit() {
  if (mpfr_cmp_si(lo_, -1) < 0) mpfr_set_si(lo_, -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi_, 1) > 0) mpfr_set_si(hi_, 1, MPFR_RNDU);
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.bits(), b.bits()));
  mpfr_add(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.bits(), b.bits()));
  mpfr_sub(r.lo(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t bits = std::max(a.bits(), b.bits());
  Interval r(bits);
  mpfr_t p;
  mpfr_init2(p, bits);
  mpfr_srcptr as[2] = {a.lo(), a.hi()};
  mpfr_srcptr bs[2] = {b.lo(), b.hi()};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(p, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(p, r.lo())) mpfr_set(r.lo(), p, MPFR_RNDD);
      mpfr_mul(p, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(p, r.hi())) mpfr_set(r.hi(), p, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(p);
  return r;
}

Interval interval_add(const Interval& a, const Interval& b) { return a + b; }
Interval interval_sub(const Interval& a, const Interval& b) { return a - b; }
Interval interval_mul(const Interval& a, const Interval& b) { return a * b; }

std::ostream& operator<<(std::ostream& os, const Interval& v) {
  char buf[160];
  mpfr_snprintf(buf, sizeof buf, "[%.17RDg, %.17RUg]", v.lo(), v.hi());
  return os << buf;
}

}  // namespace poolshot
