#pragma once

#include <mpfr.h>

#include <iosfwd>

#include "poolshot/rational.hpp"

namespace poolshot {

// Closed interval with MPFR endpoints. Every operation rounds outward, so the
// result encloses the exact result on the exact endpoints.
class Interval {
 public:
  explicit Interval(mpfr_prec_t bits = 64);
  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t bits);
  Interval(long lo, long hi, mpfr_prec_t bits);
  static Interval point(const Rational& v, mpfr_prec_t bits);
  static Interval point(long v, mpfr_prec_t bits);

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  mpfr_prec_t bits() const { return bits_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

  Rational lower() const;
  Rational upper() const;
  Rational width() const;
  Rational midpoint() const;
  double lower_double() const;  // rounded down
  double upper_double() const;  // rounded up
  double mid_double() const;

  bool contains(const Rational& v) const;
  bool contains(const Interval& other) const;
  bool overlaps(const Interval& other) const;
  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }
  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

  Interval& operator+=(const Interval& b);
  Interval& operator-=(const Interval& b);
  Interval& operator*=(const Interval& b);
  // this += k * v
  Interval& add_scaled(const Interval& v, long k);
  Interval operator-() const;
  // Enclosure of the hull of the two intervals.
  Interval hull(const Interval& b) const;
  void clamp_unit();

 private:
  void init(mpfr_prec_t bits);
  mpfr_prec_t bits_;
  mpfr_t lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);

Interval interval_add(const Interval& a, const Interval& b);
Interval interval_sub(const Interval& a, const Interval& b);
Interval interval_mul(const Interval& a, const Interval& b);

// Exact value of an MPFR number.
Rational to_rational(mpfr_srcptr v);

std::ostream& operator<<(std::ostream& os, const Interval& v);

}  // namespace poolshot
