#pragma once

#include "poolshot/numeric/interval.hpp"
#include "poolshot/rational.hpp"

namespace poolshot {

// Decimal precision of an evaluation. Determines both the enclosure of pi/2
// and the MPFR working precision.
struct Precision {
  int digits = 7;

  mpfr_prec_t bits() const;
  Precision raised() const { return Precision{digits * 2}; }
  friend bool operator==(const Precision&, const Precision&) = default;
};

// Angle in degrees, held exactly.
struct RationalAngle {
  Rational degrees;
};

// Enclosure of pi/2 at the given precision: with t the truncation of pi/2 to
// digits+1 decimals, [t - 10^-(digits+1), t + 5*10^-(digits+1)].
// At 7 digits this is (1.57079631, 1.57079637).
Interval pi_half(Precision p);
Rational pi_half_lower(Precision p);
Rational pi_half_upper(Precision p);

// Upper bound for the radian measure of a non-negative degree quantity.
Rational degrees_to_radians_upper(const Rational& degrees, Precision p);

Interval enclose_sin(const RationalAngle& angle, Precision p);
Interval enclose_cos(const RationalAngle& angle, Precision p);

struct SinCos {
  Interval sin;
  Interval cos;
};
SinCos enclose_sin_cos(const Rational& degrees, Precision p);

}  // namespace poolshot
