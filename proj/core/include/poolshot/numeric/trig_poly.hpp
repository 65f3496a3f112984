#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "poolshot/numeric/enclose.hpp"

namespace poolshot {

enum class TrigKind : std::uint8_t { Cos = 0, Sin = 1 };

// m*x + n*y + c90*90 degrees.
struct LinearAngle {
  std::int64_t m = 0, n = 0, c90 = 0;

  LinearAngle& operator+=(const LinearAngle& o);
  LinearAngle& operator-=(const LinearAngle& o);
  friend LinearAngle operator+(LinearAngle a, const LinearAngle& b) { return a += b; }
  friend LinearAngle operator-(LinearAngle a, const LinearAngle& b) { return a -= b; }
  friend LinearAngle operator*(std::int64_t k, const LinearAngle& a) { return {k * a.m, k * a.n, k * a.c90}; }
  LinearAngle operator-() const { return {-m, -n, -c90}; }
  friend bool operator==(const LinearAngle&, const LinearAngle&) = default;
};

struct TrigTerm {
  TrigKind kind;
  std::int32_t m, n;
  std::int64_t coeff;
  friend bool operator==(const TrigTerm&, const TrigTerm&) = default;
};

// Sum of coeff * trig((m*x + n*y) / den) over terms, x and y in degrees.
// Terms are kept canonical: sorted, merged, nonzero, the first nonzero of
// (m, n) positive, and cos(0) standing for the constant 1.
class TrigPoly {
 public:
  TrigPoly() = default;
  explicit TrigPoly(int den);

  static TrigPoly constant(std::int64_t c);
  // coeff * trig(angle / den); the constant part of angle/den must be a
  // multiple of 90 degrees and is folded away.
  static TrigPoly term(TrigKind kind, const LinearAngle& angle, std::int64_t coeff = 1, int den = 1);

  int den() const { return den_; }
  const std::vector<TrigTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  // Same function with arguments written over the denominator den.
  TrigPoly with_den(int den) const;

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  TrigPoly& operator*=(std::int64_t k);
  TrigPoly operator-() const;
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(std::int64_t k, TrigPoly a) { return a *= k; }
  friend bool operator==(const TrigPoly& a, const TrigPoly& b);

  std::string to_string() const;

  // Builds from unsorted terms; merges and canonicalizes.
  static TrigPoly from_terms(std::vector<TrigTerm> terms, int den);

 private:
  void reduce_den();
  int den_ = 1;
  std::vector<TrigTerm> terms_;
};

// 2*f*g, expanded with the product-to-sum identities.
TrigPoly product2(const TrigPoly& f, const TrigPoly& g);

// One product coeff * sin(side) * trig(angle); a missing side means 1.
struct SideTrigProduct {
  std::int64_t coeff = 1;
  std::optional<LinearAngle> side;
  TrigKind kind = TrigKind::Cos;
  LinearAngle angle;
};

// Twice the sum of the products, as integer sine/cosine sums.
TrigPoly simplify(const std::vector<SideTrigProduct>& expr);

// G = sum |u| (|m| + |n|) / den; bounds |f_x| + |f_y| with x, y in radians.
struct GradientBound {
  Rational G;
};
GradientBound gradient_bound(const TrigPoly& f);

// Caches sin/cos enclosures of (m*x + n*y)/den at one point. Not thread safe;
// use one per thread.
class TrigEvaluator {
 public:
  TrigEvaluator(Rational x, Rational y, Precision p);

  const SinCos& at(std::int32_t m, std::int32_t n, int den);
  Interval eval(const TrigPoly& f);
  Precision precision() const { return p_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

 private:
  Rational x_, y_;
  Precision p_;
  std::unordered_map<std::uint64_t, SinCos> cache_;
};

Interval eval(const TrigPoly& f, const RationalAngle& x, const RationalAngle& y, Precision p);
double eval_double(const TrigPoly& f, double x_deg, double y_deg);

// f restricted to the line x = 90*c90 - b*y, written in y alone.
TrigPoly eliminate_x(const TrigPoly& f, std::int64_t b, std::int64_t c90);

// Parses sums such as "-2sin(y)-sin(3y)+sin(5y)-sin(2x-7y)" or "1-cos(2y)".
TrigPoly parse_trig_poly(std::string_view text);

}  // namespace poolshot
