#include "poolshot/rational.hpp"

#include <algorithm>
#include <cctype>

#include "poolshot/error.hpp"

namespace poolshot {

namespace {

mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Rational ratio(long n, long d) {
  if (d == 0) throw DomainError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational ratio(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw DomainError("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw ParseError("empty number");
  bool neg = false;
  size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  if (body.empty()) throw ParseError("malformed number '" + s + "'");
  Rational out;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    auto digits = [](const std::string& t) {
      return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if (!digits(num) || !digits(den)) throw ParseError("malformed fraction '" + s + "'");
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    out = Rational(mpz_class(num, 10), d);
    out.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string::npos) {
      try {
        exponent = std::stol(body.substr(e + 1));
      } catch (...) {
        throw ParseError("malformed exponent in '" + s + "'");
      }
      body = body.substr(0, e);
    }
    std::string digits;
    long frac = 0;
    bool dot = false;
    for (char c : body) {
      if (c == '.') {
        if (dot) throw ParseError("malformed number '" + s + "'");
        dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (dot) ++frac;
      } else {
        throw ParseError("malformed number '" + s + "'");
      }
    }
    if (digits.empty()) throw ParseError("malformed number '" + s + "'");
    long scale = exponent - frac;
    mpz_class n(digits, 10);
    if (scale >= 0) {
      out = Rational(n * pow10(scale));
    } else {
      out = Rational(n, pow10(-scale));
      out.canonicalize();
    }
  }
  return neg ? Rational(-out) : out;
}

std::string to_string(const Rational& v) {
  mpz_class den = v.get_den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return v.get_str();
  int places = std::max(twos, fives);
  mpz_class scaled = v.get_num() * pow10(places) / v.get_den();
  bool neg = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  return neg ? "-" + digits : digits;
}

std::string to_decimal_floor(const Rational& v, int significant) {
  if (v == 0) return "0";
  Rational a = abs(v);
  // exponent e with 10^e <= a < 10^(e+1)
  long e = static_cast<long>(a.get_num().get_str().size()) - static_cast<long>(a.get_den().get_str().size());
  auto p10 = [](long k) { return k >= 0 ? Rational(pow10(k)) : Rational(1, pow10(-k)); };
  while (a < p10(e)) --e;
  while (a >= p10(e + 1)) ++e;
  long shift = significant - 1 - e;
  Rational scaled = v * p10(shift);
  mpz_class q = floor(scaled);
  Rational back = Rational(q) / p10(shift);
  return to_string(back);
}

mpz_class floor(const Rational& v) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

double to_double(const Rational& v) { return v.get_d(); }

}  // namespace poolshot
