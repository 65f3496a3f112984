#include "poolshot/error.hpp"
#include "poolshot/prover.hpp"

namespace poolshot {

std::string to_string(PatternKind k) { return k == PatternKind::PatternI ? "I" : "II"; }

CodeSequence pattern_code(PatternKind kind, long n) {
  if (n < 1) throw DomainError("pattern index must be at least 1");
  const int k = static_cast<int>(n);
  if (kind == PatternKind::PatternII) return {1, 2, 1, 2 * k};
  return {1, 1, 2 * k + 1, 1, 2, 1, 2 * k + 1, 1, 1, 4 * k + 2};
}

std::optional<InfinitePattern> infinite_pattern(const Rational& x, const Rational& y) {
  if (x <= 0 || y <= 0 || x + y >= 180) return std::nullopt;
  const Rational q = (180 - 2 * y) / x;  // (n+1) on the line, between n+1 and n+2 inside
  if (q <= 0) return std::nullopt;
  if (q.get_den() == 1) {
    long n = q.get_num().get_si() - 1;
    if (n >= 1 && x < ratio(90, n)) return InfinitePattern{PatternKind::PatternII, n, pattern_code(PatternKind::PatternII, n)};
    return std::nullopt;
  }
  long n = floor(q).get_si() - 1;
  if (n < 1) return std::nullopt;
  // (n+1) x + 2y < 180 < (n+2) x + 2y holds by the choice of n
  if (x < ratio(90, 2 * n + 2)) return InfinitePattern{PatternKind::PatternI, n, pattern_code(PatternKind::PatternI, n)};
  return std::nullopt;
}

}  // namespace poolshot
