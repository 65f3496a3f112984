#include "poolshot/sequences.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

#include "poolshot/error.hpp"

namespace poolshot {

char to_char(Angle a) { return "XYZ"[static_cast<int>(a)]; }

Angle angle_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'X': return Angle::X;
    case 'Y': return Angle::Y;
    case 'Z': return Angle::Z;
    default: throw DomainError(std::string("unknown angle symbol '") + c + "'");
  }
}

Angle third_angle(Angle a, Angle b) {
  if (a == b) throw DomainError("angle symbols must differ");
  return static_cast<Angle>(3 - static_cast<int>(a) - static_cast<int>(b));
}

std::string SideSequence::to_string() const {
  std::string s;
  for (int v : symbols) s += static_cast<char>('0' + v);
  return s;
}

SideSequence parse_side_sequence(std::string_view digits, bool repeating) {
  SideSequence s;
  s.repeating = repeating;
  for (char c : digits) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c < '1' || c > '3') throw ParseError(std::string("side label must be 1, 2 or 3, got '") + c + "'");
    s.symbols.push_back(c - '0');
  }
  return s;
}

CodeSequence parse_code(std::string_view text) {
  CodeSequence code;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("code numbers must be positive integers, got '" + tok + "'");
    int v = std::stoi(tok);
    if (v <= 0) throw ParseError("code numbers must be positive, got '" + tok + "'");
    code.push_back(v);
  }
  if (code.empty()) throw ParseError("empty code sequence");
  return code;
}

std::string format_code(const CodeSequence& code) {
  std::string s;
  for (size_t i = 0; i < code.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(code[i]);
  }
  return s;
}

int code_sum(const CodeSequence& code) { return std::accumulate(code.begin(), code.end(), 0); }

AlphabetSequence alphabet(const CodeSequence& code) {
  AlphabetSequence a;
  for (int c : code) a.letters += (c % 2 ? 'O' : 'E');
  return a;
}

std::map<int, Angle> AngleAssignment::top() const {
  std::map<int, Angle> m;
  for (size_t i = 0; i < symbols.size(); i += 2) m[static_cast<int>(i) + 1] = symbols[i];
  return m;
}

std::map<int, Angle> AngleAssignment::bottom() const {
  std::map<int, Angle> m;
  for (size_t i = 1; i < symbols.size(); i += 2) m[static_cast<int>(i) + 1] = symbols[i];
  return m;
}

std::string AngleAssignment::to_string() const {
  std::string s;
  for (Angle a : symbols) s += to_char(a);
  return s;
}

Angle vertex_angle(int a, int b) {
  if (a == b || a < 1 || a > 3 || b < 1 || b > 3) throw DomainError("sides must be distinct labels in 1..3");
  int lo = std::min(a, b), hi = std::max(a, b);
  if (lo == 1 && hi == 2) return Angle::Y;
  if (lo == 2 && hi == 3) return Angle::Z;
  return Angle::X;
}

bool is_legal_side_sequence(const SideSequence& seq) {
  const auto& s = seq.symbols;
  if (s.empty()) throw DomainError("empty side sequence");
  for (int v : s)
    if (v < 1 || v > 3) return false;
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) return false;
  if (seq.repeating && s.size() > 1 && s.front() == s.back()) return false;
  if (seq.repeating && s.size() == 1) return false;
  std::array<bool, 4> seen{};
  for (int v : s) seen[v] = true;
  return seen[1] && seen[2] && seen[3];
}

namespace {

void require_legal(const SideSequence& seq) {
  if (!is_legal_side_sequence(seq)) throw DomainError("illegal side sequence " + seq.to_string());
}

template <class T>
std::vector<T> rotated(const std::vector<T>& v, size_t r) {
  std::vector<T> out(v.begin() + static_cast<long>(r), v.end());
  out.insert(out.end(), v.begin(), v.begin() + static_cast<long>(r));
  return out;
}

template <class T>
std::vector<T> min_rotation_reversal(const std::vector<T>& v) {
  std::vector<T> best = v;
  std::vector<T> rev(v.rbegin(), v.rend());
  for (size_t r = 0; r < v.size(); ++r) {
    best = std::min(best, rotated(v, r));
    best = std::min(best, rotated(rev, r));
  }
  return best;
}

}  // namespace

SideSequence standard_form_side(const SideSequence& seq) {
  require_legal(seq);
  return SideSequence{min_rotation_reversal(seq.symbols), seq.repeating};
}

SideSequence extra_standard_form_side(const SideSequence& seq) {
  require_legal(seq);
  std::array<int, 3> perm{1, 2, 3};
  std::vector<int> best;
  do {
    std::vector<int> relabeled;
    for (int v : seq.symbols) relabeled.push_back(perm[v - 1]);
    auto cand = min_rotation_reversal(relabeled);
    if (best.empty() || cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SideSequence{best, seq.repeating};
}

CodeAngles side_to_code(const SideSequence& seq) {
  require_legal(seq);
  const auto& s = seq.symbols;
  const size_t n = s.size();
  std::vector<Angle> ang(n);
  for (size_t i = 0; i < n; ++i) ang[i] = vertex_angle(s[i], s[(i + 1) % n]);
  // rotate the tail run that continues the head run to the front
  size_t shift = 0;
  while (shift < n && ang[n - 1 - shift] == ang[0]) ++shift;
  if (shift == n) throw DomainError("side sequence uses a single vertex");
  std::vector<Angle> word = rotated(ang, n - shift);
  CodeAngles out;
  for (size_t i = 0; i < n;) {
    size_t j = i;
    while (j < n && word[j] == word[i]) ++j;
    out.codes.push_back(static_cast<int>(j - i));
    out.angles.push_back(word[i]);
    i = j;
  }
  return out;
}

SideSequence code_to_side(const CodeSequence& code, std::pair<int, int> start) {
  auto [a, b] = start;
  if (a == b || a < 1 || a > 3 || b < 1 || b > 3) throw DomainError("start pair must be two distinct side labels");
  if (code.empty()) throw DomainError("empty code sequence");
  for (int c : code)
    if (c <= 0) throw DomainError("code numbers must be positive");
  std::vector<int> s{a};
  int p = a, q = b;  // current alternating pair
  for (int c : code) {
    for (int j = 0; j < c; ++j) {
      int last = s.back();
      s.push_back(last == p ? q : p);
    }
    int last = s.back();
    int other = 6 - p - q;
    p = last;
    q = other;
  }
  if (s.back() != a || p != a || q != b)
    throw IllegalCodeError("code " + format_code(code) + " does not close up");
  s.pop_back();
  SideSequence out{s, true};
  if (!is_legal_side_sequence(out)) throw IllegalCodeError("code " + format_code(code) + " expands to an illegal side sequence");
  return out;
}

CodeSequence standard_form_code(const CodeSequence& code) {
  if (code.empty()) throw DomainError("empty code sequence");
  return min_rotation_reversal(code);
}

std::vector<int> automaton_walk(const AlphabetSequence& alpha) {
  // states: 0 xy, 1 yz, 2 zx, 3 yx, 4 zy, 5 xz
  static constexpr int odd[6] = {1, 2, 0, 5, 3, 4};
  static constexpr int even[6] = {3, 4, 5, 0, 1, 2};
  std::vector<int> walk{0};
  for (char c : alpha.letters) {
    int s = walk.back();
    if (c == 'O') walk.push_back(odd[s]);
    else if (c == 'E') walk.push_back(even[s]);
    else throw DomainError(std::string("alphabet letters must be O or E, got '") + c + "'");
  }
  return walk;
}

std::string automaton_trace(const AlphabetSequence& alpha) {
  static const char* names[6] = {"xy", "yz", "zx", "yx", "zy", "xz"};
  std::vector<int> walk = automaton_walk(alpha);
  std::string out = alpha.letters + ":";
  for (size_t i = 0; i < walk.size(); ++i) {
    out += i == 0 ? " " : " -> ";
    out += names[walk[i]];
  }
  return out;
}

bool automaton_legal(const AlphabetSequence& alpha) {
  if (alpha.letters.empty()) return false;
  return automaton_walk(alpha).back() == 0;
}

const std::vector<std::string> kReductionRules = {"EE", "OOO", "OEOE", "EOEO", "OOEOOE", "OEOOEO", "EOOEOO"};

bool reduction_legal(const AlphabetSequence& alpha, const std::vector<std::string>& rules) {
  std::string w = alpha.letters;
  if (w.empty()) return false;
  while (!w.empty()) {
    const size_t n = w.size();
    bool reduced = false;
    for (const auto& r : rules) {
      const size_t L = r.size();
      if (L > n) continue;
      for (size_t i = 0; i < n && !reduced; ++i) {
        bool match = true;
        for (size_t j = 0; j < L && match; ++j) match = w[(i + j) % n] == r[j];
        if (!match) continue;
        std::string rest;
        for (size_t j = 0; j < n - L; ++j) rest += w[(i + L + j) % n];
        w = rest;
        reduced = true;
      }
      if (reduced) break;
    }
    if (!reduced) return false;
  }
  return true;
}

bool is_legal_code(const CodeSequence& code) {
  if (code.empty()) return false;
  for (int c : code)
    if (c <= 0) return false;
  if (!automaton_legal(alphabet(code))) return false;
  try {
    code_to_side(code, {1, 2});
  } catch (const IllegalCodeError&) {
    return false;
  }
  return true;
}

void require_legal_code(const CodeSequence& code) {
  if (code.empty()) throw IllegalCodeError("empty code sequence");
  AlphabetSequence a = alphabet(code);
  if (!automaton_legal(a))
    throw IllegalCodeError("code " + format_code(code) + " rejected by the automaton (" + automaton_trace(a) + ")");
  code_to_side(code, {1, 2});
}

AngleAssignment assign_angles(const CodeSequence& code, Angle first, Angle second) {
  if (first == second) throw DomainError("first and second angle symbols must differ");
  const size_t k = code.size();
  if (k == 0) throw DomainError("empty code sequence");
  std::vector<Angle> u{first, second};
  while (u.size() < k + 2) {
    size_t i = u.size() - 2;
    Angle a = u[i], b = u[i + 1];
    int next_code = code[(i + 1) % k];
    u.push_back(next_code % 2 == 0 ? a : third_angle(a, b));
  }
  if (u[k] != u[0] || u[k + 1] != u[1])
    throw IllegalCodeError("angle assignment of " + format_code(code) + " does not wrap around");
  u.resize(k);
  return AngleAssignment{u};
}

std::vector<std::pair<Angle, Angle>> assignment_choices() {
  return {{Angle::X, Angle::Y}, {Angle::X, Angle::Z}, {Angle::Y, Angle::X},
          {Angle::Y, Angle::Z}, {Angle::Z, Angle::X}, {Angle::Z, Angle::Y}};
}

CodeSequence doubled_if_odd(const CodeSequence& code) {
  if (code.size() % 2 == 0) return code;
  CodeSequence out = code;
  out.insert(out.end(), code.begin(), code.end());
  return out;
}

}  // namespace poolshot
