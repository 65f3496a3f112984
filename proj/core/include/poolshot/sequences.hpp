#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace poolshot {

// Angles of the triangle: X at vertex A, Y at B, Z at C.
enum class Angle : unsigned char { X = 0, Y = 1, Z = 2 };

char to_char(Angle a);
Angle angle_from_char(char c);
Angle third_angle(Angle a, Angle b);

// Sides: 1 = AB, 2 = BC, 3 = AC.
struct SideSequence {
  std::vector<int> symbols;
  bool repeating = true;

  std::string to_string() const;
  friend bool operator==(const SideSequence&, const SideSequence&) = default;
};

SideSequence parse_side_sequence(std::string_view digits, bool repeating = true);

using CodeSequence = std::vector<int>;

CodeSequence parse_code(std::string_view text);
std::string format_code(const CodeSequence& code);
int code_sum(const CodeSequence& code);

struct AlphabetSequence {
  std::string letters;  // over {O, E}
  friend bool operator==(const AlphabetSequence&, const AlphabetSequence&) = default;
};

AlphabetSequence alphabet(const CodeSequence& code);

// Angle symbol per code position, 0-based. Position i is a top entry when i is
// even (1-based odd) and a bottom entry otherwise.
struct AngleAssignment {
  std::vector<Angle> symbols;

  std::map<int, Angle> top() const;     // 1-based index -> symbol
  std::map<int, Angle> bottom() const;  // 1-based index -> symbol
  Angle operator[](size_t i) const { return symbols[i % symbols.size()]; }
  size_t size() const { return symbols.size(); }
  std::string to_string() const;
  friend bool operator==(const AngleAssignment&, const AngleAssignment&) = default;
};

// The angle at the vertex shared by two distinct sides.
Angle vertex_angle(int side_a, int side_b);

bool is_legal_side_sequence(const SideSequence& seq);
SideSequence standard_form_side(const SideSequence& seq);
SideSequence extra_standard_form_side(const SideSequence& seq);

struct CodeAngles {
  CodeSequence codes;
  std::vector<Angle> angles;
};
CodeAngles side_to_code(const SideSequence& seq);
SideSequence code_to_side(const CodeSequence& code, std::pair<int, int> start);

CodeSequence standard_form_code(const CodeSequence& code);

bool automaton_legal(const AlphabetSequence& alpha);
// States visited from xy, one per letter.
std::vector<int> automaton_walk(const AlphabetSequence& alpha);
std::string automaton_trace(const AlphabetSequence& alpha);

// Cyclic deletion of the listed substrings until empty or stuck.
extern const std::vector<std::string> kReductionRules;
bool reduction_legal(const AlphabetSequence& alpha, const std::vector<std::string>& rules = kReductionRules);

// Automaton acceptance plus a closing expansion from the start pair 12.
bool is_legal_code(const CodeSequence& code);
// Throws IllegalCodeError with the reason.
void require_legal_code(const CodeSequence& code);

AngleAssignment assign_angles(const CodeSequence& code, Angle first, Angle second);

// All six ordered (first, second) choices.
std::vector<std::pair<Angle, Angle>> assignment_choices();

// The code repeated to even length (odd codes are traversed twice).
CodeSequence doubled_if_odd(const CodeSequence& code);

}  // namespace poolshot
