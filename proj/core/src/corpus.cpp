#include "poolshot/corpus.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "poolshot/error.hpp"

namespace poolshot {

namespace {

const std::regex& line_pattern() {
  static const std::regex re(R"(^\s*([A-Z]+)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*([0-9 \t]+?)\s*$)");
  return re;
}

bool skippable(const std::string& s) {
  auto p = s.find_first_not_of(" \t\r");
  return p == std::string::npos || s[p] == '#';
}

std::string trace(const CodeSequence& code) { return automaton_trace(alphabet(code)); }

}  // namespace

CorpusEntry parse_corpus_line(std::string_view text, int line) {
  std::string s(text);
  if (!s.empty() && s.back() == '\r') s.pop_back();
  std::smatch m;
  if (!std::regex_match(s, m, line_pattern())) throw ParseError("malformed corpus line '" + s + "'", line);
  CorpusEntry e;
  try {
    e.type = parse_code_type(m[1]);
  } catch (const ParseError&) {
    throw ParseError("unknown code type '" + m[1].str() + "'", line);
  }
  e.length = std::stoi(m[2]);
  e.sum = std::stoi(m[3]);
  std::istringstream in(m[4].str());
  int v;
  while (in >> v) {
    if (v <= 0) throw ParseError("code numbers must be positive", line);
    e.code.push_back(v);
  }
  if (e.code.empty()) throw ParseError("corpus line has no code numbers", line);
  e.line = line;
  return e;
}

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (skippable(line)) continue;
    out.push_back(parse_corpus_line(line, n));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<CorpusEntry> load_corpus(const std::string& path) { return parse_corpus(read_file(path)); }

std::vector<CodeSequence> corpus_codes(const std::vector<CorpusEntry>& entries) {
  std::vector<CodeSequence> out;
  for (const auto& e : entries) out.push_back(e.code);
  return out;
}

CorpusReport verify_corpus(std::string_view text) {
  CorpusReport rep;
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (skippable(line)) continue;
    CorpusEntry e;
    try {
      e = parse_corpus_line(line, n);
    } catch (const ParseError& err) {
      rep.issues.push_back({n, err.what()});
      continue;
    }
    ++rep.entries;
    if (static_cast<int>(e.code.size()) != e.length)
      rep.issues.push_back({n, "declared length " + std::to_string(e.length) + " but the code has " +
                                   std::to_string(e.code.size()) + " numbers"});
    if (code_sum(e.code) != e.sum)
      rep.issues.push_back({n, "declared sum " + std::to_string(e.sum) + " but the code sums to " +
                                   std::to_string(code_sum(e.code))});
    if (!is_legal_code(e.code)) {
      std::string why = automaton_legal(alphabet(e.code)) ? "its side sequence does not close up"
                                                          : "the automaton rejects " + trace(e.code);
      rep.issues.push_back({n, "illegal code " + format_code(e.code) + ": " + why});
      continue;
    }
    CodeType t = classify_code(e.code);
    ++rep.type_counts[static_cast<size_t>(t)];
    if (t != e.type)
      rep.issues.push_back({n, "declared type " + to_string(e.type) + " but the code classifies as " + to_string(t)});
  }
  return rep;
}

}  // namespace poolshot
