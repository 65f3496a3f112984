#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "poolshot/classify.hpp"
#include "poolshot/sequences.hpp"

namespace poolshot {

// One line such as "OSO (3, 7) 1 3 3": type tag, (code length, side
// sequence length) and the code numbers.
struct CorpusEntry {
  CodeType type;
  int length = 0;
  int sum = 0;
  CodeSequence code;
  int line = 0;
};

CorpusEntry parse_corpus_line(std::string_view text, int line = 0);
// Blank lines and lines starting with '#' are skipped.
std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<CorpusEntry> load_corpus(const std::string& path);
std::vector<CodeSequence> corpus_codes(const std::vector<CorpusEntry>& entries);

struct CorpusIssue {
  int line;
  std::string message;
};

struct CorpusReport {
  size_t entries = 0;
  std::vector<CorpusIssue> issues;
  std::vector<size_t> type_counts = std::vector<size_t>(5, 0);  // indexed by CodeType
  bool ok() const { return issues.empty(); }
};

// Parses and checks every line: syntax, legality, the (length, sum) tuple
// and the recomputed type.
CorpusReport verify_corpus(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace poolshot
