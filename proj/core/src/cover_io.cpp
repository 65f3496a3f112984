#include <map>
#include <sstream>

#include "poolshot/error.hpp"
#include "poolshot/prover.hpp"

namespace poolshot {

namespace {

constexpr const char* kHeader = "poolshot-cover 1";

std::string path_field(const std::string& p) { return p.empty() ? "-" : p; }
std::string path_value(const std::string& p) { return p == "-" ? "" : p; }

}  // namespace

std::string write_cover(const CoverResult& r) {
  std::ostringstream os;
  os << kHeader << "\n";
  os << "precision " << r.digits << "\n";
  os << "target";
  for (const auto& p : r.target) os << " " << to_string(p.x) << " " << to_string(p.y);
  os << "\n";
  for (size_t i = 0; i < r.systems.size(); ++i)
    os << "system " << i << " " << r.systems[i].code_index << " " << r.systems[i].asg << "\n";
  for (const auto& rec : r.records) {
    const auto& s = rec.square;
    switch (rec.kind) {
      case RecordKind::Square:
        os << "square " << to_string(s.cx) << " " << to_string(s.cy) << " " << to_string(s.r) << " "
           << r.systems.at(rec.system).code_index << " " << to_string(rec.margin) << " " << r.systems.at(rec.system).asg
           << " " << rec.system << " " << rec.digits << " " << path_field(rec.path) << "\n";
        break;
      case RecordKind::Triple:
        os << "triple " << to_string(s.cx) << " " << to_string(s.cy) << " " << to_string(s.r) << " " << rec.system
           << " " << rec.system2 << " " << rec.system3 << " " << to_string(rec.margin) << " " << rec.digits << " "
           << path_field(rec.path) << "\n";
        break;
      case RecordKind::Failure:
        os << "fail " << to_string(s.cx) << " " << to_string(s.cy) << " " << to_string(s.r) << " " << rec.digits
           << " " << path_field(rec.path) << "\n";
        break;
    }
  }
  const auto& st = r.stats;
  os << "summary squares " << st.squares << " triples " << st.triples << " failures " << st.failures << " max_depth "
     << st.max_depth << " min_margin " << (st.min_margin ? to_string(*st.min_margin) : "none") << " escalations "
     << st.escalations << " certify_calls " << st.certify_calls << " complete " << (r.complete() ? "yes" : "no")
     << "\n";
  return os.str();
}

CoverResult parse_cover(const std::string& text) {
  CoverResult r;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  bool header = false, summary = false;
  auto fail = [&](const std::string& what) -> ParseError { return ParseError(what, static_cast<int>(lineno)); };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kHeader) throw fail("missing cover header");
      header = true;
      continue;
    }
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    auto word = [&]() {
      std::string w;
      if (!(ls >> w)) throw fail("truncated '" + tag + "' line");
      return w;
    };
    auto number = [&]() {
      try {
        return parse_rational(word());
      } catch (const ParseError&) {
        throw fail("bad number in '" + tag + "' line");
      }
    };
    auto index = [&]() {
      std::string w = word();
      try {
        size_t pos = 0;
        unsigned long v = std::stoul(w, &pos);
        if (pos != w.size()) throw std::invalid_argument(w);
        return static_cast<size_t>(v);
      } catch (const std::exception&) {
        throw fail("bad index '" + w + "'");
      }
    };
    if (tag == "precision") {
      r.digits = static_cast<int>(index());
    } else if (tag == "target") {
      std::string a;
      std::vector<Rational> vals;
      while (ls >> a) vals.push_back(parse_rational(a));
      if (vals.size() % 2 != 0 || vals.size() < 6) throw fail("target needs at least three vertices");
      for (size_t i = 0; i < vals.size(); i += 2) r.target.push_back({vals[i], vals[i + 1]});
    } else if (tag == "system") {
      size_t i = index();
      if (i != r.systems.size()) throw fail("systems out of order");
      size_t code = index();
      r.systems.push_back({code, word()});
    } else if (tag == "square") {
      CoverRecord rec;
      rec.kind = RecordKind::Square;
      rec.square.cx = number();
      rec.square.cy = number();
      rec.square.r = number();
      size_t code = index();
      rec.margin = number();
      std::string asg = word();
      rec.system = index();
      if (rec.system >= r.systems.size() || r.systems[rec.system].code_index != code ||
          r.systems[rec.system].asg != asg)
        throw fail("square names an unknown system");
      rec.digits = static_cast<int>(index());
      rec.path = path_value(word());
      r.records.push_back(std::move(rec));
    } else if (tag == "triple") {
      CoverRecord rec;
      rec.kind = RecordKind::Triple;
      rec.square.cx = number();
      rec.square.cy = number();
      rec.square.r = number();
      rec.system = index();
      rec.system2 = index();
      rec.system3 = index();
      rec.margin = number();
      rec.digits = static_cast<int>(index());
      rec.path = path_value(word());
      r.records.push_back(std::move(rec));
    } else if (tag == "fail") {
      CoverRecord rec;
      rec.kind = RecordKind::Failure;
      rec.square.cx = number();
      rec.square.cy = number();
      rec.square.r = number();
      rec.digits = static_cast<int>(index());
      rec.path = path_value(word());
      r.records.push_back(std::move(rec));
    } else if (tag == "summary") {
      std::map<std::string, std::string> kv;
      std::string k, v;
      while (ls >> k >> v) kv[k] = v;
      auto get = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw fail("summary lacks '" + key + "'");
        return it->second;
      };
      try {
        r.stats.squares = std::stoul(get("squares"));
        r.stats.triples = std::stoul(get("triples"));
        r.stats.failures = std::stoul(get("failures"));
        r.stats.max_depth = std::stoi(get("max_depth"));
        r.stats.escalations = std::stoul(get("escalations"));
        r.stats.certify_calls = std::stoul(get("certify_calls"));
      } catch (const std::logic_error&) {
        throw fail("bad summary value");
      }
      std::string mm = get("min_margin");
      if (mm != "none") r.stats.min_margin = parse_rational(mm);
      summary = true;
    } else {
      throw fail("unknown record '" + tag + "'");
    }
  }
  if (!header) throw ParseError("empty cover file", static_cast<int>(lineno));
  if (!summary) throw ParseError("cover file has no summary", static_cast<int>(lineno));
  return r;
}

}  // namespace poolshot
