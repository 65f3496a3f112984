#include <algorithm>
#include <atomic>
#include <thread>

#include "certify_detail.hpp"
#include "poolshot/error.hpp"

namespace poolshot {

namespace {

constexpr int kMarginDigits = 9;

struct Node {
  Square sq;
  std::string path;
  std::vector<size_t> ranking;  // systems worth trying first
};

enum class Outcome { Outside, Certified, Triple, Split, Failed };

struct NodeResult {
  Outcome outcome = Outcome::Outside;
  CoverRecord record;
  std::vector<size_t> ranking;
  size_t calls = 0;
  bool escalated = false;
};

Rational floor_decimal(const Rational& v) { return parse_rational(to_decimal_floor(v, kMarginDigits)); }

struct TripleCandidate {
  size_t r1, r2, r3;
};

class Engine {
 public:
  Engine(const std::vector<Point2>& target, const std::vector<std::shared_ptr<RegionSystem>>& systems,
         const CoverOptions& opt)
      : target_(counterclockwise(target)), systems_(systems), opt_(opt) {
    for (size_t i = 0; i < systems_.size(); ++i) {
      if (systems_[i]->empty) continue;
      (systems_[i]->is_line() ? lines_ : areas_).push_back(i);
    }
  }

  NodeResult process(const Node& node, int depth) const {
    NodeResult res;
    if (!overlaps_with_area(node.sq, target_)) return res;
    const Square& sq = node.sq;
    const Precision p = opt_.precision;
    const Precision p2 = p.raised();
    TrigEvaluator ev(sq.cx, sq.cy, p);
    std::optional<TrigEvaluator> ev2;
    const Rational r_rad = degrees_to_radians_upper(sq.r, p);
    const Rational r_rad2 = degrees_to_radians_upper(sq.r, p2);

    std::vector<size_t> order = node.ranking;
    std::vector<char> ranked(systems_.size(), 0);
    for (size_t i : order) ranked[i] = 1;
    for (size_t i : areas_)
      if (!ranked[i]) order.push_back(i);

    std::vector<std::pair<double, size_t>> scored;
    for (size_t i : order) {
      const RegionSystem& sys = *systems_[i];
      if (!square_may_fit(sys, sq) || !square_in_polygon(sys, sq)) continue;
      sys.ensure_complete();
      ++res.calls;
      CertifyResult c = detail::certify_at(sys, ev, r_rad);
      int digits = p.digits;
      if (c.verdict == Verdict::Indeterminate && opt_.escalate) {
        if (!ev2) ev2.emplace(sq.cx, sq.cy, p2);
        ++res.calls;
        CertifyResult c2 = detail::certify_at(sys, *ev2, r_rad2);
        if (c2.passed()) {
          c = std::move(c2);
          digits = p2.digits;
          res.escalated = true;
        }
      }
      if (c.passed()) {
        res.outcome = Outcome::Certified;
        res.record = {RecordKind::Square, sq, node.path, i, 0, 0, floor_decimal(c.margin), digits};
        return res;
      }
      scored.push_back({c.score, i});
    }
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [s, i] : scored) res.ranking.push_back(i);

    if (depth >= opt_.max_depth) {
      if (opt_.use_triples) {
        if (auto t = try_triples(sq, res.ranking); t) {
          res.outcome = Outcome::Triple;
          res.record = *t;
          res.record.path = node.path;
          return res;
        }
      }
      res.outcome = Outcome::Failed;
      res.record = {RecordKind::Failure, sq, node.path, 0, 0, 0, Rational(0), p.digits};
      return res;
    }
    res.outcome = Outcome::Split;
    return res;
  }

  std::optional<CoverRecord> try_triples(const Square& sq, const std::vector<size_t>& near) const {
    for (size_t l : lines_) {
      const RegionSystem& r3 = *systems_[l];
      if (!square_may_fit(r3, sq)) continue;
      for (size_t a = 0; a < near.size(); ++a)
        for (size_t b = 0; b < near.size(); ++b) {
          if (a == b) continue;
          TripleOutcome t = triple_rule(sq, *systems_[near[a]], *systems_[near[b]], r3, opt_.precision);
          if (t.verdict == TripleVerdict::Pass)
            return CoverRecord{RecordKind::Triple, sq, "", near[a], near[b], l, floor_decimal(t.margin),
                               opt_.precision.digits};
        }
    }
    return std::nullopt;
  }

  CoverResult run() {
    CoverResult out;
    out.target = target_;
    out.digits = opt_.precision.digits;
    for (const auto& s : systems_) out.systems.push_back({s->code_id, s->asg.to_string()});
    if (target_.size() < 3 || signed_area2(target_) == 0) throw DomainError("target polygon has no area");

    std::vector<Node> level{{bounding_square(target_), "", {}}};
    if (areas_.empty()) {
      out.records.push_back({RecordKind::Failure, level[0].sq, "", 0, 0, 0, Rational(0), opt_.precision.digits});
      out.stats.failures = 1;
      return out;
    }
    const unsigned threads = static_cast<unsigned>(std::max(1, opt_.threads));
    for (int depth = 0; !level.empty(); ++depth) {
      std::vector<NodeResult> results(level.size());
      std::atomic<size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      auto worker = [&] {
        for (size_t i = next++; i < level.size(); i = next++) {
          try {
            results[i] = process(level[i], depth);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      };
      if (threads == 1 || level.size() < 2) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<size_t>(threads, level.size()); ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
      if (failure) std::rethrow_exception(failure);

      std::vector<Node> next_level;
      for (size_t i = 0; i < level.size(); ++i) {
        NodeResult& r = results[i];
        out.stats.certify_calls += r.calls;
        if (r.escalated && r.outcome == Outcome::Certified && r.record.digits != opt_.precision.digits)
          ++out.stats.escalations;
        switch (r.outcome) {
          case Outcome::Outside: break;
          case Outcome::Split: {
            auto kids = level[i].sq.children();
            for (size_t c = 0; c < kids.size(); ++c)
              next_level.push_back({kids[c], level[i].path + static_cast<char>('0' + c), r.ranking});
            break;
          }
          default: {
            if (r.outcome == Outcome::Certified) ++out.stats.squares;
            else if (r.outcome == Outcome::Triple) ++out.stats.triples;
            else ++out.stats.failures;
            if (r.outcome != Outcome::Failed &&
                (!out.stats.min_margin || r.record.margin < *out.stats.min_margin))
              out.stats.min_margin = r.record.margin;
            out.stats.max_depth = std::max(out.stats.max_depth, depth);
            out.records.push_back(std::move(r.record));
          }
        }
      }
      level = std::move(next_level);
    }
    std::sort(out.records.begin(), out.records.end(),
              [](const CoverRecord& a, const CoverRecord& b) { return a.path < b.path; });
    return out;
  }

 private:
  std::vector<Point2> target_;
  const std::vector<std::shared_ptr<RegionSystem>>& systems_;
  CoverOptions opt_;
  std::vector<size_t> areas_, lines_;
};

}  // namespace

CoverResult cover(const std::vector<Point2>& target, const std::vector<std::shared_ptr<RegionSystem>>& systems,
                  const CoverOptions& opt) {
  if (opt.max_depth < 0) throw DomainError("max depth must be non-negative");
  if (opt.precision.digits < 7) throw DomainError("precision must be at least 7 digits");
  Engine engine(target, systems, opt);
  return engine.run();
}

CoverResult cover(const std::vector<Point2>& target, const std::vector<CodeSequence>& corpus,
                  const CoverOptions& opt) {
  auto systems = corpus_systems(corpus);
  return cover(target, systems, opt);
}

}  // namespace poolshot
