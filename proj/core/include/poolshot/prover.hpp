#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "poolshot/classify.hpp"
#include "poolshot/polygon.hpp"
#include "poolshot/tower.hpp"

namespace poolshot {

// f > 0, with G its gradient bound.
struct Inequality {
  TrigPoly f;
  Rational G;
  std::string label;
};

Inequality make_inequality(TrigPoly f, std::string label = {});

// The tower part of a region: ad - bc > 0 for every key blue/black pair.
// Each key point P carries s(P) = 2 (X2(P) d - Y2(P) c), so the pair
// inequality is s(black) - s(blue) > 0.
struct PairSystem {
  std::shared_ptr<const SymbolicTower> tower;
  TrigPoly c, d;
  bool from_theta = false;
  std::vector<size_t> blue, black;    // vertex ids
  std::vector<Rational> G_blue, G_black;

  TrigPoly point_poly(size_t vertex) const;
  TrigPoly pair_poly(size_t blue_index, size_t black_index) const;
};

struct RegionSystem {
  size_t code_id = 0;
  CodeSequence code;
  AngleAssignment asg;
  CodeType type = CodeType::CS;
  BoundingPolygon polygon;             // reflecting-angle bounds
  std::vector<HalfPlane> halfplanes;   // polygon plus fan constraints, strict
  std::vector<double> halfplanes_d;    // a, b, c triples as doubles
  std::vector<Point2> feasible;        // closure; two points for a segment
  std::optional<LineRegion> line;
  bool empty = false;
  std::vector<Inequality> inequalities;  // explicit ones beyond the pairs
  std::shared_ptr<const PairSystem> pairs;
  bool synthetic = false;
  std::string label;

  // Builds the tower part on first use; safe to call from several threads.
  void ensure_complete() const;

  std::string name() const;
  bool is_line() const { return line.has_value(); }
  // Every inequality, pairs expanded. Potentially large.
  std::vector<Inequality> all_inequalities() const;

  // Exact pair gradient bounds, filled on demand.
  mutable std::mutex cache_mutex;
  mutable std::map<std::pair<size_t, size_t>, Rational> pair_G;
  mutable std::once_flag completed;
};

// Builds the system of one code under one angle assignment. A system whose
// fan and reflecting-angle constraints leave nothing is marked empty.
std::shared_ptr<RegionSystem> region_system(const CodeSequence& code, const AngleAssignment& asg);
// The geometric part only; pairs and inequalities come later.
std::shared_ptr<RegionSystem> region_shell(const CodeSequence& code, const AngleAssignment& asg);

// Systems assembled by hand; polygon constraints are given directly.
std::shared_ptr<RegionSystem> synthetic_system(std::string name, std::vector<Inequality> inequalities,
                                               std::vector<HalfPlane> halfplanes,
                                               std::optional<LineRegion> line = std::nullopt);

struct CertifyResult {
  Verdict verdict = Verdict::Fail;
  Rational margin;     // lower bound of min_j f_j(center) - r G_j
  double score = 0;    // ordering heuristic: larger is closer to passing
  bool vacuous = false;  // nothing was left to check; margin is meaningless
  std::string reason;
  bool passed() const { return verdict == Verdict::Pass; }
};

// Whole square (or, for line systems, the line inside it) strictly inside
// the system's polygon.
bool square_in_polygon(const RegionSystem& sys, const Square& sq);
bool square_may_fit(const RegionSystem& sys, const Square& sq);  // fast double filter

CertifyResult certify_square(const RegionSystem& sys, const Square& sq, Precision p = {});

// Mean value test of explicit functions over a square.
CertifyResult certify_functions(const std::vector<Inequality>& fs, const Square& sq, Precision p);

enum class TripleVerdict { Pass, Fail, NotApplicable };
std::string to_string(TripleVerdict v);

struct TripleOutcome {
  TripleVerdict verdict = TripleVerdict::NotApplicable;
  Rational margin;
  std::string reason;
};

// Common factor sin(L) or cos(L) of f and g, L = (m x + n y) / den.
struct SharedFactor {
  TrigKind kind;
  std::int32_t m, n;
  int den;
  TrigPoly u, v;  // f = factor * u, g = factor * v
};

// f / trig(L) when exact; nothing otherwise.
std::optional<TrigPoly> divide_by(const TrigPoly& f, TrigKind kind, std::int32_t m, std::int32_t n, int den);
std::optional<SharedFactor> shared_line_factor(const TrigPoly& f, const TrigPoly& g, const LineRegion& line);

TripleOutcome triple_rule(const Square& sq, const RegionSystem& r1, const RegionSystem& r2, const RegionSystem& r3,
                          Precision p = {});

// Coverage of a target polygon by squares.
struct CoverOptions {
  int max_depth = 20;
  Precision precision{7};
  int threads = 1;
  bool escalate = true;
  bool use_triples = true;
};

enum class RecordKind { Square, Triple, Failure };

struct CoverRecord {
  RecordKind kind = RecordKind::Square;
  Square square;
  std::string path;  // quadtree path from the root, digits 0-3
  size_t system = 0;           // index into the cover's system list
  size_t system2 = 0, system3 = 0;
  Rational margin;             // decimal lower bound
  int digits = 7;              // precision used
  friend bool operator==(const CoverRecord&, const CoverRecord&) = default;
};

struct CoverStats {
  size_t squares = 0, triples = 0, failures = 0;
  int max_depth = 0;
  std::optional<Rational> min_margin;
  size_t escalations = 0;
  size_t certify_calls = 0;
  friend bool operator==(const CoverStats&, const CoverStats&) = default;
};

struct SystemRef {
  size_t code_index;  // position in the corpus
  std::string asg;    // assignment letters
  friend bool operator==(const SystemRef&, const SystemRef&) = default;
};

struct CoverResult {
  std::vector<Point2> target;
  int digits = 7;
  std::vector<SystemRef> systems;
  std::vector<CoverRecord> records;  // tree order
  CoverStats stats;
  bool complete() const { return stats.failures == 0; }
  friend bool operator==(const CoverResult&, const CoverResult&) = default;
};

// All systems of a corpus: each code under each of its assignments.
std::vector<std::shared_ptr<RegionSystem>> corpus_systems(const std::vector<CodeSequence>& corpus);

CoverResult cover(const std::vector<Point2>& target, const std::vector<std::shared_ptr<RegionSystem>>& systems,
                  const CoverOptions& opt = {});
CoverResult cover(const std::vector<Point2>& target, const std::vector<CodeSequence>& corpus,
                  const CoverOptions& opt = {});

std::string write_cover(const CoverResult& r);
CoverResult parse_cover(const std::string& text);
// Map of the cover: squares shaded by code, failures in red.
std::string render_cover_svg(const CoverResult& r, double size = 800);

// Two analytic families near the corner x = 0, 67.5 < y < 90.
enum class PatternKind { PatternI, PatternII };
std::string to_string(PatternKind k);

struct InfinitePattern {
  PatternKind kind;
  long n;
  CodeSequence code;
};

std::optional<InfinitePattern> infinite_pattern(const Rational& x, const Rational& y);
CodeSequence pattern_code(PatternKind kind, long n);

}  // namespace poolshot
