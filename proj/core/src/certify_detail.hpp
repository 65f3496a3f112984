#pragma once

#include <set>

#include "poolshot/prover.hpp"

namespace poolshot::detail {

// Center and half extent of the part of the square a system speaks about.
struct Frame {
  Point2 center;
  Rational r;
};

std::optional<Frame> frame(const RegionSystem& sys, const Square& sq);

// Inequalities left out of a test: explicit ones by index, pairs as (blue, black).
struct Skip {
  std::set<size_t> explicit_ids;
  std::set<std::pair<size_t, size_t>> pairs;
};

// Mean value test around the evaluator's point with radius r_rad (radians).
CertifyResult certify_at(const RegionSystem& sys, TrigEvaluator& ev, const Rational& r_rad,
                         const Skip* skip = nullptr);

void check_functions(const std::vector<Inequality>& fs, TrigEvaluator& ev, const Rational& r_rad,
                     CertifyResult& out, bool& indeterminate, bool& have_margin);

}  // namespace poolshot::detail
