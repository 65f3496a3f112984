#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "poolshot/polygon.hpp"

namespace poolshot::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kNegative = 1;    // a check ran and did not pass
constexpr int kIncomplete = 2;  // cover left failure nodes
constexpr int kInputError = 3;

struct RegionPreset {
  std::string name;
  std::vector<Point2> vertices;
  std::string note;
};

const std::vector<RegionPreset>& region_presets();
// A preset name, or a file with one "x y" vertex per line.
std::vector<Point2> resolve_region(const std::string& spec);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace poolshot::cli
