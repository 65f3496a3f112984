#include "poolshot/error.hpp"

namespace poolshot {

ParseError::ParseError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

}  // namespace poolshot
