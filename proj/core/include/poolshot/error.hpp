#pragma once

#include <stdexcept>
#include <string>

namespace poolshot {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Code sequences whose expansion does not close up.
class IllegalCodeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An enclosure too wide to decide; the caller should raise precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace poolshot
