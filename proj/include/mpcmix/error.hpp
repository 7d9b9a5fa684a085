#pragma once

#include <stdexcept>
#include <string>

namespace mpcmix {

// Domain failure with a stable machine-readable code, e.g. "row-sum",
// "weight-identity", "no-split". The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed text or JSON input. The CLI maps these to exit status 2.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("rational division by zero") {}
};

}  // namespace mpcmix
