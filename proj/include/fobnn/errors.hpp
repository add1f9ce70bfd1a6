#pragma once

#include <stdexcept>
#include <string>

namespace fobnn {

/// Malformed or unsupported input. Carries a 1-based position when known.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A size guard refused an analysis (too many species for exhaustive work).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fobnn
