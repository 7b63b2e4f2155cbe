#pragma once

#include <stdexcept>
#include <string>

namespace metlie {

// Input violates an operation's precondition. CLI exit code 2.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A certificate that should always hold failed to verify. CLI exit code 3.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& msg, int line, int column)
      : PreconditionError(msg + " at line " + std::to_string(line) +
                          ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace metlie
