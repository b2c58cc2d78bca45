#pragma once

#include <stdexcept>
#include <string>

namespace atrq {

enum class ErrorKind {
  InvalidInput,      // malformed or out-of-contract argument
  Degenerate,        // statistic undefined for this input (constant vector, rank-deficient design)
  Domain,            // argument outside a function's mathematical domain
  InsufficientData,  // too few usable samples
  Io,                // file missing, unreadable, or undecodable
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace atrq
