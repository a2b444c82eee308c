#pragma once

#include <stdexcept>
#include <string>

namespace polytrope {

// Numeric values match the C API status codes and the CLI exit codes.
enum class Status {
  ok = 0,
  invalid = 1,
  malformed = 2,
  resource_limit = 3,
  positive_cycle = 4,
  degenerate = 5,
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}

  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& what) {
  throw Error(status, what);
}

}  // namespace polytrope
