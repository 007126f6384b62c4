#pragma once

#include <stdexcept>
#include <string>

namespace gg {

enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kLimitExceeded,
  kIo,
  kInternal,
};

// All library failures are reported by throwing gg::Error. The C API maps
// the kind onto its status codes.
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

}  // namespace gg
