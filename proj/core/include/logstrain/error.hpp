#pragma once

#include <stdexcept>
#include <string>

namespace logstrain {

enum class ErrorKind {
  NonFinite,
  NotPositiveDefinite,
  NonInvertible,
  NoSuchPlane,
  InvalidArgument,
  InvalidModuli,
  LambdaNotZero,
  DegenerateData,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace logstrain
