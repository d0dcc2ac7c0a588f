#pragma once

#include <stdexcept>
#include <string>

namespace bifix {

// Error taxonomy used across the library. The CLI maps kinds to exit codes
// (invalid input and friends -> 2, resource limits -> 3).
enum class ErrorKind {
  invalid_input,
  not_applicable,
  not_in_star,
  resource_limit,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
  throw Error(ErrorKind::invalid_input, msg);
}

[[noreturn]] inline void throw_not_applicable(const std::string& msg) {
  throw Error(ErrorKind::not_applicable, msg);
}

[[noreturn]] inline void throw_resource_limit(const std::string& msg) {
  throw Error(ErrorKind::resource_limit, msg);
}

}  // namespace bifix
