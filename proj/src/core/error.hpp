#pragma once

#include <stdexcept>
#include <string>

namespace wpb {

enum class ErrorCode {
  InvalidArgument = 1,
  Infeasible = 2,
  Parse = 3,
  Io = 5,
};

// All library failures are reported through this exception; the C layer maps
// the code onto wpb_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, what);
}
[[noreturn]] inline void throw_infeasible(const std::string& what) {
  throw Error(ErrorCode::Infeasible, what);
}
[[noreturn]] inline void throw_parse(const std::string& what) { throw Error(ErrorCode::Parse, what); }

}  // namespace wpb
