#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace z2cb {

enum class ErrorCode {
  kLengthMismatch,
  kOutOfRange,
  kInvalidArgument,
  kEmptyCode,
  kNotInjective,
  kEpsilonZero,
  kNotEffective,
  kOutOfRegime,
  kUnknownName,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI and tests can branch on the kind of error instead of the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  // Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace z2cb
