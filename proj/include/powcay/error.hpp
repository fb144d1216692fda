#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace powcay {

enum class ErrorCode {
  kInvalidOrder,
  kNotClosed,
  kNoIdentity,
  kNotAssociative,
  kNotInvertible,
  kElementOutOfRange,
  kVertexOutOfRange,
  kMalformedEncoding,
  kUnsupportedOrder,
  kIdentityInConnectionSet,
  kNotInverseClosed,
  kSearchBoundExceeded,
  kInconsistentRow,
  kInvalidSpec,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the
// message names the offending element, vertex or triple where there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace powcay
