#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orcol {

enum class ErrorCode {
  LoopArc,
  DigonArc,
  DuplicateArc,
  VertexOutOfRange,
  MissingVertexColour,
  BadModulus,
  NotAnArc,
  PreconditionViolated,
  InvariantViolation,
  LimitExceeded,
  MalformedHeader,
  BadLength,
  BadOrder,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` identifies the failure kind;
/// `certificate()` is non-empty for invariant violations and holds the
/// offending input as digraph6 so it can be replayed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string certificate = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& certificate() const noexcept { return certificate_; }

 private:
  ErrorCode code_;
  std::string certificate_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace orcol
