#include "orcol/error.hpp"

#include <fmt/core.h>

namespace orcol {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::DigonArc: return "DigonArc";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::MissingVertexColour: return "MissingVertexColour";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string certificate)
    : std::runtime_error(fmt::format("{}: {}", to_string(code), message)),
      code_(code),
      certificate_(std::move(certificate)) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace orcol
