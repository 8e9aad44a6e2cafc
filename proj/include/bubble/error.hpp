#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bubble {

/// Stable diagnostic codes. The string form (see `to_string`) is part of the
/// CLI contract and must not change between releases.
enum class ErrorCode {
  ParseSyntax,
  ParseZeroDenominator,
  ParseExponentOverflow,
  NoLeadingTerm,
  DivisionByZero,
  DimensionMismatch,
  InvalidAdeType,
  RankCapExceeded,
  NotSimplyLaced,
  Disconnected,
  Cycle,
  DegreeTooHigh,
  MultipleBranchPoints,
  NonAdeArms,
  NotInPolarization,
  NotAdeCartan,
  InvalidPolarization,
  NotDegenerate,
  SingularGeneralFiber,
  ZeroProjection,
  NotTypeA,
  BranchSumNonzero,
  BranchNotVanishing,
  BranchesNotDistinct,
  InvalidInput,
  InternalInvariant,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax-level failure while reading a polynomial literal.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::size_t offset)
      : Error(code, message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace bubble
