#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace braidcryst {

enum class Errc {
  ParseError,
  IndexOutOfRange,
  NotOrientable,
  Mismatch,
  NotSingleCycle,
  NotDivisible,
  InfiniteOrder,
  NotAnSnEmbedding,
  BadPrime,
  BadMultiplier,
  NotProductOfCyclotomics,
  NonSquare,
  NotInvertible,
  NotARepresentation,
  Unsupported,
  InvalidArgument,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotOrientable: return "NotOrientable";
    case Errc::Mismatch: return "Mismatch";
    case Errc::NotSingleCycle: return "NotSingleCycle";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::InfiniteOrder: return "InfiniteOrder";
    case Errc::NotAnSnEmbedding: return "NotAnSnEmbedding";
    case Errc::BadPrime: return "BadPrime";
    case Errc::BadMultiplier: return "BadMultiplier";
    case Errc::NotProductOfCyclotomics: return "NotProductOfCyclotomics";
    case Errc::NonSquare: return "NonSquare";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotARepresentation: return "NotARepresentation";
    case Errc::Unsupported: return "Unsupported";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every precondition failure in the library is reported as a DomainError
/// tagged with a code, so callers (and the CLI) can branch on the kind.
class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Syntax error in a braid word; `position` is the 0-based byte offset.
class ParseError : public DomainError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : DomainError(Errc::ParseError, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace braidcryst
