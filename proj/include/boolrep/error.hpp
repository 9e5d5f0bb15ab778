#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace boolrep {

enum class ErrorKind {
  ParseError,
  DimensionError,
  SizeError,
  UnknownColumn,
  NotALattice,
  CycleError,
  ZeroColumn,
  BottomElement,
  NotGenerating,
  DegenerateLattice,
  NotDownwardClosed,
  EmptyFamily,
  NotSimple,
  GroundMismatch,
  RankTooSmall,
  NotPaving,
  NotRepresentable,
  NotARepresentation,
  NotSubsemilattice,
  TooLarge,
  JoinViolation,
  NotSurjective,
  NotInjective,
  NotADownset,
  TopInIdeal,
  NotACongruence,
  NotAClosure,
  NotIntersectionClosed,
  NotJoinClosed,
  WrongHeight,
  TooFewLines,
  NotAtomic,
  BadMpeg,
  WrongSize,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace boolrep
