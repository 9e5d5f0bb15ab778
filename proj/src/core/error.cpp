#include "boolrep/error.hpp"

namespace boolrep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::SizeError: return "SizeError";
    case ErrorKind::UnknownColumn: return "UnknownColumn";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::CycleError: return "CycleError";
    case ErrorKind::ZeroColumn: return "ZeroColumn";
    case ErrorKind::BottomElement: return "BottomElement";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::DegenerateLattice: return "DegenerateLattice";
    case ErrorKind::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::NotPaving: return "NotPaving";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::NotARepresentation: return "NotARepresentation";
    case ErrorKind::NotSubsemilattice: return "NotSubsemilattice";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::JoinViolation: return "JoinViolation";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotADownset: return "NotADownset";
    case ErrorKind::TopInIdeal: return "TopInIdeal";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotAClosure: return "NotAClosure";
    case ErrorKind::NotIntersectionClosed: return "NotIntersectionClosed";
    case ErrorKind::NotJoinClosed: return "NotJoinClosed";
    case ErrorKind::WrongHeight: return "WrongHeight";
    case ErrorKind::TooFewLines: return "TooFewLines";
    case ErrorKind::NotAtomic: return "NotAtomic";
    case ErrorKind::BadMpeg: return "BadMpeg";
    case ErrorKind::WrongSize: return "WrongSize";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace boolrep
