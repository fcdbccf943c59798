#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace motivelab {

enum class ErrorCode {
  // group_core
  NonAssociative,
  NoIdentity,
  NotClosed,
  OrderBound,
  NotASubgroup,
  InvalidSpec,
  // exact_arith
  DivisionByZero,
  SizeBound,
  Unsolvable,
  // cohomology2
  GroupMismatch,
  ModulusMismatch,
  NotACocycle,
  // rep_ring
  PrimeSearchFailed,
  NonIntegralDecomposition,
  // twisted_algebra
  ClusterAmbiguity,
  NonSquareCluster,
  // motives
  StabilizerIndexMismatch,
  NonTrivialStabilizerH2,
  UnsupportedAtom,
  OddCohomology,
  LengthMismatch,
  // catalog
  UnknownEntry,
  ParamRange,
  InconsistentAction,
  // measures
  UnsupportedInvariant,
  NonIntegralCharacter,
  ClassCountMismatch,
  Violation,
  // invariants that must never fail
  Internal,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::OrderBound: return "OrderBound";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SizeBound: return "SizeBound";
    case ErrorCode::Unsolvable: return "Unsolvable";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::PrimeSearchFailed: return "PrimeSearchFailed";
    case ErrorCode::NonIntegralDecomposition: return "NonIntegralDecomposition";
    case ErrorCode::ClusterAmbiguity: return "ClusterAmbiguity";
    case ErrorCode::NonSquareCluster: return "NonSquareCluster";
    case ErrorCode::StabilizerIndexMismatch: return "StabilizerIndexMismatch";
    case ErrorCode::NonTrivialStabilizerH2: return "NonTrivialStabilizerH2";
    case ErrorCode::UnsupportedAtom: return "UnsupportedAtom";
    case ErrorCode::OddCohomology: return "OddCohomology";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::ParamRange: return "ParamRange";
    case ErrorCode::InconsistentAction: return "InconsistentAction";
    case ErrorCode::UnsupportedInvariant: return "UnsupportedInvariant";
    case ErrorCode::NonIntegralCharacter: return "NonIntegralCharacter";
    case ErrorCode::ClassCountMismatch: return "ClassCountMismatch";
    case ErrorCode::Violation: return "Violation";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// All library failures surface as this exception; `code()` is stable for callers
/// that need to branch (the CLI maps codes to exit statuses).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void ensure(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace motivelab
