#pragma once

#include <stdexcept>
#include <string>

namespace modelkit {

// Stable reason codes. Validators return them, the CLI prints them verbatim
// on exit 1, and tests match on them.
enum class Reason {
  Ok,
  LatticeTooLarge,
  NotAPartialOrder,
  NotALattice,
  BadElement,
  ArrowNotComparable,
  TargetMismatch,
  SourceMismatch,
  NotWide,
  NotCompositionClosed,
  NotDecomposable,
  NotTransferSystem,
  NotCoTransferSystem,
  ShortEdgeNeitherStable,
  NoSplitIndex,
  IllegalW,
  Mc2Failed,
  Mc5Failed,
  AfNotInW,
  TminNotContained,
  DerivedClassMismatch,
  ArrowNotShort,
  ArrowAlreadyWeak,
  OracleDisagreement,
  SizeGuard,
  NotAGrid,
  NotAChain,
  UnsaturatedInput,
  InvalidDatum,
  NotInBijectionImage,
  ReplayMismatch,
  ParseError,
  IoError,
};

const char* reason_code(Reason r);

class DomainError : public std::runtime_error {
 public:
  DomainError(Reason r, const std::string& what)
      : std::runtime_error(std::string(reason_code(r)) + ": " + what), reason_(r) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

[[noreturn]] inline void fail(Reason r, const std::string& what) {
  throw DomainError(r, what);
}

}  // namespace modelkit
