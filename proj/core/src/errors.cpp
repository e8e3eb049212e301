#include "modelkit/errors.hpp"

namespace modelkit {

const char* reason_code(Reason r) {
  switch (r) {
    case Reason::Ok: return "OK";
    case Reason::LatticeTooLarge: return "LATTICE_TOO_LARGE";
    case Reason::NotAPartialOrder: return "NOT_A_PARTIAL_ORDER";
    case Reason::NotALattice: return "NOT_A_LATTICE";
    case Reason::BadElement: return "BAD_ELEMENT";
    case Reason::ArrowNotComparable: return "ARROW_NOT_COMPARABLE";
    case Reason::TargetMismatch: return "TARGET_MISMATCH";
    case Reason::SourceMismatch: return "SOURCE_MISMATCH";
    case Reason::NotWide: return "NOT_WIDE";
    case Reason::NotCompositionClosed: return "NOT_COMPOSITION_CLOSED";
    case Reason::NotDecomposable: return "NOT_DECOMPOSABLE";
    case Reason::NotTransferSystem: return "NOT_TRANSFER_SYSTEM";
    case Reason::NotCoTransferSystem: return "NOT_COTRANSFER_SYSTEM";
    case Reason::ShortEdgeNeitherStable: return "SHORT_EDGE_NEITHER_STABLE";
    case Reason::NoSplitIndex: return "NO_SPLIT_INDEX";
    case Reason::IllegalW: return "ILLEGAL_W";
    case Reason::Mc2Failed: return "MC2_FAILED";
    case Reason::Mc5Failed: return "MC5_FAILED";
    case Reason::AfNotInW: return "AF_NOT_IN_W";
    case Reason::TminNotContained: return "TMIN_NOT_CONTAINED";
    case Reason::DerivedClassMismatch: return "DERIVED_CLASS_MISMATCH";
    case Reason::ArrowNotShort: return "ARROW_NOT_SHORT";
    case Reason::ArrowAlreadyWeak: return "ARROW_ALREADY_WEAK";
    case Reason::OracleDisagreement: return "ORACLE_DISAGREEMENT";
    case Reason::SizeGuard: return "SIZE_GUARD";
    case Reason::NotAGrid: return "NOT_A_GRID";
    case Reason::NotAChain: return "NOT_A_CHAIN";
    case Reason::UnsaturatedInput: return "UNSATURATED_INPUT";
    case Reason::InvalidDatum: return "INVALID_DATUM";
    case Reason::NotInBijectionImage: return "NOT_IN_BIJECTION_IMAGE";
    case Reason::ReplayMismatch: return "REPLAY_MISMATCH";
    case Reason::ParseError: return "PARSE_ERROR";
    case Reason::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace modelkit
