#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modelkit/transfer_systems.hpp"

namespace modelkit {

// x <= z <= y and (x -> y) a member imply (x -> z) and (z -> y) are members.
bool is_decomposable(const ArrowSet& s);

// Smallest wide, composition-closed, decomposable superset.
ArrowSet weq_generated_set(ArrowSet m);

// Does every pullback (resp. pushout) of a stay inside w?
bool all_pullbacks_in(const ArrowSet& w, const Arrow& a);
bool all_pushouts_in(const ArrowSet& w, const Arrow& a);

struct LegalityReport {
  bool legal = false;
  Reason reason = Reason::Ok;
  std::optional<Arrow> witness;  // offending short edge / member
};

// A decomposable composition-closed w is the weak-equivalence class of some
// model structure iff (a) each of its short edges has all pullbacks or all
// pushouts inside w, and (b) every factorization of every member into short
// arrows splits into a pushout-stable prefix and a pullback-stable suffix.
// All maximal cover chains are checked; nothing is assumed about a single
// chain sufficing.
LegalityReport legality_of(const ArrowSet& w);
bool is_legal_w(const ArrowSet& w);

// Minimal transfer system usable as AF for the given legal w:
// K^{box} /\ w for K the largest co-transfer system inside w.
TransferSystem t_min(const ArrowSet& w);

struct ValidationReport {
  bool ok = false;
  Reason reason = Reason::Ok;
};

// (w, af) is a model structure iff w is legal, af is a transfer system and
// t_min(w) <= af <= w.
ValidationReport check_model_structure(const Lattice& lat, const ArrowSet& w,
                                       const ArrowSet& af);
// First-principles route: MC2 plus the MC4/MC5 factorization axioms on the
// derived classes.  Kept separate so the two can be played against each
// other.
ValidationReport check_model_structure_direct(const Lattice& lat, const ArrowSet& w,
                                              const ArrowSet& af);
bool is_model_structure(const Lattice& lat, const ArrowSet& w, const ArrowSet& af);

struct DerivedClasses {
  ArrowSet cofibrations;           // C  = llp(AF)
  CoTransferSystem acyclic_cofibrations;  // AC = C /\ W
  ArrowSet fibrations;             // F  = rlp(AC)
};

class ModelStructure {
 public:
  // Validates against both routes.
  ModelStructure(const Lattice& lat, ArrowSet w, ArrowSet af);
  static ModelStructure unchecked(const Lattice& lat, ArrowSet w, ArrowSet af);
  static ModelStructure trivial(const Lattice& lat);

  const Lattice& lattice() const { return *lat_; }
  const ArrowSet& weak_equivalences() const { return w_; }
  const ArrowSet& acyclic_fibrations() const { return af_; }

  // Also verifies AF == F /\ W and W == AF o AC; a failure means an invalid
  // structure slipped past validation.
  DerivedClasses derive() const;

  std::string canonical_key() const;  // W bits + "|" + AF bits

  friend bool operator==(const ModelStructure& a, const ModelStructure& b) {
    return a.w_ == b.w_ && a.af_ == b.af_;
  }

 private:
  ModelStructure(const Lattice& lat, ArrowSet w, ArrowSet af, int);
  const Lattice* lat_;
  ArrowSet w_;
  ArrowSet af_;
};

std::vector<ArrowSet> enumerate_legal_w(const Lattice& lat,
                                        const EnumerationLimits& limits = default_limits());

// For each legal w, every transfer system in [t_min(w), w]; deterministic
// order (w, then af, lexicographic on bit patterns).
std::vector<ModelStructure> enumerate_model_structures(
    const Lattice& lat, const EnumerationLimits& limits = default_limits());

}  // namespace modelkit
