#pragma once

#include <span>
#include <vector>

#include "modelkit/model_structures.hpp"

namespace modelkit {

enum class Side { Left, Right };

const char* side_name(Side s);

struct LocalizationStep {
  Side side = Side::Right;
  Arrow arrow;
  friend bool operator==(const LocalizationStep&, const LocalizationStep&) = default;
};

struct LocalizationSequence {
  std::vector<LocalizationStep> steps;
};

// Connected component of x under the symmetric closure of the non-identity
// members of W.
uint64_t weq_class_mask(const Lattice& lat, const ArrowSet& w, Element x);
std::vector<Element> weq_class(const ModelStructure& ms, Element x);

// Weak equivalences after right localization at a short edge f not in W:
// the iterative closure  AF_(n) = <AF_(n-1) u S_(n-1)>,
// W_(n) = two-out-of-three closure of AF_(n) o AC,  S_(n) = W_(n) \ W_(n-1),
// run to stabilization.
ArrowSet right_localize_w(const ModelStructure& ms, const Arrow& f);
ArrowSet left_localize_w(const ModelStructure& ms, const Arrow& f);

struct GoldenArrowSet {
  ArrowSet arrows;
  // (golden arrow, short edge it was generated from) pairs, for diagnostics.
  std::vector<std::pair<Arrow, Arrow>> witnesses;
};

// For every short edge sigma newly weak after localizing at f: targets are
// the maximal objects of [t(sigma)]_W, sources the objects of [s(sigma)]_W
// maximal under some target.  (The class membership for sources follows the
// prose definition, [s(sigma)]_W.)
GoldenArrowSet golden_arrows(const ModelStructure& ms, const Arrow& f);

struct CopperArrowSet {
  ArrowSet arrows;
};

// Arrows of L_f(W) \ W whose endpoints are both minimal in their
// pre-localization classes.
CopperArrowSet copper_arrows(const ModelStructure& ms, const Arrow& f);

// (R_f(W), <AF u Gamma_f>).  The closure is checked against the independent
// route F /\ R_f(W); a mismatch is an internal error, never a data error.
ModelStructure right_localize(const ModelStructure& ms, const Arrow& f);
// (L_f(W), AF), with L_f(AC) = co-transfer closure of AC u kappa_f; asserts
// that rlp(L_f(AC)) /\ L_f(W) returns the original AF.
ModelStructure left_localize(const ModelStructure& ms, const Arrow& f);

ModelStructure localize(const ModelStructure& ms, Side side, const Arrow& f);

// Convenience for non-short arrows: factors f along the lexicographically
// least maximal chain and localizes step by step, skipping steps already in
// W.  Tests assert the result does not depend on the chosen chain.
ModelStructure localize_general(const ModelStructure& ms, Side side, const Arrow& f);

// Closed form on a chain: right localization at i -> i+1 adds exactly the
// arrows m' -> j' with i < j' <= j, m' -> i an old acyclic fibration, where
// j is the top of the weak equivalence class of i+1.  Must agree with
// right_localize exactly.
ModelStructure total_order_right_localize(const ModelStructure& ms, Element i);

ModelStructure replay(const ModelStructure& base, std::span<const LocalizationStep> steps);

}  // namespace modelkit
