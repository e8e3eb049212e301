#pragma once

#include <functional>
#include <vector>

#include "modelkit/arrow_set.hpp"

namespace modelkit {

// Wide subcategory closed under composition and restriction (pullback along
// arbitrary arrows).  Construction validates unless the set came out of a
// closure, which is trusted.
class TransferSystem {
 public:
  explicit TransferSystem(ArrowSet base);       // validates, throws NotTransferSystem
  static TransferSystem unchecked(ArrowSet base);

  const ArrowSet& arrows() const { return base_; }
  const Lattice& lattice() const { return base_.lattice(); }
  bool contains(Element s, Element t) const { return base_.contains(s, t); }

  friend bool operator==(const TransferSystem& a, const TransferSystem& b) {
    return a.base_ == b.base_;
  }

 private:
  struct Unchecked {};
  TransferSystem(ArrowSet base, Unchecked) : base_(std::move(base)) {}
  ArrowSet base_;
};

// Dual notion: closed under composition and pushout along arbitrary arrows.
class CoTransferSystem {
 public:
  explicit CoTransferSystem(ArrowSet base);     // validates, throws NotCoTransferSystem
  static CoTransferSystem unchecked(ArrowSet base);

  const ArrowSet& arrows() const { return base_; }
  const Lattice& lattice() const { return base_.lattice(); }
  bool contains(Element s, Element t) const { return base_.contains(s, t); }

  friend bool operator==(const CoTransferSystem& a, const CoTransferSystem& b) {
    return a.base_ == b.base_;
  }

 private:
  struct Unchecked {};
  CoTransferSystem(ArrowSet base, Unchecked) : base_(std::move(base)) {}
  ArrowSet base_;
};

bool is_transfer_system(const ArrowSet& s);
bool is_cotransfer_system(const ArrowSet& s);

// Smallest transfer system containing m.  Computed as a worklist fixed point
// interleaving restriction and composition; the two-phase construction
// (restriction then composition) is kept in the tests as an oracle.
TransferSystem transfer_closure(const ArrowSet& m);
ArrowSet transfer_closure_set(ArrowSet m);

CoTransferSystem cotransfer_closure(const ArrowSet& m);
ArrowSet cotransfer_closure_set(ArrowSet m);

// Greatest fixed points inside w: delete arrows whose pullback (resp.
// pushout) escapes, then assert composition closure still holds.
ArrowSet largest_pullback_closed_within(const ArrowSet& w);
ArrowSet largest_pushout_closed_within(const ArrowSet& w);
TransferSystem largest_transfer_system_within(const ArrowSet& w);
CoTransferSystem largest_cotransfer_system_within(const ArrowSet& w);

struct EnumerationLimits {
  int max_elements = 16;
  bool force = false;
};
// Reads MODELKIT_MAX_ELEMENTS when set.
EnumerationLimits default_limits();
void enforce_size_guard(const Lattice& lat, const EnumerationLimits& limits);

// All closed sets T of `close` with floor <= T <= within, each exactly once,
// sorted lexicographically on the membership bit pattern.  `close` must be a
// closure operator (extensive, monotone, idempotent) whose value on any
// branch-relevant set stays inside `within` or gets pruned.
std::vector<ArrowSet> enumerate_closed_sets(
    const std::function<ArrowSet(const ArrowSet&)>& close, const ArrowSet& floor,
    const ArrowSet& within);

std::vector<TransferSystem> enumerate_transfer_systems(
    const Lattice& lat, const EnumerationLimits& limits = default_limits());

std::vector<CoTransferSystem> enumerate_cotransfer_systems(
    const Lattice& lat, const EnumerationLimits& limits = default_limits());

}  // namespace modelkit
