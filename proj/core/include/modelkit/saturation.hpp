#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "modelkit/localization.hpp"

namespace modelkit {

// Two-out-of-three on members: x -> y and x -> z in T force y -> z.
bool is_saturated(const TransferSystem& t);
bool is_saturated_set(const ArrowSet& t);

// Short-arrow characterization on a grid: pullback-closed among short
// arrows and no unit square with exactly three sides.
bool grid_saturated_check(const Lattice& grid, const ArrowSet& shorts);

// A saturated transfer system on A x [n] together with how A sits inside
// [m]; the smaller half of the bijection with saturated systems on
// [m] x [n+1].  The inner system lives on an abstract grid with one column
// per element of A.
struct SaturatedGridDatum {
  int m = 0;
  int n = 0;
  std::vector<int> a;  // nonempty, strictly increasing, within 0..m
  std::shared_ptr<const Lattice> inner_lattice;  // grid(|a|-1, n)
  TransferSystem inner;

  friend bool operator==(const SaturatedGridDatum& x, const SaturatedGridDatum& y) {
    return x.m == y.m && x.n == y.n && x.a == y.a &&
           x.inner.arrows().members() == y.inner.arrows().members();
  }
};

SaturatedGridDatum make_saturated_datum(int m, int n, std::vector<int> a,
                                        const std::vector<Arrow>& inner_arrows);
void validate_datum(const SaturatedGridDatum& datum);

// From smaller to bigger: iota-inclusion of the generators, column
// thickening, spacer horizontals, top verticals over the initial run of A,
// and the three-out-of-four top fill.  `big` must be grid(m, n+1).
TransferSystem saturated_smaller_to_bigger(const Lattice& big, const SaturatedGridDatum& datum);

// Exact inverse on the image of the forward construction: strips the top
// row, reads the initial run of A off the top verticals, and absorbs
// spacer/thickened columns leftwards.  Saturated systems outside the image
// are reported as NOT_IN_BIJECTION_IMAGE.
SaturatedGridDatum saturated_bigger_to_smaller(const TransferSystem& t);

// Decode without the image check; nullopt when no datum shape fits.
std::optional<SaturatedGridDatum> try_decode_datum(const TransferSystem& t);

// A sequence of localizations from the trivial model structure whose replay
// is exactly ms.  Right localizations realize (AF, AF) following the grid
// construction recursively (top verticals, then spacers, then thickening),
// then left localizations at the remaining short weak equivalences restore
// W.  Requires a grid and saturated AF.
LocalizationSequence zigzag_realize(const ModelStructure& ms);

struct ReachabilityGraph {
  struct Edge {
    int from = -1;
    int to = -1;
    Side side = Side::Right;
    Arrow arrow;
  };

  const Lattice* lat = nullptr;
  std::vector<ModelStructure> nodes;  // the full census, enumeration order
  std::vector<Edge> edges;            // every admissible localization edge
  int root = -1;                      // trivial model structure
  std::vector<char> reachable;
  std::vector<int> unreachable;       // ascending node ids
};

// Full localization graph over the enumerated census plus a BFS from the
// trivial model structure.
ReachabilityGraph reachability_graph(const Lattice& lat,
                                     const EnumerationLimits& limits = default_limits());

// Census members that are not the localization of any other member.
std::vector<int> nodes_with_no_incoming(const ReachabilityGraph& graph);

}  // namespace modelkit
