#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modelkit/errors.hpp"

namespace modelkit {

using Element = int;

// An ordered comparable pair s <= t in the ambient lattice. s == t is the
// identity on s.
struct Arrow {
  Element source = 0;
  Element target = 0;

  bool is_identity() const { return source == target; }
  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct LatticeShape {
  enum Kind { Chain, Grid, Explicit };
  Kind kind = Explicit;
  // Chain: elements 0..n.  Grid: [m] x [n], (m+1)*(n+1) elements.
  int m = 0;
  int n = 0;
};

// Finite lattice on elements 0..size-1, indexed along a fixed linear
// extension (bottom first; grids in row-major coordinate order, so
// (x,y) -> x*(n+1)+y).  The relation is kept as one bitmask word per
// element, which caps size at 64 -- far above anything this library is
// pointed at.
class Lattice {
 public:
  static constexpr int kMaxSize = 64;

  static Lattice chain(int n);
  static Lattice grid(int m, int n);
  // Validated eagerly: partial order, unique meets/joins, bottom and top.
  // `leq_pairs` lists i <= j pairs; reflexivity is implied, transitivity is
  // not completed for the caller -- a non-transitive input is rejected.
  static Lattice explicit_from_pairs(int size,
                                     const std::vector<std::pair<int, int>>& leq_pairs,
                                     std::vector<std::string> labels = {});

  int size() const { return size_; }
  const LatticeShape& shape() const { return shape_; }

  bool valid_element(Element e) const { return e >= 0 && e < size_; }
  void require_element(Element e) const;

  bool leq(Element a, Element b) const { return (up_[a] >> b) & 1u; }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  Element meet(Element a, Element b) const;
  Element join(Element a, Element b) const;
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  uint64_t up_mask(Element a) const { return up_[a]; }      // {b : a <= b}
  uint64_t down_mask(Element a) const { return down_[a]; }  // {b : b <= a}

  // Covering relation: a < b with nothing strictly between.
  bool is_cover(Element a, Element b) const { return (cover_[a] >> b) & 1u; }
  uint64_t cover_mask(Element a) const { return cover_[a]; }

  // Non-identity comparable pairs, indexed lexicographically by (source,
  // target).  Identity arrows are never indexed; ArrowSet treats them as
  // implicit members.
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  int arrow_id(Element s, Element t) const;  // -1 for identities / incomparable
  int arrow_id(const Arrow& a) const { return arrow_id(a.source, a.target); }
  const Arrow& arrow(int id) const { return arrows_[id]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  Arrow make_arrow(Element s, Element t) const;  // checks s <= t

  std::string label(Element e) const;
  std::string arrow_label(const Arrow& a) const;

  bool is_grid() const { return shape_.kind == LatticeShape::Grid; }
  bool is_chain() const;
  // Grid coordinate helpers (grid lattices only).
  std::pair<int, int> coords(Element e) const;
  Element at(int x, int y) const;

  // Structural identity: same size and same relation.
  bool same_order(const Lattice& other) const;

 private:
  Lattice() = default;
  void finish_construction();  // fills meet/join/cover tables, bottom/top
  void validate_order() const;

  int size_ = 0;
  LatticeShape shape_;
  std::vector<uint64_t> up_;
  std::vector<uint64_t> down_;
  std::vector<uint64_t> cover_;
  std::vector<int8_t> meet_;  // size_*size_ tables
  std::vector<int8_t> join_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<int> pair_to_arrow_;  // size_*size_ -> arrow id or -1
  std::vector<std::string> labels_;
};

}  // namespace modelkit
