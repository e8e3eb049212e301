#include "modelkit/lattice.hpp"

#include <algorithm>
#include <bit>

namespace modelkit {

void Lattice::require_element(Element e) const {
  if (!valid_element(e)) fail(Reason::BadElement, "element " + std::to_string(e) + " out of range");
}

Lattice Lattice::chain(int n) {
  if (n < 0) fail(Reason::BadElement, "chain order must be >= 0");
  Lattice lat;
  lat.size_ = n + 1;
  if (lat.size_ > kMaxSize) fail(Reason::LatticeTooLarge, "chain too large");
  lat.shape_ = {LatticeShape::Chain, n, 0};
  lat.up_.assign(lat.size_, 0);
  lat.down_.assign(lat.size_, 0);
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      lat.up_[a] |= uint64_t{1} << b;
      lat.down_[b] |= uint64_t{1} << a;
    }
  lat.finish_construction();
  return lat;
}

Lattice Lattice::grid(int m, int n) {
  if (m < 0 || n < 0) fail(Reason::BadElement, "grid dimensions must be >= 0");
  Lattice lat;
  const int cols = m + 1, rows = n + 1;
  lat.size_ = cols * rows;
  if (lat.size_ > kMaxSize) fail(Reason::LatticeTooLarge, "grid too large");
  lat.shape_ = {LatticeShape::Grid, m, n};
  lat.up_.assign(lat.size_, 0);
  lat.down_.assign(lat.size_, 0);
  auto idx = [rows](int x, int y) { return x * rows + y; };
  for (int x1 = 0; x1 < cols; ++x1)
    for (int y1 = 0; y1 < rows; ++y1)
      for (int x2 = x1; x2 < cols; ++x2)
        for (int y2 = y1; y2 < rows; ++y2) {
          lat.up_[idx(x1, y1)] |= uint64_t{1} << idx(x2, y2);
          lat.down_[idx(x2, y2)] |= uint64_t{1} << idx(x1, y1);
        }
  lat.finish_construction();
  return lat;
}

Lattice Lattice::explicit_from_pairs(int size, const std::vector<std::pair<int, int>>& leq_pairs,
                                     std::vector<std::string> labels) {
  if (size < 1) fail(Reason::BadElement, "lattice needs at least one element");
  Lattice lat;
  lat.size_ = size;
  if (size > kMaxSize) fail(Reason::LatticeTooLarge, "explicit lattice too large");
  lat.shape_ = {LatticeShape::Explicit, 0, 0};
  lat.up_.assign(size, 0);
  lat.down_.assign(size, 0);
  for (int e = 0; e < size; ++e) {
    lat.up_[e] |= uint64_t{1} << e;
    lat.down_[e] |= uint64_t{1} << e;
  }
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= size || b < 0 || b >= size)
      fail(Reason::BadElement, "leq pair out of range");
    lat.up_[a] |= uint64_t{1} << b;
    lat.down_[b] |= uint64_t{1} << a;
  }
  lat.validate_order();
  lat.labels_ = std::move(labels);
  if (!lat.labels_.empty() && static_cast<int>(lat.labels_.size()) != size)
    fail(Reason::ParseError, "label count does not match size");
  lat.finish_construction();
  return lat;
}

void Lattice::validate_order() const {
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      if (!leq(a, b)) continue;
      if (a != b && leq(b, a)) fail(Reason::NotAPartialOrder, "antisymmetry violated");
      // b's up-set must sit inside a's (transitivity).
      if ((up_[b] & ~up_[a]) != 0) fail(Reason::NotAPartialOrder, "transitivity violated");
    }
}

void Lattice::finish_construction() {
  meet_.assign(size_ * size_, -1);
  join_.assign(size_ * size_, -1);
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      uint64_t lower = down_[a] & down_[b];
      uint64_t upper = up_[a] & up_[b];
      if (lower == 0 || upper == 0) fail(Reason::NotALattice, "missing meet or join");
      // The meet is the unique maximum of the common lower set.
      int mt = -1;
      for (uint64_t bits = lower; bits;) {
        int c = std::countr_zero(bits);
        bits &= bits - 1;
        if ((down_[c] & lower) == lower) { mt = c; break; }
      }
      int jn = -1;
      for (uint64_t bits = upper; bits;) {
        int c = std::countr_zero(bits);
        bits &= bits - 1;
        if ((up_[c] & upper) == upper) { jn = c; break; }
      }
      if (mt < 0 || jn < 0) fail(Reason::NotALattice, "meet or join not unique");
      meet_[a * size_ + b] = static_cast<int8_t>(mt);
      join_[a * size_ + b] = static_cast<int8_t>(jn);
    }

  bottom_ = -1;
  top_ = -1;
  const uint64_t everything = (size_ == 64) ? ~uint64_t{0} : ((uint64_t{1} << size_) - 1);
  for (int e = 0; e < size_; ++e) {
    if (up_[e] == everything) bottom_ = e;
    if (down_[e] == everything) top_ = e;
  }
  if (bottom_ < 0 || top_ < 0) fail(Reason::NotALattice, "no bottom or top element");

  cover_.assign(size_, 0);
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      if (!lt(a, b)) continue;
      uint64_t between = up_[a] & down_[b] & ~(uint64_t{1} << a) & ~(uint64_t{1} << b);
      if (between == 0) cover_[a] |= uint64_t{1} << b;
    }

  pair_to_arrow_.assign(size_ * size_, -1);
  for (int s = 0; s < size_; ++s)
    for (int t = 0; t < size_; ++t)
      if (s != t && leq(s, t)) {
        pair_to_arrow_[s * size_ + t] = static_cast<int>(arrows_.size());
        arrows_.push_back(Arrow{s, t});
      }
}

Element Lattice::meet(Element a, Element b) const {
  require_element(a);
  require_element(b);
  return meet_[a * size_ + b];
}

Element Lattice::join(Element a, Element b) const {
  require_element(a);
  require_element(b);
  return join_[a * size_ + b];
}

int Lattice::arrow_id(Element s, Element t) const {
  if (!valid_element(s) || !valid_element(t)) return -1;
  return pair_to_arrow_[s * size_ + t];
}

Arrow Lattice::make_arrow(Element s, Element t) const {
  require_element(s);
  require_element(t);
  if (!leq(s, t))
    fail(Reason::ArrowNotComparable, label(s) + " -> " + label(t) + " is not an arrow");
  return Arrow{s, t};
}

bool Lattice::is_chain() const {
  if (shape_.kind == LatticeShape::Chain) return true;
  if (shape_.kind == LatticeShape::Grid) return shape_.m == 0 || shape_.n == 0;
  for (int a = 0; a < size_; ++a)
    for (int b = a + 1; b < size_; ++b)
      if (!leq(a, b) && !leq(b, a)) return false;
  return true;
}

std::pair<int, int> Lattice::coords(Element e) const {
  if (!is_grid()) fail(Reason::NotAGrid, "coords only defined on grids");
  require_element(e);
  const int rows = shape_.n + 1;
  return {e / rows, e % rows};
}

Element Lattice::at(int x, int y) const {
  if (!is_grid()) fail(Reason::NotAGrid, "at(x,y) only defined on grids");
  if (x < 0 || x > shape_.m || y < 0 || y > shape_.n)
    fail(Reason::BadElement, "grid coordinate out of range");
  return x * (shape_.n + 1) + y;
}

std::string Lattice::label(Element e) const {
  require_element(e);
  if (!labels_.empty()) return labels_[e];
  if (is_grid()) {
    auto [x, y] = coords(e);
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  return std::to_string(e);
}

std::string Lattice::arrow_label(const Arrow& a) const {
  return label(a.source) + "->" + label(a.target);
}

bool Lattice::same_order(const Lattice& other) const {
  return size_ == other.size_ && up_ == other.up_;
}

}  // namespace modelkit
