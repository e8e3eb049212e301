#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "modelkit/lattice.hpp"

namespace modelkit {

// A wide subcategory candidate: a set of non-identity arrows of a fixed
// lattice, stored as a bitset over the lattice's arrow index.  Identity
// arrows are implicit and every predicate reports them as members.
class ArrowSet {
 public:
  explicit ArrowSet(const Lattice& lat);  // identities only
  static ArrowSet all(const Lattice& lat);
  static ArrowSet from_arrows(const Lattice& lat, const std::vector<Arrow>& arrows);

  const Lattice& lattice() const { return *lat_; }

  bool contains(Element s, Element t) const;
  bool contains(const Arrow& a) const { return contains(a.source, a.target); }
  bool contains_id(int arrow_id) const {
    return (words_[arrow_id >> 6] >> (arrow_id & 63)) & 1u;
  }

  void add(const Arrow& a);
  void add_id(int arrow_id) { words_[arrow_id >> 6] |= uint64_t{1} << (arrow_id & 63); }
  void remove(const Arrow& a);
  void remove_id(int arrow_id) { words_[arrow_id >> 6] &= ~(uint64_t{1} << (arrow_id & 63)); }

  bool empty() const;             // no non-identity members
  int member_count() const;       // non-identity members
  std::vector<Arrow> members() const;  // sorted by arrow id

  bool subset_of(const ArrowSet& other) const;

  ArrowSet& operator|=(const ArrowSet& other);
  ArrowSet& operator&=(const ArrowSet& other);
  ArrowSet& operator-=(const ArrowSet& other);
  friend ArrowSet operator|(ArrowSet a, const ArrowSet& b) { return a |= b; }
  friend ArrowSet operator&(ArrowSet a, const ArrowSet& b) { return a &= b; }
  friend ArrowSet operator-(ArrowSet a, const ArrowSet& b) { return a -= b; }
  friend bool operator==(const ArrowSet& a, const ArrowSet& b) {
    return a.words_ == b.words_;
  }

  // Lexicographic on the characteristic vector (arrow id 0 first); used to
  // fix enumeration output order.
  bool lex_less(const ArrowSet& other) const;

  uint64_t hash() const;
  std::string bit_string() const;  // e.g. "0110..." over arrow ids

  const std::vector<uint64_t>& words() const { return words_; }

  template <typename Fn>
  void for_each_id(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        fn(static_cast<int>(w * 64 + b));
      }
    }
  }

 private:
  const Lattice* lat_;
  std::vector<uint64_t> words_;
};

// Lifting in a poset collapses to a closed form: every commuting square from
// i to p admits a diagonal iff  (s(i) <= s(p) and t(i) <= t(p))  implies
// t(i) <= s(p).
bool lifts_against(const Lattice& lat, const Arrow& i, const Arrow& p);

// Pullback of f along g (shared target): (s(f) /\ s(g)) -> s(g).
Arrow pullback_arrow(const Lattice& lat, const Arrow& f, const Arrow& g);
// Pushout of f along g (shared source): t(g) -> (t(f) \/ t(g)).
Arrow pushout_arrow(const Lattice& lat, const Arrow& f, const Arrow& g);

// Covering pairs, identities excluded.
ArrowSet short_edges(const Lattice& lat);

// S^{box} and {box}S.
ArrowSet rlp_set(const ArrowSet& s);
ArrowSet llp_set(const ArrowSet& s);

// {g o f : f in before, g in after}; identities make both factors optional.
ArrowSet compose_sets(const ArrowSet& after, const ArrowSet& before);

// Smallest superset closed under two-out-of-three.
ArrowSet two_out_of_three_closure(const ArrowSet& s);

bool is_composition_closed(const ArrowSet& s);

}  // namespace modelkit
