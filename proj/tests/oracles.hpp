#pragma once

// Brute-force reference implementations the unit tests play against the
// library.  Everything here favors obviousness over speed and must stay
// independent of the code paths it checks.

#include <functional>
#include <vector>

#include "modelkit/model_structures.hpp"

namespace oracles {

using namespace modelkit;

// Lifting by explicit square enumeration: for every pair of "corner" maps
// making the square commute, search all diagonal candidates.
inline bool lifts_brute(const Lattice& lat, const Arrow& i, const Arrow& p) {
  for (Element top = 0; top < lat.size(); ++top)
    for (Element bottom = 0; bottom < lat.size(); ++bottom) {
      if (top != p.source || bottom != p.target) continue;
      bool square = lat.leq(i.source, top) && lat.leq(i.target, bottom);
      if (!square) continue;
      bool diagonal = false;
      for (Element h = 0; h < lat.size(); ++h)
        if (h == p.source && lat.leq(i.target, h)) diagonal = true;
      if (!diagonal) return false;
    }
  return true;
}

// Power-set enumeration of transfer systems; only usable when the lattice
// has few comparable pairs.
inline std::vector<ArrowSet> transfer_systems_brute(const Lattice& lat) {
  std::vector<ArrowSet> out;
  const int n = lat.arrow_count();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    ArrowSet s(lat);
    for (int id = 0; id < n; ++id)
      if ((mask >> id) & 1u) s.add_id(id);
    if (is_transfer_system(s)) out.push_back(s);
  }
  return out;
}

inline std::vector<ArrowSet> cotransfer_systems_brute(const Lattice& lat) {
  std::vector<ArrowSet> out;
  const int n = lat.arrow_count();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    ArrowSet s(lat);
    for (int id = 0; id < n; ++id)
      if ((mask >> id) & 1u) s.add_id(id);
    if (is_cotransfer_system(s)) out.push_back(s);
  }
  return out;
}

// The strict two-phase closure: all restrictions first, then one
// composition pass to saturation.
inline ArrowSet transfer_closure_two_phase(const ArrowSet& m) {
  const Lattice& lat = m.lattice();
  ArrowSet m1 = m;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Arrow& f : m1.members())
      for (Element l = 0; l < lat.size(); ++l) {
        if (!lat.leq(l, f.target)) continue;
        Element k = lat.meet(f.source, l);
        if (k != l && !m1.contains(k, l)) {
          m1.add(Arrow{k, l});
          grew = true;
        }
      }
  }
  ArrowSet m2 = m1;
  grew = true;
  while (grew) {
    grew = false;
    for (const Arrow& f : m2.members())
      for (Element z = 0; z < lat.size(); ++z)
        if (lat.lt(f.target, z) && m2.contains(f.target, z) && !m2.contains(f.source, z)) {
          m2.add(Arrow{f.source, z});
          grew = true;
        }
  }
  return m2;
}

// Intersection of all transfer systems containing m (uses the power-set
// census, so small lattices only).
inline ArrowSet smallest_containing_brute(const Lattice& lat, const ArrowSet& m) {
  ArrowSet out = ArrowSet::all(lat);
  for (const ArrowSet& t : transfer_systems_brute(lat))
    if (m.subset_of(t)) out &= t;
  return out;
}

// Order-dual of a lattice, with the element order reversed so arrows flip.
inline Lattice dual_lattice(const Lattice& lat) {
  std::vector<std::pair<int, int>> pairs;
  const int n = lat.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (a != b && lat.leq(a, b)) pairs.emplace_back(n - 1 - b, n - 1 - a);
  return Lattice::explicit_from_pairs(n, pairs);
}

inline ArrowSet mirror_set(const Lattice& dual, const ArrowSet& s) {
  const int n = dual.size();
  ArrowSet out(dual);
  for (const Arrow& a : s.members())
    out.add(Arrow{n - 1 - a.target, n - 1 - a.source});
  return out;
}

}  // namespace oracles
