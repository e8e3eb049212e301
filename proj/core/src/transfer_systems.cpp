#include "modelkit/transfer_systems.hpp"

#include <algorithm>
#include <cstdlib>

namespace modelkit {

namespace {

// One restriction-and-composition sweep; returns true when arrows were added.
bool closure_sweep(ArrowSet& t, bool pullbacks, bool pushouts) {
  const Lattice& lat = t.lattice();
  bool changed = false;
  std::vector<Arrow> current = t.members();
  for (const Arrow& f : current) {
    if (pullbacks) {
      // (k -> h) restricted along every (l -> h).
      for (Element l = 0; l < lat.size(); ++l) {
        if (!lat.leq(l, f.target)) continue;
        Element k = lat.meet(f.source, l);
        if (k != l && !t.contains(k, l)) {
          t.add(Arrow{k, l});
          changed = true;
        }
      }
    }
    if (pushouts) {
      for (Element c = 0; c < lat.size(); ++c) {
        if (!lat.leq(f.source, c)) continue;
        Element j = lat.join(f.target, c);
        if (c != j && !t.contains(c, j)) {
          t.add(Arrow{c, j});
          changed = true;
        }
      }
    }
    for (Element z = 0; z < lat.size(); ++z) {
      if (!lat.lt(f.target, z)) continue;
      if (t.contains(f.target, z) && !t.contains(f.source, z)) {
        t.add(Arrow{f.source, z});
        changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

TransferSystem::TransferSystem(ArrowSet base) : base_(std::move(base)) {
  if (!is_transfer_system(base_))
    fail(Reason::NotTransferSystem, "arrow set is not closed under restriction/composition");
}

TransferSystem TransferSystem::unchecked(ArrowSet base) {
  return TransferSystem(std::move(base), Unchecked{});
}

CoTransferSystem::CoTransferSystem(ArrowSet base) : base_(std::move(base)) {
  if (!is_cotransfer_system(base_))
    fail(Reason::NotCoTransferSystem, "arrow set is not closed under pushout/composition");
}

CoTransferSystem CoTransferSystem::unchecked(ArrowSet base) {
  return CoTransferSystem(std::move(base), Unchecked{});
}

ArrowSet transfer_closure_set(ArrowSet m) {
  while (closure_sweep(m, /*pullbacks=*/true, /*pushouts=*/false)) {
  }
  return m;
}

ArrowSet cotransfer_closure_set(ArrowSet m) {
  while (closure_sweep(m, /*pullbacks=*/false, /*pushouts=*/true)) {
  }
  return m;
}

TransferSystem transfer_closure(const ArrowSet& m) {
  return TransferSystem::unchecked(transfer_closure_set(m));
}

CoTransferSystem cotransfer_closure(const ArrowSet& m) {
  return CoTransferSystem::unchecked(cotransfer_closure_set(m));
}

bool is_transfer_system(const ArrowSet& s) {
  return transfer_closure_set(s) == s;
}

bool is_cotransfer_system(const ArrowSet& s) {
  return cotransfer_closure_set(s) == s;
}

ArrowSet largest_pullback_closed_within(const ArrowSet& w) {
  const Lattice& lat = w.lattice();
  ArrowSet k = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Arrow& f : k.members()) {
      for (Element l = 0; l < lat.size(); ++l) {
        if (!lat.leq(l, f.target)) continue;
        Element mt = lat.meet(f.source, l);
        if (mt != l && !k.contains(mt, l)) {
          k.remove(f);
          changed = true;
          break;
        }
      }
    }
  }
  return k;
}

ArrowSet largest_pushout_closed_within(const ArrowSet& w) {
  const Lattice& lat = w.lattice();
  ArrowSet k = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Arrow& f : k.members()) {
      for (Element c = 0; c < lat.size(); ++c) {
        if (!lat.leq(f.source, c)) continue;
        Element jn = lat.join(f.target, c);
        if (c != jn && !k.contains(c, jn)) {
          k.remove(f);
          changed = true;
          break;
        }
      }
    }
  }
  return k;
}

TransferSystem largest_transfer_system_within(const ArrowSet& w) {
  ArrowSet k = largest_pullback_closed_within(w);
  if (!is_composition_closed(k))
    fail(Reason::NotCompositionClosed,
         "pullback-stable core of w lost composition closure");
  return TransferSystem::unchecked(std::move(k));
}

CoTransferSystem largest_cotransfer_system_within(const ArrowSet& w) {
  ArrowSet k = largest_pushout_closed_within(w);
  if (!is_composition_closed(k))
    fail(Reason::NotCompositionClosed,
         "pushout-stable core of w lost composition closure");
  return CoTransferSystem::unchecked(std::move(k));
}

EnumerationLimits default_limits() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("MODELKIT_MAX_ELEMENTS")) {
    int v = std::atoi(env);
    if (v > 0) limits.max_elements = v;
  }
  return limits;
}

void enforce_size_guard(const Lattice& lat, const EnumerationLimits& limits) {
  if (!limits.force && lat.size() > limits.max_elements)
    fail(Reason::SizeGuard, "lattice has " + std::to_string(lat.size()) +
                                " elements, guard is " + std::to_string(limits.max_elements));
}

std::vector<ArrowSet> enumerate_closed_sets(
    const std::function<ArrowSet(const ArrowSet&)>& close, const ArrowSet& floor,
    const ArrowSet& within) {
  std::vector<ArrowSet> out;
  ArrowSet root = close(floor);
  if (!root.subset_of(within)) return out;
  const int arrow_count = root.lattice().arrow_count();

  // Canonical extension enumeration: a branch on arrow i is taken only when
  // the closure adds nothing below i, so every closed set is reached once.
  auto rec = [&](auto&& self, const ArrowSet& t, int start) -> void {
    out.push_back(t);
    for (int i = start; i < arrow_count; ++i) {
      if (t.contains_id(i) || !within.contains_id(i)) continue;
      ArrowSet next = t;
      next.add_id(i);
      next = close(next);
      if (!next.subset_of(within)) continue;
      bool canonical = true;
      for (int j = 0; j < i && canonical; ++j)
        if (next.contains_id(j) != t.contains_id(j)) canonical = false;
      if (canonical) self(self, next, i + 1);
    }
  };
  rec(rec, root, 0);
  std::sort(out.begin(), out.end(),
            [](const ArrowSet& a, const ArrowSet& b) { return a.lex_less(b); });
  return out;
}

std::vector<TransferSystem> enumerate_transfer_systems(const Lattice& lat,
                                                       const EnumerationLimits& limits) {
  enforce_size_guard(lat, limits);
  std::vector<ArrowSet> sets = enumerate_closed_sets(
      [](const ArrowSet& s) { return transfer_closure_set(s); }, ArrowSet(lat),
      ArrowSet::all(lat));
  std::vector<TransferSystem> out;
  out.reserve(sets.size());
  for (ArrowSet& s : sets) out.push_back(TransferSystem::unchecked(std::move(s)));
  return out;
}

std::vector<CoTransferSystem> enumerate_cotransfer_systems(const Lattice& lat,
                                                           const EnumerationLimits& limits) {
  enforce_size_guard(lat, limits);
  std::vector<ArrowSet> sets = enumerate_closed_sets(
      [](const ArrowSet& s) { return cotransfer_closure_set(s); }, ArrowSet(lat),
      ArrowSet::all(lat));
  std::vector<CoTransferSystem> out;
  out.reserve(sets.size());
  for (ArrowSet& s : sets) out.push_back(CoTransferSystem::unchecked(std::move(s)));
  return out;
}

}  // namespace modelkit
