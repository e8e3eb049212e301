#include "modelkit/localization.hpp"

#include <algorithm>
#include <bit>

namespace modelkit {

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

uint64_t weq_class_mask(const Lattice& lat, const ArrowSet& w, Element x) {
  lat.require_element(x);
  uint64_t cls = uint64_t{1} << x;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Arrow& a : w.members()) {
      uint64_t s = uint64_t{1} << a.source, t = uint64_t{1} << a.target;
      if ((cls & (s | t)) && (cls & (s | t)) != (s | t)) {
        cls |= s | t;
        grew = true;
      }
    }
  }
  return cls;
}

std::vector<Element> weq_class(const ModelStructure& ms, Element x) {
  uint64_t mask = weq_class_mask(ms.lattice(), ms.weak_equivalences(), x);
  std::vector<Element> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

namespace {

ArrowSet acyclic_cofibrations(const ModelStructure& ms) {
  return llp_set(ms.acyclic_fibrations()) & ms.weak_equivalences();
}

void require_admissible(const ModelStructure& ms, const Arrow& f) {
  const Lattice& lat = ms.lattice();
  lat.require_element(f.source);
  lat.require_element(f.target);
  if (!lat.is_cover(f.source, f.target))
    fail(Reason::ArrowNotShort, lat.arrow_label(f) + " is not a short edge");
  if (ms.weak_equivalences().contains(f.source, f.target))
    fail(Reason::ArrowAlreadyWeak, lat.arrow_label(f) + " is already a weak equivalence");
}

// Iterative localization of the weak equivalences.  Each round enlarges the
// growing side of the pre-model pair, recomposes the candidate W, and closes
// it under two-out-of-three.  Right localization keeps the fibrations, so
// the arrows fed back into the transfer closure are exactly the new weak
// equivalences that are fibrations (F /\ W' must end up a transfer system);
// new weak equivalences outside F pick up their AC-then-AF factorization
// from those, and feeding them back instead overshoots the minimal W.
// Left localization is the mirror image with the cofibrations fixed.
ArrowSet localize_w_impl(const ModelStructure& ms, const Arrow& f, Side side) {
  const Lattice& lat = ms.lattice();
  ArrowSet af = ms.acyclic_fibrations();
  ArrowSet ac = acyclic_cofibrations(ms);
  const ArrowSet fixed_class =
      side == Side::Right ? rlp_set(ac) : llp_set(af);
  ArrowSet seeds(lat);
  seeds.add(f);

  const int max_rounds = lat.arrow_count() + 2;
  for (int round = 0; round < max_rounds; ++round) {
    if (side == Side::Right)
      af = transfer_closure_set(af | seeds);
    else
      ac = cotransfer_closure_set(ac | seeds);
    ArrowSet w_next = two_out_of_three_closure(compose_sets(af, ac));
    seeds = (w_next & fixed_class) - (side == Side::Right ? af : ac);
    if (seeds.empty()) return w_next;
  }
  fail(Reason::OracleDisagreement, "localization closure failed to stabilize");
}

uint64_t maximal_in(const Lattice& lat, uint64_t cls) {
  uint64_t out = 0;
  for (uint64_t bits = cls; bits;) {
    Element y = std::countr_zero(bits);
    bits &= bits - 1;
    if ((lat.up_mask(y) & cls & ~(uint64_t{1} << y)) == 0) out |= uint64_t{1} << y;
  }
  return out;
}

uint64_t minimal_in(const Lattice& lat, uint64_t cls) {
  uint64_t out = 0;
  for (uint64_t bits = cls; bits;) {
    Element y = std::countr_zero(bits);
    bits &= bits - 1;
    if ((lat.down_mask(y) & cls & ~(uint64_t{1} << y)) == 0) out |= uint64_t{1} << y;
  }
  return out;
}

GoldenArrowSet golden_arrows_for(const ModelStructure& ms, const ArrowSet& rw) {
  const Lattice& lat = ms.lattice();
  const ArrowSet& w = ms.weak_equivalences();
  GoldenArrowSet golden{ArrowSet(lat), {}};

  ArrowSet fresh = rw - w;
  for (const Arrow& sigma : fresh.members()) {
    if (!lat.is_cover(sigma.source, sigma.target)) continue;
    uint64_t target_cls = weq_class_mask(lat, w, sigma.target);
    uint64_t source_cls = weq_class_mask(lat, w, sigma.source);
    uint64_t targets = maximal_in(lat, target_cls);

    // Sources: maximal within their class below some target.
    uint64_t sources = 0;
    for (uint64_t bits = source_cls; bits;) {
      Element y = std::countr_zero(bits);
      bits &= bits - 1;
      for (uint64_t tb = targets; tb;) {
        Element t = std::countr_zero(tb);
        tb &= tb - 1;
        if (!lat.leq(y, t)) continue;
        uint64_t between = lat.up_mask(y) & lat.down_mask(t) & source_cls & ~(uint64_t{1} << y);
        if (between == 0) {
          sources |= uint64_t{1} << y;
          break;
        }
      }
    }

    for (uint64_t sb = sources; sb;) {
      Element s = std::countr_zero(sb);
      sb &= sb - 1;
      for (uint64_t tb = targets; tb;) {
        Element t = std::countr_zero(tb);
        tb &= tb - 1;
        if (s == t || !lat.leq(s, t)) continue;
        Arrow g{s, t};
        if (!golden.arrows.contains(g)) {
          golden.arrows.add(g);
          golden.witnesses.emplace_back(g, sigma);
        }
      }
    }
  }
  return golden;
}

}  // namespace

ArrowSet right_localize_w(const ModelStructure& ms, const Arrow& f) {
  require_admissible(ms, f);
  return localize_w_impl(ms, f, Side::Right);
}

ArrowSet left_localize_w(const ModelStructure& ms, const Arrow& f) {
  require_admissible(ms, f);
  return localize_w_impl(ms, f, Side::Left);
}

GoldenArrowSet golden_arrows(const ModelStructure& ms, const Arrow& f) {
  return golden_arrows_for(ms, right_localize_w(ms, f));
}

// Exact dual of the golden construction: sources are the minimal objects of
// [s(sigma)]_W, targets the objects of [t(sigma)]_W minimal over some
// source.  (Reading target minimality as global would leave the co-transfer
// closure short of L_f(AC) already on [1] x [1].)
CopperArrowSet copper_arrows_for(const ModelStructure& ms, const ArrowSet& lw) {
  const Lattice& lat = ms.lattice();
  const ArrowSet& w = ms.weak_equivalences();
  CopperArrowSet copper{ArrowSet(lat)};

  ArrowSet fresh = lw - w;
  for (const Arrow& sigma : fresh.members()) {
    if (!lat.is_cover(sigma.source, sigma.target)) continue;
    uint64_t source_cls = weq_class_mask(lat, w, sigma.source);
    uint64_t target_cls = weq_class_mask(lat, w, sigma.target);
    uint64_t sources = minimal_in(lat, source_cls);

    uint64_t targets = 0;
    for (uint64_t bits = target_cls; bits;) {
      Element y = std::countr_zero(bits);
      bits &= bits - 1;
      for (uint64_t sb = sources; sb;) {
        Element s = std::countr_zero(sb);
        sb &= sb - 1;
        if (!lat.leq(s, y)) continue;
        uint64_t between = lat.up_mask(s) & lat.down_mask(y) & target_cls & ~(uint64_t{1} << y);
        if (between == 0) {
          targets |= uint64_t{1} << y;
          break;
        }
      }
    }

    for (uint64_t sb = sources; sb;) {
      Element s = std::countr_zero(sb);
      sb &= sb - 1;
      for (uint64_t tb = targets; tb;) {
        Element t = std::countr_zero(tb);
        tb &= tb - 1;
        if (s != t && lat.leq(s, t)) copper.arrows.add(Arrow{s, t});
      }
    }
  }
  return copper;
}

CopperArrowSet copper_arrows(const ModelStructure& ms, const Arrow& f) {
  return copper_arrows_for(ms, left_localize_w(ms, f));
}

ModelStructure right_localize(const ModelStructure& ms, const Arrow& f) {
  const Lattice& lat = ms.lattice();
  ArrowSet rw = right_localize_w(ms, f);
  GoldenArrowSet golden = golden_arrows_for(ms, rw);

  ArrowSet by_golden = transfer_closure_set(ms.acyclic_fibrations() | golden.arrows);
  ArrowSet fibrations = rlp_set(acyclic_cofibrations(ms));
  ArrowSet by_fibrations = fibrations & rw;
  if (!(by_golden == by_fibrations))
    fail(Reason::OracleDisagreement,
         "<AF u Gamma_f> differs from F /\\ R_f(W) at " + lat.arrow_label(f));
  return ModelStructure(lat, std::move(rw), std::move(by_golden));
}

ModelStructure left_localize(const ModelStructure& ms, const Arrow& f) {
  const Lattice& lat = ms.lattice();
  ArrowSet lw = left_localize_w(ms, f);
  CopperArrowSet copper = copper_arrows_for(ms, lw);

  ArrowSet new_ac = cotransfer_closure_set(acyclic_cofibrations(ms) | copper.arrows);
  ArrowSet af_check = rlp_set(new_ac) & lw;
  if (!(af_check == ms.acyclic_fibrations()))
    fail(Reason::OracleDisagreement,
         "left localization moved the acyclic fibrations at " + lat.arrow_label(f));
  return ModelStructure(lat, std::move(lw), ms.acyclic_fibrations());
}

ModelStructure localize(const ModelStructure& ms, Side side, const Arrow& f) {
  return side == Side::Right ? right_localize(ms, f) : left_localize(ms, f);
}

ModelStructure localize_general(const ModelStructure& ms, Side side, const Arrow& f) {
  const Lattice& lat = ms.lattice();
  lat.require_element(f.source);
  lat.require_element(f.target);
  if (!lat.leq(f.source, f.target))
    fail(Reason::ArrowNotComparable, "cannot localize at a non-arrow");
  if (f.is_identity() || ms.weak_equivalences().contains(f.source, f.target))
    fail(Reason::ArrowAlreadyWeak, lat.arrow_label(f) + " is already a weak equivalence");

  // Lexicographically least maximal chain from source to target.
  ModelStructure current = ms;
  Element at = f.source;
  while (at != f.target) {
    uint64_t nexts = lat.cover_mask(at) & lat.down_mask(f.target);
    Element next = std::countr_zero(nexts);
    Arrow step{at, next};
    if (!current.weak_equivalences().contains(step.source, step.target))
      current = localize(current, side, step);
    at = next;
  }
  return current;
}

ModelStructure total_order_right_localize(const ModelStructure& ms, Element i) {
  const Lattice& lat = ms.lattice();
  if (!lat.is_chain()) fail(Reason::NotAChain, "total-order localization needs a chain");
  lat.require_element(i);
  if (i + 1 >= lat.size()) fail(Reason::BadElement, "no short edge out of the top");
  Arrow f{i, i + 1};
  require_admissible(ms, f);

  const ArrowSet& w = ms.weak_equivalences();
  const ArrowSet& af = ms.acyclic_fibrations();

  Element j = i + 1;
  while (j + 1 < lat.size() && w.contains(i + 1, j + 1)) ++j;

  ArrowSet new_af = af;
  for (Element m_prime = 0; m_prime <= i; ++m_prime) {
    if (!af.contains(m_prime, i)) continue;
    for (Element j_prime = i + 1; j_prime <= j; ++j_prime) new_af.add(Arrow{m_prime, j_prime});
  }

  // New weak equivalences: the class of i absorbs [i+1, j].
  Element a = i;
  while (a > 0 && w.contains(a - 1, i)) --a;
  ArrowSet new_w = w;
  for (Element x = a; x <= j; ++x)
    for (Element y = x + 1; y <= j; ++y) new_w.add(Arrow{x, y});

  ModelStructure general = right_localize(ms, f);
  if (!(general.weak_equivalences() == new_w) || !(general.acyclic_fibrations() == new_af))
    fail(Reason::OracleDisagreement,
         "closed form disagrees with the general localization at " + lat.arrow_label(f));
  return general;
}

ModelStructure replay(const ModelStructure& base, std::span<const LocalizationStep> steps) {
  ModelStructure current = base;
  for (const LocalizationStep& step : steps) current = localize(current, step.side, step.arrow);
  return current;
}

}  // namespace modelkit
