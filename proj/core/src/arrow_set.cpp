#include "modelkit/arrow_set.hpp"

#include <algorithm>
#include <bit>

namespace modelkit {

ArrowSet::ArrowSet(const Lattice& lat)
    : lat_(&lat), words_((lat.arrow_count() + 63) / 64, 0) {}

ArrowSet ArrowSet::all(const Lattice& lat) {
  ArrowSet s(lat);
  const int n = lat.arrow_count();
  for (size_t w = 0; w < s.words_.size(); ++w) {
    int remaining = n - static_cast<int>(w * 64);
    if (remaining >= 64)
      s.words_[w] = ~uint64_t{0};
    else if (remaining > 0)
      s.words_[w] = (uint64_t{1} << remaining) - 1;
  }
  return s;
}

ArrowSet ArrowSet::from_arrows(const Lattice& lat, const std::vector<Arrow>& arrows) {
  ArrowSet s(lat);
  for (const Arrow& a : arrows) {
    if (a.is_identity()) continue;
    s.add(a);
  }
  return s;
}

bool ArrowSet::contains(Element s, Element t) const {
  if (s == t) return lat_->valid_element(s);
  int id = lat_->arrow_id(s, t);
  return id >= 0 && contains_id(id);
}

void ArrowSet::add(const Arrow& a) {
  if (a.is_identity()) return;
  int id = lat_->arrow_id(a);
  if (id < 0) fail(Reason::ArrowNotComparable, "cannot add " + lat_->arrow_label(a));
  add_id(id);
}

void ArrowSet::remove(const Arrow& a) {
  if (a.is_identity()) return;
  int id = lat_->arrow_id(a);
  if (id >= 0) remove_id(id);
}

bool ArrowSet::empty() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

int ArrowSet::member_count() const {
  int n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

std::vector<Arrow> ArrowSet::members() const {
  std::vector<Arrow> out;
  out.reserve(member_count());
  for_each_id([&](int id) { out.push_back(lat_->arrow(id)); });
  return out;
}

bool ArrowSet::subset_of(const ArrowSet& other) const {
  for (size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

ArrowSet& ArrowSet::operator|=(const ArrowSet& other) {
  for (size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ArrowSet& ArrowSet::operator&=(const ArrowSet& other) {
  for (size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ArrowSet& ArrowSet::operator-=(const ArrowSet& other) {
  for (size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool ArrowSet::lex_less(const ArrowSet& other) const {
  // First differing arrow id decides; absence sorts first.
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t diff = words_[w] ^ other.words_[w];
    if (!diff) continue;
    int bit = std::countr_zero(diff);
    return ((words_[w] >> bit) & 1u) == 0;
  }
  return false;
}

uint64_t ArrowSet::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

std::string ArrowSet::bit_string() const {
  std::string s(lat_->arrow_count(), '0');
  for_each_id([&](int id) { s[id] = '1'; });
  return s;
}

bool lifts_against(const Lattice& lat, const Arrow& i, const Arrow& p) {
  if (lat.leq(i.source, p.source) && lat.leq(i.target, p.target))
    return lat.leq(i.target, p.source);
  return true;  // no commuting square, nothing to lift
}

Arrow pullback_arrow(const Lattice& lat, const Arrow& f, const Arrow& g) {
  if (f.target != g.target)
    fail(Reason::TargetMismatch, "pullback needs a shared target");
  return Arrow{lat.meet(f.source, g.source), g.source};
}

Arrow pushout_arrow(const Lattice& lat, const Arrow& f, const Arrow& g) {
  if (f.source != g.source)
    fail(Reason::SourceMismatch, "pushout needs a shared source");
  return Arrow{g.target, lat.join(f.target, g.target)};
}

ArrowSet short_edges(const Lattice& lat) {
  ArrowSet s(lat);
  for (int id = 0; id < lat.arrow_count(); ++id) {
    const Arrow& a = lat.arrow(id);
    if (lat.is_cover(a.source, a.target)) s.add_id(id);
  }
  return s;
}

ArrowSet rlp_set(const ArrowSet& s) {
  const Lattice& lat = s.lattice();
  ArrowSet out = ArrowSet::all(lat);
  std::vector<Arrow> lefts = s.members();
  for (int id = 0; id < lat.arrow_count(); ++id) {
    const Arrow& p = lat.arrow(id);
    for (const Arrow& i : lefts)
      if (!lifts_against(lat, i, p)) {
        out.remove_id(id);
        break;
      }
  }
  return out;
}

ArrowSet llp_set(const ArrowSet& s) {
  const Lattice& lat = s.lattice();
  ArrowSet out = ArrowSet::all(lat);
  std::vector<Arrow> rights = s.members();
  for (int id = 0; id < lat.arrow_count(); ++id) {
    const Arrow& i = lat.arrow(id);
    for (const Arrow& p : rights)
      if (!lifts_against(lat, i, p)) {
        out.remove_id(id);
        break;
      }
  }
  return out;
}

ArrowSet compose_sets(const ArrowSet& after, const ArrowSet& before) {
  const Lattice& lat = before.lattice();
  ArrowSet out(lat);
  for (int id = 0; id < lat.arrow_count(); ++id) {
    const Arrow& a = lat.arrow(id);
    for (Element mid = 0; mid < lat.size(); ++mid) {
      if (!lat.leq(a.source, mid) || !lat.leq(mid, a.target)) continue;
      if (before.contains(a.source, mid) && after.contains(mid, a.target)) {
        out.add_id(id);
        break;
      }
    }
  }
  return out;
}

ArrowSet two_out_of_three_closure(const ArrowSet& s) {
  const Lattice& lat = s.lattice();
  ArrowSet out = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < lat.size(); ++x)
      for (Element y = x; y < lat.size(); ++y) {
        if (!lat.leq(x, y)) continue;
        for (Element z = y; z < lat.size(); ++z) {
          if (!lat.leq(y, z)) continue;
          bool f = out.contains(x, y), g = out.contains(y, z), gf = out.contains(x, z);
          if (f && g && !gf) { out.add(Arrow{x, z}); changed = true; }
          else if (f && gf && !g) { out.add(Arrow{y, z}); changed = true; }
          else if (g && gf && !f) { out.add(Arrow{x, y}); changed = true; }
        }
      }
  }
  return out;
}

bool is_composition_closed(const ArrowSet& s) {
  const Lattice& lat = s.lattice();
  for (const Arrow& f : s.members())
    for (Element z = 0; z < lat.size(); ++z)
      if (lat.lt(f.target, z) && s.contains(f.target, z) && !s.contains(f.source, z))
        return false;
  return true;
}

}  // namespace modelkit
