#include "modelkit/saturation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace modelkit {

bool is_saturated_set(const ArrowSet& t) {
  const Lattice& lat = t.lattice();
  for (Element x = 0; x < lat.size(); ++x)
    for (Element y = 0; y < lat.size(); ++y) {
      if (!lat.lt(x, y) || !t.contains(x, y)) continue;
      for (Element z = 0; z < lat.size(); ++z) {
        if (!lat.leq(y, z) || !lat.lt(x, z)) continue;
        if (t.contains(x, z) && !t.contains(y, z)) return false;
      }
    }
  return true;
}

bool is_saturated(const TransferSystem& t) { return is_saturated_set(t.arrows()); }

bool grid_saturated_check(const Lattice& grid, const ArrowSet& shorts) {
  if (!grid.is_grid()) fail(Reason::NotAGrid, "short-arrow check needs a grid");
  for (const Arrow& a : shorts.members())
    if (!grid.is_cover(a.source, a.target))
      fail(Reason::ArrowNotShort, grid.arrow_label(a) + " is not short");

  for (const Arrow& sigma : shorts.members())
    for (int id = 0; id < grid.arrow_count(); ++id) {
      const Arrow& g = grid.arrow(id);
      if (g.target != sigma.target) continue;
      Arrow pb = pullback_arrow(grid, sigma, g);
      if (!pb.is_identity() && !shorts.contains(pb)) return false;
    }

  const int cols = grid.shape().m, rows = grid.shape().n;
  for (int x = 0; x < cols; ++x)
    for (int y = 0; y < rows; ++y) {
      int present = 0;
      present += shorts.contains(grid.at(x, y), grid.at(x + 1, y));
      present += shorts.contains(grid.at(x, y + 1), grid.at(x + 1, y + 1));
      present += shorts.contains(grid.at(x, y), grid.at(x, y + 1));
      present += shorts.contains(grid.at(x + 1, y), grid.at(x + 1, y + 1));
      if (present == 3) return false;
    }
  return true;
}

namespace {

std::vector<Arrow> inner_vertical_shorts(const SaturatedGridDatum& d) {
  std::vector<Arrow> out;
  const Lattice& small = *d.inner_lattice;
  for (const Arrow& a : d.inner.arrows().members())
    if (small.is_cover(a.source, a.target) &&
        small.coords(a.source).first == small.coords(a.target).first)
      out.push_back(a);
  return out;
}

std::vector<Arrow> inner_horizontal_shorts(const SaturatedGridDatum& d) {
  std::vector<Arrow> out;
  const Lattice& small = *d.inner_lattice;
  for (const Arrow& a : d.inner.arrows().members())
    if (small.is_cover(a.source, a.target) &&
        small.coords(a.source).second == small.coords(a.target).second)
      out.push_back(a);
  return out;
}

// iota on A-indices: a column with a gap-jumping horizontal lands just left
// of its successor, everything else stays put.
std::vector<int> iota_map(const SaturatedGridDatum& d) {
  const Lattice& small = *d.inner_lattice;
  const int cols = static_cast<int>(d.a.size());
  std::vector<int> iota(cols);
  std::vector<char> has_horizontal(cols, 0);
  for (const Arrow& h : inner_horizontal_shorts(d))
    has_horizontal[small.coords(h.source).first] = 1;
  for (int ci = 0; ci < cols; ++ci)
    iota[ci] = has_horizontal[ci] ? d.a[ci + 1] - 1 : d.a[ci];
  return iota;
}

struct ConstructionArrows {
  std::vector<Arrow> embedded;
  std::vector<Arrow> thickening;
  std::vector<Arrow> spacers;
  std::vector<Arrow> top_verticals;
  std::vector<Arrow> top_fills;
};

ConstructionArrows construction_arrows(const Lattice& big, const SaturatedGridDatum& d) {
  const Lattice& small = *d.inner_lattice;
  const int n = d.n, m = d.m;
  ConstructionArrows out;
  std::vector<int> iota = iota_map(d);

  std::vector<std::vector<int>> vertical_rows(d.a.size());
  for (const Arrow& v : inner_vertical_shorts(d))
    vertical_rows[small.coords(v.source).first].push_back(small.coords(v.source).second);

  for (size_t ci = 0; ci < d.a.size(); ++ci)
    for (int j : vertical_rows[ci])
      out.embedded.push_back(Arrow{big.at(iota[ci], j), big.at(iota[ci], j + 1)});
  for (const Arrow& h : inner_horizontal_shorts(d)) {
    auto [ci, j] = small.coords(h.source);
    int t = d.a[ci + 1];
    out.embedded.push_back(Arrow{big.at(t - 1, j), big.at(t, j)});
  }

  for (size_t ci = 0; ci < d.a.size(); ++ci) {
    if (iota[ci] == d.a[ci]) continue;
    int i = d.a[ci], t = d.a[ci + 1];
    for (int x = i; x <= t - 2; ++x) {
      for (int j : vertical_rows[ci])
        out.thickening.push_back(Arrow{big.at(x, j), big.at(x, j + 1)});
      for (int j = 0; j <= n; ++j)
        out.thickening.push_back(Arrow{big.at(x, j), big.at(x + 1, j)});
    }
  }

  std::vector<int> gaps;
  for (int i = 0, ai = 0; i <= m; ++i) {
    if (ai < static_cast<int>(d.a.size()) && d.a[ai] == i)
      ++ai;
    else
      gaps.push_back(i);
  }
  if (!gaps.empty()) {
    for (int i : gaps)
      if (i > gaps.front())
        for (int j = 0; j <= n + 1; ++j)
          out.spacers.push_back(Arrow{big.at(i - 1, j), big.at(i, j)});
  }

  const int k = gaps.empty() ? m : gaps.front() - 1;
  for (int i = 0; i <= k; ++i)
    out.top_verticals.push_back(Arrow{big.at(i, n), big.at(i, n + 1)});

  // Fill to a saturated short-arrow set: pullback closure among the shorts
  // plus three-out-of-four on every unit square.  The construction states
  // the fill for the top row only, but a spacer wall crossing an embedded
  // vertical leaves a three-sided square further down.
  ArrowSet gen(big);
  for (const auto* group : {&out.embedded, &out.thickening, &out.spacers, &out.top_verticals})
    for (const Arrow& a : *group) gen.add(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Arrow& sigma : gen.members())
      for (int id = 0; id < big.arrow_count(); ++id) {
        const Arrow& g = big.arrow(id);
        if (g.target != sigma.target) continue;
        Arrow pb = pullback_arrow(big, sigma, g);
        if (!pb.is_identity() && !gen.contains(pb)) {
          gen.add(pb);
          changed = true;
        }
      }
    for (int x = 0; x < m; ++x)
      for (int y = 0; y <= n; ++y) {
        Arrow sides[4] = {{big.at(x, y), big.at(x + 1, y)},
                          {big.at(x, y + 1), big.at(x + 1, y + 1)},
                          {big.at(x, y), big.at(x, y + 1)},
                          {big.at(x + 1, y), big.at(x + 1, y + 1)}};
        int present = 0;
        for (const Arrow& s : sides) present += gen.contains(s);
        if (present != 3) continue;
        for (const Arrow& s : sides)
          if (!gen.contains(s)) {
            gen.add(s);
            out.top_fills.push_back(s);
          }
        changed = true;
      }
  }
  return out;
}

}  // namespace

SaturatedGridDatum make_saturated_datum(int m, int n, std::vector<int> a,
                                        const std::vector<Arrow>& inner_arrows) {
  if (a.empty()) fail(Reason::InvalidDatum, "A must be nonempty");
  auto small = std::make_shared<Lattice>(Lattice::grid(static_cast<int>(a.size()) - 1, n));
  TransferSystem inner = transfer_closure(ArrowSet::from_arrows(*small, inner_arrows));
  SaturatedGridDatum d{m, n, std::move(a), small, std::move(inner)};
  validate_datum(d);
  return d;
}

void validate_datum(const SaturatedGridDatum& d) {
  if (d.m < 0 || d.n < 0) fail(Reason::InvalidDatum, "negative grid dimensions");
  if (d.a.empty()) fail(Reason::InvalidDatum, "A must be nonempty");
  for (size_t i = 0; i < d.a.size(); ++i) {
    if (d.a[i] < 0 || d.a[i] > d.m) fail(Reason::InvalidDatum, "A outside 0..m");
    if (i > 0 && d.a[i] <= d.a[i - 1]) fail(Reason::InvalidDatum, "A not strictly increasing");
  }
  if (!d.inner_lattice ||
      !d.inner_lattice->same_order(Lattice::grid(static_cast<int>(d.a.size()) - 1, d.n)))
    fail(Reason::InvalidDatum, "inner lattice is not grid(|A|-1, n)");
  if (!is_saturated(d.inner)) fail(Reason::InvalidDatum, "inner system is not saturated");
}

TransferSystem saturated_smaller_to_bigger(const Lattice& big, const SaturatedGridDatum& d) {
  validate_datum(d);
  if (!big.same_order(Lattice::grid(d.m, d.n + 1)))
    fail(Reason::NotAGrid, "target lattice is not grid(m, n+1)");
  ConstructionArrows groups = construction_arrows(big, d);
  ArrowSet gen(big);
  for (const auto* group :
       {&groups.embedded, &groups.thickening, &groups.spacers, &groups.top_verticals,
        &groups.top_fills})
    for (const Arrow& a : *group) gen.add(a);
  ArrowSet t = transfer_closure_set(gen);
  if (!is_saturated_set(t))
    fail(Reason::InvalidDatum, "construction produced an unsaturated system");
  return TransferSystem::unchecked(std::move(t));
}

std::optional<SaturatedGridDatum> try_decode_datum(const TransferSystem& t) {
  const Lattice& big = t.lattice();
  if (!big.is_grid() || big.shape().n < 1) return std::nullopt;
  const int m = big.shape().m, n = big.shape().n - 1;

  int u = 0;
  while (u <= m && t.contains(big.at(u, n), big.at(u, n + 1))) ++u;
  for (int c = u; c <= m; ++c)
    if (t.contains(big.at(c, n), big.at(c, n + 1))) return std::nullopt;

  std::vector<int> a;
  if (u == m + 1) {
    for (int c = 0; c <= m; ++c) a.push_back(c);
  } else {
    for (int c = 0; c < u; ++c) a.push_back(c);
    for (int c = u + 1; c <= m; ++c) {
      int wall = 0;
      while (wall <= n + 1 && t.contains(big.at(c - 1, wall), big.at(c, wall))) ++wall;
      for (int j = wall; j <= n + 1; ++j)
        if (t.contains(big.at(c - 1, j), big.at(c, j))) return std::nullopt;
      if (wall < n + 2) a.push_back(c);
    }
  }
  if (a.empty()) return std::nullopt;

  auto small = std::make_shared<Lattice>(Lattice::grid(static_cast<int>(a.size()) - 1, n));
  ArrowSet gen(*small);
  for (size_t ci = 0; ci < a.size(); ++ci)
    for (int j = 0; j + 1 <= n; ++j)
      if (t.contains(big.at(a[ci], j), big.at(a[ci], j + 1)))
        gen.add(Arrow{small->at(static_cast<int>(ci), j), small->at(static_cast<int>(ci), j + 1)});
  for (size_t ci = 1; ci < a.size(); ++ci) {
    int c = a[ci];
    for (int j = 0; j <= n; ++j)
      if (t.contains(big.at(c - 1, j), big.at(c, j)))
        gen.add(Arrow{small->at(static_cast<int>(ci) - 1, j), small->at(static_cast<int>(ci), j)});
  }
  ArrowSet inner = transfer_closure_set(gen);
  if (!is_saturated_set(inner)) return std::nullopt;
  return SaturatedGridDatum{m, n, std::move(a), small,
                            TransferSystem::unchecked(std::move(inner))};
}

SaturatedGridDatum saturated_bigger_to_smaller(const TransferSystem& t) {
  const Lattice& big = t.lattice();
  if (!big.is_grid() || big.shape().n < 1)
    fail(Reason::NotAGrid, "need a grid with at least one row above the base");
  if (!is_saturated(t)) fail(Reason::UnsaturatedInput, "input system is not saturated");
  std::optional<SaturatedGridDatum> d = try_decode_datum(t);
  if (!d) fail(Reason::NotInBijectionImage, "no datum shape fits this system");
  if (!(saturated_smaller_to_bigger(big, *d) == t))
    fail(Reason::NotInBijectionImage, "system is not produced by the forward construction");
  return std::move(*d);
}

namespace {

std::vector<Arrow> shorts_ascending(const Lattice& lat, const ArrowSet& t) {
  std::vector<Arrow> out;
  for (int id = 0; id < lat.arrow_count(); ++id) {
    const Arrow& a = lat.arrow(id);
    if (lat.is_cover(a.source, a.target) && t.contains_id(id)) out.push_back(a);
  }
  return out;
}

// Right-localization order realizing (t, t) from the trivial model
// structure: recurse through the grid construction when the system is in
// its image, otherwise sweep the short arrows in index order (any order
// works; the closure keeps everything inside a saturated t).
std::vector<Arrow> rights_candidates(const Lattice& lat, const ArrowSet& t) {
  if (lat.is_chain()) return shorts_ascending(lat, t);
  TransferSystem ts = TransferSystem::unchecked(t);
  std::optional<SaturatedGridDatum> d = try_decode_datum(ts);
  if (d && saturated_smaller_to_bigger(lat, *d) == ts) {
    std::vector<Arrow> out;
    std::vector<int> iota = iota_map(*d);
    const Lattice& small = *d->inner_lattice;
    for (const Arrow& child : rights_candidates(small, d->inner.arrows())) {
      auto [x1, y1] = small.coords(child.source);
      auto [x2, y2] = small.coords(child.target);
      if (x1 == x2)
        out.push_back(Arrow{lat.at(iota[x1], y1), lat.at(iota[x1], y2)});
      else
        out.push_back(Arrow{lat.at(d->a[x2] - 1, y1), lat.at(d->a[x2], y1)});
    }
    ConstructionArrows groups = construction_arrows(lat, *d);
    for (const auto* group : {&groups.top_verticals, &groups.spacers, &groups.thickening})
      for (const Arrow& a : *group) out.push_back(a);
    return out;
  }
  return shorts_ascending(lat, t);
}

}  // namespace

LocalizationSequence zigzag_realize(const ModelStructure& ms) {
  const Lattice& lat = ms.lattice();
  if (!lat.is_grid() && !lat.is_chain())
    fail(Reason::NotAGrid, "zigzag realization needs a grid");
  if (!is_saturated_set(ms.acyclic_fibrations()))
    fail(Reason::UnsaturatedInput, "acyclic fibrations are not saturated");

  LocalizationSequence seq;
  ModelStructure sim = ModelStructure::trivial(lat);
  auto apply_right = [&](const Arrow& f) {
    if (sim.weak_equivalences().contains(f.source, f.target)) return;
    sim = right_localize(sim, f);
    seq.steps.push_back({Side::Right, f});
  };
  for (const Arrow& f : rights_candidates(lat, ms.acyclic_fibrations())) apply_right(f);
  for (const Arrow& f : shorts_ascending(lat, ms.acyclic_fibrations())) apply_right(f);
  if (!(sim.weak_equivalences() == ms.acyclic_fibrations()) ||
      !(sim.acyclic_fibrations() == ms.acyclic_fibrations()))
    fail(Reason::ReplayMismatch, "right-localization stage missed (AF, AF)");

  for (const Arrow& f : shorts_ascending(lat, ms.weak_equivalences())) {
    if (sim.weak_equivalences().contains(f.source, f.target)) continue;
    sim = left_localize(sim, f);
    seq.steps.push_back({Side::Left, f});
  }
  if (!(sim == ms)) fail(Reason::ReplayMismatch, "left-localization stage missed W");
  return seq;
}

ReachabilityGraph reachability_graph(const Lattice& lat, const EnumerationLimits& limits) {
  ReachabilityGraph graph;
  graph.lat = &lat;
  graph.nodes = enumerate_model_structures(lat, limits);

  std::map<std::string, int> by_key;
  for (size_t i = 0; i < graph.nodes.size(); ++i)
    by_key[graph.nodes[i].canonical_key()] = static_cast<int>(i);
  graph.root = by_key.at(ModelStructure::trivial(lat).canonical_key());

  ArrowSet covers = short_edges(lat);
  for (size_t i = 0; i < graph.nodes.size(); ++i) {
    const ModelStructure& ms = graph.nodes[i];
    for (const Arrow& f : covers.members()) {
      if (ms.weak_equivalences().contains(f.source, f.target)) continue;
      for (Side side : {Side::Right, Side::Left}) {
        ModelStructure target = localize(ms, side, f);
        auto it = by_key.find(target.canonical_key());
        if (it == by_key.end())
          fail(Reason::OracleDisagreement, "localization left the enumerated census");
        graph.edges.push_back({static_cast<int>(i), it->second, side, f});
      }
    }
  }

  graph.reachable.assign(graph.nodes.size(), 0);
  std::vector<int> frontier{graph.root};
  graph.reachable[graph.root] = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int node : frontier)
      for (const auto& e : graph.edges)
        if (e.from == node && !graph.reachable[e.to]) {
          graph.reachable[e.to] = 1;
          next.push_back(e.to);
        }
    frontier = std::move(next);
  }
  for (size_t i = 0; i < graph.nodes.size(); ++i)
    if (!graph.reachable[i]) graph.unreachable.push_back(static_cast<int>(i));
  return graph;
}

std::vector<int> nodes_with_no_incoming(const ReachabilityGraph& graph) {
  std::vector<char> has_incoming(graph.nodes.size(), 0);
  for (const auto& e : graph.edges)
    if (e.from != e.to) has_incoming[e.to] = 1;
  std::vector<int> out;
  for (size_t i = 0; i < graph.nodes.size(); ++i)
    if (!has_incoming[i]) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace modelkit
