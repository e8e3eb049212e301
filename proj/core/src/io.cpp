#include "modelkit/io.hpp"

#include <sstream>

namespace modelkit::io {

using nlohmann::json;

json lattice_to_json(const Lattice& lat) {
  json j;
  switch (lat.shape().kind) {
    case LatticeShape::Chain:
      j["type"] = "chain";
      j["n"] = lat.shape().m;
      break;
    case LatticeShape::Grid:
      j["type"] = "grid";
      j["m"] = lat.shape().m;
      j["n"] = lat.shape().n;
      break;
    case LatticeShape::Explicit: {
      j["type"] = "explicit";
      j["size"] = lat.size();
      json pairs = json::array();
      for (Element a = 0; a < lat.size(); ++a)
        for (Element b = 0; b < lat.size(); ++b)
          if (a != b && lat.leq(a, b)) pairs.push_back(json::array({a, b}));
      j["leq"] = pairs;
      break;
    }
  }
  return j;
}

LatticePtr lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    fail(Reason::ParseError, "lattice needs a \"type\" field");
  const std::string type = j.at("type").get<std::string>();
  if (type == "chain") return std::make_shared<Lattice>(Lattice::chain(j.at("n").get<int>()));
  if (type == "grid")
    return std::make_shared<Lattice>(Lattice::grid(j.at("m").get<int>(), j.at("n").get<int>()));
  if (type == "explicit") {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("leq"))
      pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return std::make_shared<Lattice>(
        Lattice::explicit_from_pairs(j.at("size").get<int>(), pairs));
  }
  fail(Reason::ParseError, "unknown lattice type \"" + type + "\"");
}

LatticePtr lattice_from_shorthand(const std::string& text) {
  if (text.rfind("grid:", 0) == 0) {
    auto x = text.find('x', 5);
    if (x == std::string::npos) fail(Reason::ParseError, "expected grid:MxN");
    int m = std::stoi(text.substr(5, x - 5));
    int n = std::stoi(text.substr(x + 1));
    return std::make_shared<Lattice>(Lattice::grid(m, n));
  }
  if (text.rfind("chain:", 0) == 0)
    return std::make_shared<Lattice>(Lattice::chain(std::stoi(text.substr(6))));
  fail(Reason::ParseError, "expected grid:MxN or chain:N, got \"" + text + "\"");
}

json arrow_to_json(const Arrow& a) { return json::array({a.source, a.target}); }

Arrow arrow_from_json(const Lattice& lat, const json& j) {
  if (!j.is_array() || j.size() != 2) fail(Reason::ParseError, "arrow must be a pair");
  auto endpoint = [&](const json& e) -> Element {
    if (e.is_number_integer()) return e.get<int>();
    if (e.is_array() && e.size() == 2)
      return lat.at(e.at(0).get<int>(), e.at(1).get<int>());
    fail(Reason::ParseError, "arrow endpoint must be an id or [x,y]");
  };
  Element s = endpoint(j.at(0)), t = endpoint(j.at(1));
  return lat.make_arrow(s, t);
}

json arrows_to_json(const ArrowSet& s) {
  json out = json::array();
  for (const Arrow& a : s.members()) out.push_back(arrow_to_json(a));
  return out;
}

ArrowSet arrows_from_json(const Lattice& lat, const json& j) {
  ArrowSet s(lat);
  if (!j.is_array()) fail(Reason::ParseError, "arrow list must be an array");
  for (const auto& e : j) s.add(arrow_from_json(lat, e));
  return s;
}

json transfer_system_to_json(const TransferSystem& t) {
  json j;
  j["arrows"] = arrows_to_json(t.arrows());
  j["lattice"] = lattice_to_json(t.lattice());
  return j;
}

json model_to_json(const ModelStructure& ms) {
  json j;
  j["AF"] = arrows_to_json(ms.acyclic_fibrations());
  j["W"] = arrows_to_json(ms.weak_equivalences());
  j["lattice"] = lattice_to_json(ms.lattice());
  return j;
}

LoadedModel model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lattice"))
    fail(Reason::ParseError, "model needs a \"lattice\" field");
  LatticePtr lat = lattice_from_json(j.at("lattice"));
  ArrowSet w = j.contains("W") ? arrows_from_json(*lat, j.at("W")) : ArrowSet(*lat);
  ArrowSet af = j.contains("AF") ? arrows_from_json(*lat, j.at("AF")) : ArrowSet(*lat);
  return LoadedModel{std::move(lat), std::move(w), std::move(af)};
}

json datum_to_json(const SaturatedGridDatum& d) {
  json j;
  j["A"] = d.a;
  json inner = json::array();
  const Lattice& small = *d.inner_lattice;
  for (const Arrow& a : d.inner.arrows().members()) {
    auto [x1, y1] = small.coords(a.source);
    auto [x2, y2] = small.coords(a.target);
    inner.push_back(json::array(
        {json::array({d.a[x1], y1}), json::array({d.a[x2], y2})}));
  }
  j["inner"] = inner;
  j["m"] = d.m;
  j["n"] = d.n;
  return j;
}

SaturatedGridDatum datum_from_json(const json& j) {
  int m = j.at("m").get<int>();
  int n = j.at("n").get<int>();
  std::vector<int> a = j.at("A").get<std::vector<int>>();
  std::vector<int> index_of(m + 1, -1);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] >= 0 && a[i] <= m) index_of[a[i]] = static_cast<int>(i);
  Lattice small = Lattice::grid(static_cast<int>(a.size()) - 1, n);
  std::vector<Arrow> arrows;
  for (const auto& e : j.at("inner")) {
    auto label_endpoint = [&](const json& p) -> Element {
      int label = p.at(0).get<int>(), y = p.at(1).get<int>();
      if (label < 0 || label > m || index_of[label] < 0)
        fail(Reason::ParseError, "inner arrow column " + std::to_string(label) + " not in A");
      return small.at(index_of[label], y);
    };
    arrows.push_back(Arrow{label_endpoint(e.at(0)), label_endpoint(e.at(1))});
  }
  return make_saturated_datum(m, n, std::move(a), arrows);
}

json sequence_to_json(const LocalizationSequence& seq) {
  json steps = json::array();
  for (const LocalizationStep& s : seq.steps) {
    json step;
    step["arrow"] = arrow_to_json(s.arrow);
    step["side"] = side_name(s.side);
    steps.push_back(step);
  }
  json j;
  j["steps"] = steps;
  return j;
}

LocalizationSequence sequence_from_json(const Lattice& lat, const json& j) {
  LocalizationSequence seq;
  for (const auto& e : j.at("steps")) {
    const std::string side = e.at("side").get<std::string>();
    if (side != "left" && side != "right")
      fail(Reason::ParseError, "side must be left or right");
    seq.steps.push_back({side == "left" ? Side::Left : Side::Right,
                         arrow_from_json(lat, e.at("arrow"))});
  }
  return seq;
}

json reachability_to_json(const ReachabilityGraph& g) {
  json nodes = json::array();
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    json node;
    node["AF"] = arrows_to_json(g.nodes[i].acyclic_fibrations());
    node["W"] = arrows_to_json(g.nodes[i].weak_equivalences());
    node["id"] = i;
    node["key"] = g.nodes[i].canonical_key();
    node["reachable"] = static_cast<bool>(g.reachable[i]);
    nodes.push_back(node);
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    json edge;
    edge["arrow"] = arrow_to_json(e.arrow);
    edge["from"] = e.from;
    edge["side"] = side_name(e.side);
    edge["to"] = e.to;
    edges.push_back(edge);
  }
  json j;
  j["edges"] = edges;
  j["lattice"] = lattice_to_json(*g.lat);
  j["nodes"] = nodes;
  j["root"] = g.root;
  j["unreachable"] = g.unreachable;
  return j;
}

std::string reachability_to_dot(const ReachabilityGraph& g) {
  std::ostringstream out;
  out << "digraph localizations {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontsize=10];\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << i << ": " << g.nodes[i].canonical_key() << "\"";
    if (static_cast<int>(i) == g.root) out << ", style=bold";
    if (!g.reachable[i]) out << ", color=red";
    out << "];\n";
  }
  for (const auto& e : g.edges) {
    const Lattice& lat = *g.lat;
    out << "  n" << e.from << " -> n" << e.to << " [side=" << side_name(e.side)
        << ", arrow=\"" << lat.arrow_label(e.arrow) << "\", color="
        << (e.side == Side::Right ? "blue" : "grey") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace modelkit::io
