#include <doctest.h>

#include "modelkit/io.hpp"

using namespace modelkit;
using nlohmann::json;

TEST_CASE("lattice json round trip") {
  for (const char* text : {R"({"type":"grid","m":2,"n":3})", R"({"type":"chain","n":4})"}) {
    json j = json::parse(text);
    io::LatticePtr lat = io::lattice_from_json(j);
    CHECK(io::lattice_to_json(*lat) == j);
  }
  json explicit_j = json::parse(
      R"({"type":"explicit","size":4,"leq":[[0,1],[0,2],[0,3],[1,3],[2,3]]})");
  io::LatticePtr lat = io::lattice_from_json(explicit_j);
  CHECK(lat->meet(1, 2) == 0);
  json round = io::lattice_to_json(*lat);
  CHECK(io::lattice_from_json(round)->same_order(*lat));

  CHECK_THROWS_AS(io::lattice_from_json(json::parse(R"({"type":"torus"})")), DomainError);
  CHECK(io::lattice_from_shorthand("grid:2x3")->size() == 12);
  CHECK(io::lattice_from_shorthand("chain:4")->size() == 5);
  CHECK_THROWS_AS(io::lattice_from_shorthand("ring:4"), DomainError);
}

TEST_CASE("arrows accept ids and grid coordinate sugar") {
  Lattice g = Lattice::grid(2, 3);
  Arrow by_id = io::arrow_from_json(g, json::parse("[0, 5]"));
  Arrow by_coords = io::arrow_from_json(g, json::parse("[[0,0],[1,1]]"));
  CHECK(by_id == Arrow{0, 5});
  CHECK(by_coords == Arrow{g.at(0, 0), g.at(1, 1)});
  CHECK_THROWS_AS(io::arrow_from_json(g, json::parse("[[1,1],[0,0]]")), DomainError);
}

TEST_CASE("model json round trips byte-identically") {
  Lattice sq = Lattice::grid(1, 1);
  ArrowSet af(sq);
  af.add(Arrow{sq.at(0, 0), sq.at(1, 0)});
  af.add(Arrow{sq.at(0, 0), sq.at(0, 1)});
  ModelStructure ms(sq, af, af);
  json j = io::model_to_json(ms);
  io::LoadedModel loaded = io::model_from_json(j);
  ModelStructure back(*loaded.lattice, loaded.w, loaded.af);
  CHECK(io::model_to_json(back).dump() == j.dump());
  CHECK(json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("datum json uses A-label coordinates") {
  Lattice small = Lattice::grid(3, 1);
  SaturatedGridDatum datum = make_saturated_datum(
      5, 1, {0, 1, 3, 4},
      {Arrow{small.at(0, 0), small.at(0, 1)}, Arrow{small.at(1, 0), small.at(1, 1)},
       Arrow{small.at(1, 0), small.at(2, 0)}});
  json j = io::datum_to_json(datum);
  CHECK(j["A"] == json::array({0, 1, 3, 4}));
  // the gap horizontal appears under its labels 1 -> 3
  bool found = false;
  for (const auto& a : j["inner"])
    if (a[0][0] == 1 && a[1][0] == 3) found = true;
  CHECK(found);
  CHECK(io::datum_from_json(j) == datum);
}

TEST_CASE("sequence json round trip") {
  Lattice sq = Lattice::grid(1, 1);
  LocalizationSequence seq;
  seq.steps.push_back({Side::Right, Arrow{sq.at(0, 0), sq.at(1, 0)}});
  seq.steps.push_back({Side::Left, Arrow{sq.at(0, 1), sq.at(1, 1)}});
  json j = io::sequence_to_json(seq);
  LocalizationSequence back = io::sequence_from_json(sq, j);
  CHECK(back.steps == seq.steps);
}

TEST_CASE("reachability exports") {
  Lattice sq = Lattice::grid(1, 1);
  ReachabilityGraph g = reachability_graph(sq);
  std::string dot = io::reachability_to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("side=right") != std::string::npos);
  CHECK(dot.find("side=left") != std::string::npos);
  CHECK(dot.find("color=blue") != std::string::npos);
  CHECK(dot.find("color=grey") != std::string::npos);

  json j = io::reachability_to_json(g);
  CHECK(j["nodes"].size() == 23);
  CHECK(j["root"].get<int>() == g.root);
}
