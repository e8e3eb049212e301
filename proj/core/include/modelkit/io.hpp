#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "modelkit/saturation.hpp"

namespace modelkit::io {

using LatticePtr = std::shared_ptr<const Lattice>;

// {"type":"grid","m":2,"n":3} | {"type":"chain","n":4}
// | {"type":"explicit","size":k,"leq":[[i,j],...]}
nlohmann::json lattice_to_json(const Lattice& lat);
LatticePtr lattice_from_json(const nlohmann::json& j);
// Shorthand accepted anywhere a lattice file is: "grid:MxN" or "chain:N".
LatticePtr lattice_from_shorthand(const std::string& text);

// Arrows serialize as [source,target]; grids also accept the coordinate
// sugar [[x1,y1],[x2,y2]] on input.
nlohmann::json arrow_to_json(const Arrow& a);
Arrow arrow_from_json(const Lattice& lat, const nlohmann::json& j);
nlohmann::json arrows_to_json(const ArrowSet& s);  // sorted non-identity pairs
ArrowSet arrows_from_json(const Lattice& lat, const nlohmann::json& j);

// {"arrows":[...], "lattice":{...}}
nlohmann::json transfer_system_to_json(const TransferSystem& t);

struct LoadedModel {
  LatticePtr lattice;
  ArrowSet w;
  ArrowSet af;
};
// {"AF":[[s,t],...], "W":[[s,t],...], "lattice":{...}}; parsing does not
// validate the model axioms (validate explicitly, so the CLI can report the
// reason code).
nlohmann::json model_to_json(const ModelStructure& ms);
LoadedModel model_from_json(const nlohmann::json& j);

// {"A":[...], "inner":[[[x,y],[x,y]],...], "m":..., "n":...}; inner arrows
// use A-label x coordinates.
nlohmann::json datum_to_json(const SaturatedGridDatum& d);
SaturatedGridDatum datum_from_json(const nlohmann::json& j);

// {"steps":[{"arrow":[s,t],"side":"right"},...]}
nlohmann::json sequence_to_json(const LocalizationSequence& seq);
LocalizationSequence sequence_from_json(const Lattice& lat, const nlohmann::json& j);

nlohmann::json reachability_to_json(const ReachabilityGraph& g);
// Right localizations in blue, left in grey; node labels carry the
// canonical (W, AF) bit patterns.
std::string reachability_to_dot(const ReachabilityGraph& g);

}  // namespace modelkit::io
