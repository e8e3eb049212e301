// Command-line front end: enumerate / validate / localize / golden / copper
// / tmin / zigzag / replay / reach / bijection over the JSON formats of the
// core library.  Counts go to stdout as plain lines, structures stream as
// JSON lines, graphs as DOT.  Exit codes: 0 ok, 1 domain error (stable
// reason code on stderr), 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "modelkit/io.hpp"

using namespace modelkit;
using nlohmann::json;

namespace {

struct CommonArgs {
  std::string lattice;
  std::string model;
  std::string arrow;
  std::string side = "right";
  std::string kind = "transfer-systems";
  std::string format = "json";
  std::string out;
  std::string datum;
  std::string dot;
  bool force = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Reason::IoError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Reason::ParseError, path + ": " + e.what());
  }
  return j;
}

io::LatticePtr load_lattice(const std::string& spec) {
  if (spec.rfind("grid:", 0) == 0 || spec.rfind("chain:", 0) == 0)
    return io::lattice_from_shorthand(spec);
  return io::lattice_from_json(read_json_file(spec));
}

io::LoadedModel load_model(const std::string& path) {
  return io::model_from_json(read_json_file(path));
}

ModelStructure validated(const io::LoadedModel& loaded) {
  return ModelStructure(*loaded.lattice, loaded.w, loaded.af);
}

Arrow parse_arrow(const Lattice& lat, const std::string& text) {
  try {
    return io::arrow_from_json(lat, json::parse(text));
  } catch (const json::exception& e) {
    fail(Reason::ParseError, std::string("--arrow: ") + e.what());
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(Reason::IoError, "cannot write " + out_path);
  out << text;
}

EnumerationLimits limits_for(const CommonArgs& args) {
  EnumerationLimits limits = default_limits();
  limits.force = args.force;
  return limits;
}

int run_enumerate(const CommonArgs& args) {
  io::LatticePtr lat = load_lattice(args.lattice);
  std::ostringstream body;
  size_t count = 0;
  if (args.kind == "transfer-systems") {
    auto all = enumerate_transfer_systems(*lat, limits_for(args));
    count = all.size();
    if (args.format == "json")
      for (const TransferSystem& t : all) body << io::transfer_system_to_json(t).dump() << '\n';
  } else if (args.kind == "cotransfer-systems") {
    auto all = enumerate_cotransfer_systems(*lat, limits_for(args));
    count = all.size();
    if (args.format == "json")
      for (const CoTransferSystem& t : all) {
        json j;
        j["arrows"] = io::arrows_to_json(t.arrows());
        j["lattice"] = io::lattice_to_json(*lat);
        body << j.dump() << '\n';
      }
  } else if (args.kind == "model-structures") {
    auto all = enumerate_model_structures(*lat, limits_for(args));
    count = all.size();
    if (args.format == "json")
      for (const ModelStructure& ms : all) body << io::model_to_json(ms).dump() << '\n';
  } else {
    std::cerr << "unknown --kind " << args.kind << "\n";
    return 2;
  }
  if (args.format == "table")
    emit(args.out, std::to_string(count));
  else
    emit(args.out, body.str());
  return 0;
}

int run_validate(const CommonArgs& args) {
  io::LoadedModel loaded = load_model(args.model);
  ValidationReport rep = check_model_structure(*loaded.lattice, loaded.w, loaded.af);
  if (!rep.ok) {
    std::cout << reason_code(rep.reason) << "\n";
    return 1;
  }
  ValidationReport direct =
      check_model_structure_direct(*loaded.lattice, loaded.w, loaded.af);
  if (!direct.ok) {
    std::cout << reason_code(Reason::OracleDisagreement) << "\n";
    return 1;
  }
  std::cout << "OK\n";
  return 0;
}

int run_localize(const CommonArgs& args) {
  io::LoadedModel loaded = load_model(args.model);
  ModelStructure ms = validated(loaded);
  Arrow f = parse_arrow(*loaded.lattice, args.arrow);
  json j;
  if (args.side == "right") {
    GoldenArrowSet golden = golden_arrows(ms, f);
    ModelStructure result = right_localize(ms, f);
    j = io::model_to_json(result);
    j["golden_arrows"] = io::arrows_to_json(golden.arrows);
  } else if (args.side == "left") {
    CopperArrowSet copper = copper_arrows(ms, f);
    ModelStructure result = left_localize(ms, f);
    j = io::model_to_json(result);
    j["copper_arrows"] = io::arrows_to_json(copper.arrows);
  } else {
    std::cerr << "--side must be left or right\n";
    return 2;
  }
  emit(args.out, j.dump(2));
  return 0;
}

int run_golden(const CommonArgs& args) {
  io::LoadedModel loaded = load_model(args.model);
  ModelStructure ms = validated(loaded);
  GoldenArrowSet golden = golden_arrows(ms, parse_arrow(*loaded.lattice, args.arrow));
  json j;
  j["golden_arrows"] = io::arrows_to_json(golden.arrows);
  json witnesses = json::array();
  for (const auto& [arrow, sigma] : golden.witnesses) {
    json w;
    w["arrow"] = io::arrow_to_json(arrow);
    w["short_edge"] = io::arrow_to_json(sigma);
    witnesses.push_back(w);
  }
  j["witnesses"] = witnesses;
  emit(args.out, j.dump(2));
  return 0;
}

int run_copper(const CommonArgs& args) {
  io::LoadedModel loaded = load_model(args.model);
  ModelStructure ms = validated(loaded);
  CopperArrowSet copper = copper_arrows(ms, parse_arrow(*loaded.lattice, args.arrow));
  json j;
  j["copper_arrows"] = io::arrows_to_json(copper.arrows);
  emit(args.out, j.dump(2));
  return 0;
}

int run_tmin(const CommonArgs& args) {
  io::LoadedModel loaded = load_model(args.model);
  TransferSystem t = t_min(loaded.w);
  emit(args.out, io::transfer_system_to_json(t).dump(2));
  return 0;
}

int run_zigzag(const CommonArgs& args) {
  io::LoadedModel loaded = load_model(args.model);
  ModelStructure ms = validated(loaded);
  LocalizationSequence seq = zigzag_realize(ms);
  json j = io::sequence_to_json(seq);
  j["lattice"] = io::lattice_to_json(*loaded.lattice);
  emit(args.out, j.dump(2));
  return 0;
}

int run_replay(const CommonArgs& args) {
  json j = read_json_file(args.model);
  io::LatticePtr lat = io::lattice_from_json(j.at("lattice"));
  LocalizationSequence seq = io::sequence_from_json(*lat, j);
  ModelStructure result = replay(ModelStructure::trivial(*lat), seq.steps);
  emit(args.out, io::model_to_json(result).dump(2));
  return 0;
}

int run_reach(const CommonArgs& args) {
  io::LatticePtr lat = load_lattice(args.lattice);
  ReachabilityGraph graph = reachability_graph(*lat, limits_for(args));
  if (!args.dot.empty()) {
    emit(args.dot, io::reachability_to_dot(graph));
    return 0;
  }
  if (args.format == "dot")
    emit(args.out, io::reachability_to_dot(graph));
  else if (args.format == "table")
    emit(args.out, std::to_string(graph.nodes.size()) + " nodes, " +
                       std::to_string(graph.edges.size()) + " edges, " +
                       std::to_string(graph.unreachable.size()) + " unreachable");
  else
    emit(args.out, io::reachability_to_json(graph).dump(2));
  return 0;
}

int run_bijection(const CommonArgs& args) {
  if (!args.datum.empty()) {
    SaturatedGridDatum datum = io::datum_from_json(read_json_file(args.datum));
    Lattice big = Lattice::grid(datum.m, datum.n + 1);
    TransferSystem t = saturated_smaller_to_bigger(big, datum);
    emit(args.out, io::transfer_system_to_json(t).dump(2));
    return 0;
  }
  if (!args.model.empty()) {
    json j = read_json_file(args.model);
    io::LatticePtr lat = io::lattice_from_json(j.at("lattice"));
    TransferSystem t = transfer_closure(io::arrows_from_json(*lat, j.at("arrows")));
    SaturatedGridDatum datum = saturated_bigger_to_smaller(t);
    emit(args.out, io::datum_to_json(datum).dump(2));
    return 0;
  }
  std::cerr << "bijection needs --datum (smaller to bigger) or --model (bigger to smaller)\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"model structures, transfer systems and Bousfield localization on finite lattices"};
  app.require_subcommand(1);
  CommonArgs args;

  auto add_common = [&](CLI::App* cmd, bool lattice, bool model) {
    if (lattice) cmd->add_option("--lattice", args.lattice, "grid:MxN, chain:N or a JSON file");
    if (model) cmd->add_option("--model", args.model, "model structure JSON file");
    cmd->add_option("--format", args.format, "json | table | dot");
    cmd->add_option("--out", args.out, "output file (default stdout)");
    cmd->add_flag("--force", args.force, "override the enumeration size guard");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate structures on a lattice");
  add_common(enumerate, true, false);
  enumerate->add_option("--kind", args.kind,
                        "transfer-systems | cotransfer-systems | model-structures");
  enumerate->needs(enumerate->get_option("--lattice"));

  CLI::App* validate = app.add_subcommand("validate", "check a model structure file");
  add_common(validate, false, true);

  CLI::App* localize = app.add_subcommand("localize", "left/right Bousfield localization");
  add_common(localize, false, true);
  localize->add_option("--arrow", args.arrow, "short edge, e.g. [[1,0],[1,1]]")->required();
  localize->add_option("--side", args.side, "left | right");

  CLI::App* golden = app.add_subcommand("golden", "golden arrows of a right localization");
  add_common(golden, false, true);
  golden->add_option("--arrow", args.arrow, "short edge")->required();

  CLI::App* copper = app.add_subcommand("copper", "copper arrows of a left localization");
  add_common(copper, false, true);
  copper->add_option("--arrow", args.arrow, "short edge")->required();

  CLI::App* tmin = app.add_subcommand("tmin", "minimal transfer system of a W");
  add_common(tmin, false, true);

  CLI::App* zigzag = app.add_subcommand("zigzag", "localization sequence for a saturated-AF model");
  add_common(zigzag, false, true);

  CLI::App* replay_cmd = app.add_subcommand("replay", "replay a localization sequence");
  add_common(replay_cmd, false, true);

  CLI::App* reach = app.add_subcommand("reach", "localization reachability graph");
  add_common(reach, true, false);
  reach->add_option("--dot", args.dot, "write the DOT graph to this file");

  CLI::App* bijection = app.add_subcommand("bijection", "saturated grid construction");
  add_common(bijection, false, true);
  bijection->add_option("--datum", args.datum, "datum JSON file (smaller to bigger)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(enumerate)) return run_enumerate(args);
    if (app.got_subcommand(validate)) return run_validate(args);
    if (app.got_subcommand(localize)) return run_localize(args);
    if (app.got_subcommand(golden)) return run_golden(args);
    if (app.got_subcommand(copper)) return run_copper(args);
    if (app.got_subcommand(tmin)) return run_tmin(args);
    if (app.got_subcommand(zigzag)) return run_zigzag(args);
    if (app.got_subcommand(replay_cmd)) return run_replay(args);
    if (app.got_subcommand(reach)) return run_reach(args);
    if (app.got_subcommand(bijection)) return run_bijection(args);
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << reason_code(Reason::ParseError) << ": " << e.what() << "\n";
    return 1;
  }
  return 2;
}
