// Command-line front end. Exit codes: 0 success, 1 a verifier rejected the
// result, 2 usage or invalid input, 3 file I/O failure.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "acs/cfrac.hpp"
#include "acs/colorings.hpp"
#include "acs/congruence.hpp"
#include "acs/decomp.hpp"
#include "acs/error.hpp"
#include "acs/graph.hpp"
#include "acs/io.hpp"
#include "acs/psl2.hpp"
#include "acs/realize.hpp"
#include "acs/words.hpp"

using namespace acs;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct Options {
  std::string output;
  std::string dot;
  std::string preset;
  int n = 0;
  std::string system_file;
  std::string genset_file;
  std::string graph_file;
  std::string decomp_file;
  std::string seed_file;
  std::string ends_file;
  std::string realization_file;
  std::string lists_file;
  std::string x;
  std::string y;
  std::string seeds;
  int radius = 0;
  int steps = 0;
  int max_len = 12;
  std::size_t limit = 1000;
  int vertices = 0;
  std::uint64_t rng_seed = 1;
  bool strict5 = false;
  bool normalize = false;
  bool single_orbit = false;
};

std::size_t vertex_cap() {
  if (const char* env = std::getenv("ACS_VERTEX_CAP")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ParseError("ACS_VERTEX_CAP must be a positive integer");
  }
  return kDefaultVertexCap;
}

void emit(const Options& o, const Json& j) {
  if (o.output.empty()) {
    std::cout << io::dump(j);
  } else {
    io::write_text_file(o.output, io::dump(j));
  }
}

void emit_dot(const Options& o, const std::string& dot) {
  if (!o.dot.empty()) io::write_text_file(o.dot, dot);
}

int preset_n(const Options& o, Preset p) {
  if (o.n > 0) return o.n;
  return p == Preset::kParadoxical ? 4 : 3;
}

CongruenceSystem load_system(const Options& o) {
  if (!o.system_file.empty()) return io::system_from_json(io::read_json_file(o.system_file));
  if (o.preset.empty()) throw ParseError("give --system FILE or --preset NAME");
  const Preset p = parse_preset(o.preset);
  return preset(p, preset_n(o, p)).system;
}

GeneratingSet load_genset(const Options& o) {
  if (!o.genset_file.empty()) return io::genset_from_json(io::read_json_file(o.genset_file));
  if (o.preset.empty()) throw ParseError("give --genset FILE or --preset NAME");
  const Preset p = parse_preset(o.preset);
  return preset(p, preset_n(o, p)).generators;
}

std::vector<QuadraticSurd> parse_seeds(const std::string& text) {
  std::vector<QuadraticSurd> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(QuadraticSurd::parse(item));
  if (out.empty()) throw ParseError("no seeds given");
  return out;
}

int run_closure(const Options& o) {
  const GeneratingSet g = load_genset(o);
  emit(o, io::system_to_json(closure(g.n, g.pairs)));
  return kOk;
}

int run_check(const Options& o) {
  const CongruenceSystem e = load_system(o);
  const ExpansionResult ex = is_non_expanding(e);
  Json j{{"n", e.pieces()}, {"nonComplementing", is_non_complementing(e)}, {"nonExpanding", ex.non_expanding}};
  if (ex.witness) {
    j["witness"] = io::witness_to_json(*ex.witness);
    j["witnessValid"] = validate_witness(e, *ex.witness);
  }
  emit(o, j);
  return kOk;
}

int run_genset(const Options& o) {
  const CongruenceSystem e = load_system(o);
  GeneratingSet seed;
  seed.n = e.pieces();
  if (!o.genset_file.empty()) {
    seed = io::genset_from_json(io::read_json_file(o.genset_file));
  } else if (!o.preset.empty()) {
    seed = load_genset(o);
  }
  if (seed.n != e.pieces()) throw PreconditionError("generating set and system differ in piece count");
  std::vector<RelationPair> all = complementary_pairs(e);
  all.insert(all.end(), seed.pairs.begin(), seed.pairs.end());
  if (closure(e.pieces(), all) != e) {
    Json j = io::genset_to_json(seed);
    j["generates"] = false;
    emit(o, j);
    return kVerifyFailed;
  }
  const GeneratingSet g = minimize_good_generating(e, seed);
  const bool generates = closure(g.n, g.pairs) == e;
  Json j = io::genset_to_json(g);
  j["generates"] = generates;
  emit(o, j);
  return generates ? kOk : kVerifyFailed;
}

int run_badwords(const Options& o) {
  const Presentation p(load_genset(o));
  Json records = Json::array();
  std::size_t total = 0;
  auto record = [&](const Word& w) {
    ++total;
    if (records.size() >= o.limit) return;
    const auto bad = is_bad(w, p);
    if (!bad) return;
    records.push_back(Json{{"word", word_to_string(w)}, {"k", bad->k}, {"m", bad->m}});
  };
  Json j;
  int status = kOk;
  try {
    const BadWordBound b = bad_word_bound(p, o.max_len, record);
    j["bound"] = b.r;
    j["badCounts"] = b.bad_counts;
  } catch (const NoBoundError& e) {
    j["bound"] = nullptr;
    j["error"] = e.what();
    j["longestBadWord"] = e.longest_bad_word();
    status = kVerifyFailed;
  }
  j["wordOrder"] = "innermost-first";
  j["badWordsFound"] = total;
  j["records"] = records;
  emit(o, j);
  return status;
}

int run_graph_ball(const Options& o) {
  const Presentation p(load_genset(o));
  const ActionGraph g = cayley_ball(p, o.radius, vertex_cap());
  emit(o, io::graph_to_json(g));
  emit_dot(o, io::graph_to_dot(g));
  return kOk;
}

int run_graph_tree(const Options& o) {
  const FiniteGraph g = random_tree(o.vertices, o.rng_seed);
  Json j = io::graph_to_json(g);
  j["meta"] = Json{{"generator", "pruefer"}, {"seed", o.rng_seed}};
  emit(o, j);
  emit_dot(o, io::graph_to_dot(g));
  return kOk;
}

int run_graph_net(const Options& o) {
  const FiniteGraph g = io::finite_graph_from_json(io::read_json_file(o.graph_file));
  const Net net = build_net(g, o.n);
  const std::string problem = check_net(g, net);
  Json j = io::net_to_json(net);
  j["valid"] = problem.empty();
  if (!problem.empty()) j["violation"] = problem;
  emit(o, j);
  return problem.empty() ? kOk : kVerifyFailed;
}

int run_graph_export(const Options& o) {
  const Json in = io::read_json_file(o.graph_file);
  const bool has_arcs = in.contains("arcs") && !in.at("arcs").empty();
  const std::string dot =
      has_arcs ? io::graph_to_dot(io::action_graph_from_json(in)) : io::graph_to_dot(io::finite_graph_from_json(in));
  if (o.output.empty()) {
    std::cout << dot;
  } else {
    io::write_text_file(o.output, dot);
  }
  return kOk;
}

int run_decomp(const Options& o) {
  const FiniteGraph g = io::finite_graph_from_json(io::read_json_file(o.graph_file));
  PathDecomposition pd;
  if (!o.ends_file.empty()) {
    const auto ends = io::read_json_file(o.ends_file).get<std::vector<std::vector<Vertex>>>();
    pd = end_selection_decomposition(g, ends, o.n);
  } else {
    pd = path_decomposition(g, o.n);
  }
  if (o.normalize) pd = normalize_lengths(pd, o.n);
  const DecompReport report = verify_path_decomposition(g, pd);
  Json j = io::decomposition_to_json(pd);
  j["verified"] = report.ok;
  if (!report.ok) j["violation"] = report.violation;
  emit(o, j);
  emit_dot(o, io::decomposition_to_dot(g, pd));
  return report.ok ? kOk : kVerifyFailed;
}

int run_realize(const Options& o) {
  const ActionGraph g = io::action_graph_from_json(io::read_json_file(o.graph_file));
  const Presentation p(load_genset(o));
  Realization r;
  if (o.single_orbit) {
    r = realize_single_orbit(g, p);
  } else {
    if (o.decomp_file.empty()) throw ParseError("realize needs --decomp FILE or --single-orbit");
    const PathDecomposition pd = io::decomposition_from_json(io::read_json_file(o.decomp_file));
    const Seed seed = o.seed_file.empty() ? Seed{} : io::seed_from_json(io::read_json_file(o.seed_file));
    r = realize_along_decomposition(g, p, pd, seed);
  }
  const WitnessReport report = verify_realization(g, p, r);
  Json j = io::realization_to_json(r);
  j["report"] = io::witness_report_to_json(report);
  emit(o, j);
  return report.clean() ? kOk : kVerifyFailed;
}

int run_verify_realization(const Options& o) {
  const ActionGraph g = io::action_graph_from_json(io::read_json_file(o.graph_file));
  const Presentation p(load_genset(o));
  const Realization r =
      io::realization_from_json(io::read_json_file(o.realization_file), g.graph().vertex_count());
  const WitnessReport report = verify_realization(g, p, r);
  emit(o, io::witness_report_to_json(report));
  return report.clean() ? kOk : kVerifyFailed;
}

int run_color(const Options& o, const std::string& kind) {
  const FiniteGraph g = io::finite_graph_from_json(io::read_json_file(o.graph_file));
  const PathDecomposition pd = io::decomposition_from_json(io::read_json_file(o.decomp_file));
  Json j;
  bool clean = false;
  if (kind == "unfriendly") {
    const TwoColoring c = strongly_unfriendly(g, pd, o.strict5);
    const UnfriendlyReport r = verify_strongly_unfriendly(g, c);
    j = Json{{"coloring", io::two_coloring_to_json(c)}, {"report", io::unfriendly_report_to_json(r)}};
    clean = r.clean();
  } else if (kind == "matching") {
    const Matching m = perfect_matching(g, pd);
    const MatchingReport r = verify_matching(g, m);
    j = Json{{"matching", io::matching_to_json(m)}, {"report", io::matching_report_to_json(r)}};
    clean = r.clean();
  } else {
    const EdgeLists lists =
        o.lists_file.empty() ? uniform_lists(g) : io::edge_lists_from_json(io::read_json_file(o.lists_file));
    const EdgeColoring c = edge_list_coloring(g, pd, lists);
    const EdgeColoringReport r = verify_edge_coloring(g, lists, c);
    j = Json{{"coloring", io::edge_coloring_to_json(c)}, {"report", io::edge_coloring_report_to_json(r)}};
    clean = r.clean();
  }
  emit(o, j);
  return clean ? kOk : kVerifyFailed;
}

int run_cfrac(const Options& o, const std::string& kind) {
  const QuadraticSurd x = QuadraticSurd::parse(o.x);
  Json j{{"x", x.to_string()}};
  if (kind == "expand") {
    j["expansion"] = io::cf_to_json(cf_expand(x));
  } else if (kind == "step") {
    const QuadraticSurd fx = f_step(x);
    j["f"] = fx.to_string();
    j["expansion"] = io::cf_to_json(cf_expand(fx));
  } else if (kind == "reciprocal") {
    const CFExpansion r = cf_reciprocal(cf_expand(x));
    j["expansion"] = io::cf_to_json(r);
    j["value"] = cf_value(r).to_string();
  } else if (kind == "tail-eq") {
    const QuadraticSurd y = QuadraticSurd::parse(o.y);
    j["y"] = y.to_string();
    j["tailEquivalent"] = tail_equivalent(cf_expand(x), cf_expand(y));
  } else {
    Json ray = Json::array();
    for (const QuadraticSurd& z : end_selection_ray(x, o.steps)) ray.push_back(z.to_string());
    j["ray"] = ray;
  }
  emit(o, j);
  return kOk;
}

int run_psl2_demo(const Options& o) {
  const CongruenceSystem e = load_system(o);
  const GeneratingSet g = load_genset(o);
  const Psl2Demo d = psl2_demo(e, g, parse_seeds(o.seeds), o.radius, o.max_len, vertex_cap());
  emit(o, io::demo_to_json(d));
  return d.clean() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congruence systems, path decompositions and their realizations"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto out_opt = [&](CLI::App* c) { c->add_option("-o,--output", o.output, "Output file (default stdout)"); };
  auto system_opts = [&](CLI::App* c) {
    c->add_option("--preset", o.preset, "divisibility or paradoxical");
    c->add_option("--n", o.n, "Number of pieces");
    c->add_option("--system", o.system_file, "System JSON");
  };
  auto genset_opt = [&](CLI::App* c) { c->add_option("--genset", o.genset_file, "Generating set JSON"); };

  auto* closure_cmd = app.add_subcommand("closure", "Close a generating set into a system");
  system_opts(closure_cmd);
  genset_opt(closure_cmd);
  out_opt(closure_cmd);
  closure_cmd->callback([&] { action = [&] { return run_closure(o); }; });

  auto* check_cmd = app.add_subcommand("check", "Report complementing and expanding properties");
  system_opts(check_cmd);
  out_opt(check_cmd);
  check_cmd->callback([&] { action = [&] { return run_check(o); }; });

  auto* genset_cmd = app.add_subcommand("genset", "Minimal good generating set");
  system_opts(genset_cmd);
  genset_opt(genset_cmd);
  out_opt(genset_cmd);
  genset_cmd->callback([&] { action = [&] { return run_genset(o); }; });

  auto* bad_cmd = app.add_subcommand("badwords", "Bad-word search and bound");
  system_opts(bad_cmd);
  genset_opt(bad_cmd);
  bad_cmd->add_option("--max-len", o.max_len, "Length cap")->check(CLI::PositiveNumber);
  bad_cmd->add_option("--limit", o.limit, "Maximum records emitted");
  out_opt(bad_cmd);
  bad_cmd->callback([&] { action = [&] { return run_badwords(o); }; });

  auto* graph_cmd = app.add_subcommand("graph", "Build, inspect and export graphs");
  graph_cmd->require_subcommand(1);
  auto* ball_cmd = graph_cmd->add_subcommand("ball", "Cayley ball of the free product");
  system_opts(ball_cmd);
  genset_opt(ball_cmd);
  ball_cmd->add_option("--radius", o.radius, "Ball radius")->required()->check(CLI::NonNegativeNumber);
  ball_cmd->add_option("--dot", o.dot, "Also write DOT");
  out_opt(ball_cmd);
  ball_cmd->callback([&] { action = [&] { return run_graph_ball(o); }; });
  auto* tree_cmd = graph_cmd->add_subcommand("tree", "Random tree with boundary leaves");
  tree_cmd->add_option("--vertices", o.vertices, "Tree size")->required();
  tree_cmd->add_option("--seed", o.rng_seed, "RNG seed (recorded in the output)");
  tree_cmd->add_option("--dot", o.dot, "Also write DOT");
  out_opt(tree_cmd);
  tree_cmd->callback([&] { action = [&] { return run_graph_tree(o); }; });
  auto* net_cmd = graph_cmd->add_subcommand("net", "Staged net of a graph");
  net_cmd->add_option("--graph", o.graph_file, "Graph JSON")->required();
  net_cmd->add_option("--n", o.n, "Path length parameter")->required()->check(CLI::PositiveNumber);
  out_opt(net_cmd);
  net_cmd->callback([&] { action = [&] { return run_graph_net(o); }; });
  auto* export_cmd = graph_cmd->add_subcommand("export", "Graph JSON to DOT");
  export_cmd->add_option("--graph", o.graph_file, "Graph JSON")->required();
  out_opt(export_cmd);
  export_cmd->callback([&] { action = [&] { return run_graph_export(o); }; });

  auto* decomp_cmd = app.add_subcommand("decomp", "Path decomposition");
  decomp_cmd->add_option("--graph", o.graph_file, "Graph JSON")->required();
  decomp_cmd->add_option("--n", o.n, "Path length parameter")->required()->check(CLI::PositiveNumber);
  decomp_cmd->add_option("--ends", o.ends_file, "JSON list of designated ends per component");
  decomp_cmd->add_flag("--normalize", o.normalize, "Split paths to length <= 2n");
  decomp_cmd->add_option("--dot", o.dot, "Also write DOT");
  out_opt(decomp_cmd);
  decomp_cmd->callback([&] { action = [&] { return run_decomp(o); }; });

  auto* realize_cmd = app.add_subcommand("realize", "Realize a generating set on an action graph");
  realize_cmd->add_option("--graph", o.graph_file, "Graph JSON")->required();
  system_opts(realize_cmd);
  genset_opt(realize_cmd);
  realize_cmd->add_option("--decomp", o.decomp_file, "Decomposition JSON");
  realize_cmd->add_option("--seed", o.seed_file, "JSON {vertexId: piece} for layer-0 endpoints");
  realize_cmd->add_flag("--single-orbit", o.single_orbit, "Cycle-aware labeling without a decomposition");
  out_opt(realize_cmd);
  realize_cmd->callback([&] { action = [&] { return run_realize(o); }; });

  auto* verify_cmd = app.add_subcommand("verify-realization", "Check a realization");
  verify_cmd->add_option("--graph", o.graph_file, "Graph JSON")->required();
  system_opts(verify_cmd);
  genset_opt(verify_cmd);
  verify_cmd->add_option("--realization", o.realization_file, "Realization JSON")->required();
  out_opt(verify_cmd);
  verify_cmd->callback([&] { action = [&] { return run_verify_realization(o); }; });

  auto* color_cmd = app.add_subcommand("color", "Colorings along a decomposition");
  color_cmd->require_subcommand(1);
  for (const char* kind : {"unfriendly", "matching", "edgelist"}) {
    auto* c = color_cmd->add_subcommand(kind);
    c->add_option("--graph", o.graph_file, "Graph JSON")->required();
    c->add_option("--decomp", o.decomp_file, "Decomposition JSON")->required();
    if (std::string(kind) == "unfriendly") c->add_flag("--strict5", o.strict5, "Require path length >= 5");
    if (std::string(kind) == "edgelist") c->add_option("--lists", o.lists_file, "Edge lists JSON");
    out_opt(c);
    const std::string k = kind;
    c->callback([&, k] { action = [&, k] { return run_color(o, k); }; });
  }

  auto* cf_cmd = app.add_subcommand("cfrac", "Continued fractions of quadratic surds");
  cf_cmd->require_subcommand(1);
  for (const char* kind : {"expand", "step", "reciprocal", "tail-eq", "orbit"}) {
    auto* c = cf_cmd->add_subcommand(kind);
    c->add_option("--x", o.x, "Surd, e.g. (1+sqrt(5))/2")->required();
    if (std::string(kind) == "tail-eq") c->add_option("--y", o.y, "Second surd")->required();
    if (std::string(kind) == "orbit") c->add_option("--steps", o.steps, "Number of f steps")->required()->check(CLI::NonNegativeNumber);
    out_opt(c);
    const std::string k = kind;
    c->callback([&, k] { action = [&, k] { return run_cfrac(o, k); }; });
  }

  auto* demo_cmd = app.add_subcommand("psl2-demo", "Realize a system on orbits of quadratic surds");
  system_opts(demo_cmd);
  genset_opt(demo_cmd);
  demo_cmd->add_option("--seeds", o.seeds, "Comma-separated surds")->required();
  demo_cmd->add_option("--radius", o.radius, "Ball radius")->required()->check(CLI::PositiveNumber);
  demo_cmd->add_option("--max-len", o.max_len, "Bad-word length cap")->check(CLI::PositiveNumber);
  out_opt(demo_cmd);
  demo_cmd->callback([&] { action = [&] { return run_psl2_demo(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const IoError& e) {
    std::cerr << "acs: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "acs: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "acs: malformed input: " << e.what() << "\n";
    return kUsage;
  }
}
