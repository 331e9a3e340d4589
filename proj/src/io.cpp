#include "acs/io.hpp"

#include <fstream>
#include <sstream>

#include "acs/error.hpp"

namespace acs::io {

namespace {

// Wraps nlohmann type errors into ParseError with a field name.
template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Json edge_json(const Edge& e) { return Json::array({e.first, e.second}); }

Edge edge_from(const Json& j) {
  const auto v = as<std::vector<Vertex>>(j, "edge");
  if (v.size() != 2) throw ParseError("an edge needs two endpoints");
  return make_edge(v[0], v[1]);
}

std::vector<Edge> edges_from(const Json& j) {
  if (!j.is_array()) throw ParseError("edges must be an array");
  std::vector<Edge> out;
  for (const Json& e : j) out.push_back(edge_from(e));
  return out;
}

std::vector<bool> boundary_from(const Json& j, int vertices) {
  std::vector<bool> b(static_cast<std::size_t>(vertices), false);
  if (!j.contains("boundary")) return b;
  for (Vertex v : get<std::vector<Vertex>>(j, "boundary")) {
    if (v < 0 || v >= vertices) throw ParseError("boundary vertex out of range");
    b[static_cast<std::size_t>(v)] = true;
  }
  return b;
}

// Runs a library constructor, reporting its precondition failures as parse errors.
template <class F>
auto build(const char* what, F&& f) {
  try {
    return f();
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const char* const kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4"};

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json system_to_json(const CongruenceSystem& e) {
  return Json{{"n", e.pieces()}, {"classes", e.classes()}};
}

CongruenceSystem system_from_json(const Json& j) {
  const int n = get<int>(j, "n");
  const auto classes = get<std::vector<std::vector<Mask>>>(j, "classes");
  return build("system", [&] { return CongruenceSystem::from_classes(n, classes); });
}

Json genset_to_json(const GeneratingSet& g) {
  Json pairs = Json::array();
  for (const RelationPair& p : g.pairs) pairs.push_back(Json::array({p.s.mask, p.t.mask}));
  return Json{{"n", g.n}, {"pairs", pairs}};
}

GeneratingSet genset_from_json(const Json& j) {
  GeneratingSet g;
  g.n = get<int>(j, "n");
  return build("generating set", [&] {
    check_piece_count(g.n);
    for (const auto& pair : get<std::vector<std::vector<Mask>>>(j, "pairs")) {
      if (pair.size() != 2) throw ParseError("a relation pair needs two masks");
      g.pairs.push_back({PieceSubset(pair[0], g.n), PieceSubset(pair[1], g.n)});
    }
    return g;
  });
}

Json witness_to_json(const ExpansionWitness& w) {
  Json chain = Json::array();
  for (std::size_t i = 0; i < w.length(); ++i) chain.push_back(Json{{"V", w.v[i]}, {"W", w.w[i]}});
  return chain;
}

Json graph_to_json(const FiniteGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
  Json boundary = Json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_boundary(v)) boundary.push_back(v);
  }
  return Json{{"vertices", g.vertex_count()}, {"edges", edges}, {"boundary", boundary}, {"arcs", Json::array()}};
}

Json graph_to_json(const ActionGraph& g) {
  Json j = graph_to_json(g.graph());
  for (const Arc& a : g.arcs()) {
    j["arcs"].push_back(Json{{"src", a.src}, {"dst", a.dst}, {"gen", a.gen}, {"sign", a.sign}});
  }
  return j;
}

FiniteGraph finite_graph_from_json(const Json& j) {
  const int vertices = get<int>(j, "vertices");
  if (vertices < 0) throw ParseError("negative vertex count");
  const auto edges = edges_from(j.at("edges"));
  const auto boundary = boundary_from(j, vertices);
  return build("graph", [&] { return FiniteGraph(vertices, edges, boundary); });
}

ActionGraph action_graph_from_json(const Json& j) {
  FiniteGraph g = finite_graph_from_json(j);
  std::vector<Arc> arcs;
  if (j.contains("arcs")) {
    for (const Json& a : j.at("arcs")) {
      arcs.push_back(Arc{get<Vertex>(a, "src"), get<Vertex>(a, "dst"), get<int>(a, "gen"),
                         a.contains("sign") ? get<int>(a, "sign") : 1});
    }
  }
  return build("action graph", [&] { return ActionGraph(std::move(g), std::move(arcs)); });
}

Json decomposition_to_json(const PathDecomposition& pd) {
  Json layers = Json::array();
  for (const PathLayer& l : pd.layers) layers.push_back(l.paths);
  return Json{{"minLength", pd.min_length}, {"waiver", pd.waiver}, {"layers", layers}};
}

PathDecomposition decomposition_from_json(const Json& j) {
  PathDecomposition pd;
  pd.min_length = get<int>(j, "minLength");
  pd.waiver = j.contains("waiver") ? get<bool>(j, "waiver") : true;
  for (const auto& layer : get<std::vector<std::vector<Path>>>(j, "layers")) pd.layers.push_back(PathLayer{layer});
  return pd;
}

Json net_to_json(const Net& net) {
  Json spacing = Json::array();
  for (std::int64_t d : net.spacing) {
    if (d == kUnboundedSpacing) {
      spacing.push_back(nullptr);
    } else {
      spacing.push_back(d);
    }
  }
  return Json{{"stages", net.stages}, {"spacing", spacing}};
}

Json realization_to_json(const Realization& r) {
  Json assignment = Json::object();
  for (std::size_t v = 0; v < r.assignment.size(); ++v) assignment[std::to_string(v)] = r.assignment[v];
  return Json{{"pieces", r.pieces}, {"assignment", assignment}};
}

Realization realization_from_json(const Json& j, int vertex_count) {
  Realization r;
  r.pieces = get<int>(j, "pieces");
  r.assignment.assign(static_cast<std::size_t>(vertex_count), -1);
  const Json& a = j.at("assignment");
  if (!a.is_object()) throw ParseError("assignment must be an object");
  for (const auto& [key, value] : a.items()) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || v < 0 || v >= vertex_count) throw ParseError("bad vertex id '" + key + "'");
    r.assignment[static_cast<std::size_t>(v)] = as<int>(value, "piece");
  }
  return r;
}

Json witness_report_to_json(const WitnessReport& w) {
  Json violations = Json::array();
  for (std::size_t g = 0; g < w.violations.size(); ++g) {
    for (const Arc& a : w.violations[g]) {
      violations.push_back(Json{{"src", a.src}, {"dst", a.dst}, {"gen", a.gen}, {"sign", a.sign}});
    }
  }
  return Json{{"clean", w.clean()},
              {"violationCount", w.violation_count()},
              {"pieceSizes", w.piece_sizes},
              {"violations", violations}};
}

Json seed_to_json(const Seed& s) {
  Json j = Json::object();
  for (const auto& [v, piece] : s) j[std::to_string(v)] = piece;
  return j;
}

Seed seed_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("seed must be an object");
  Seed s;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || v < 0) throw ParseError("bad vertex id '" + key + "'");
    s[v] = as<int>(value, "piece");
  }
  return s;
}

Json two_coloring_to_json(const TwoColoring& c) {
  Json j = Json::object();
  for (std::size_t v = 0; v < c.size(); ++v) j[std::to_string(v)] = c[v];
  return j;
}

Json matching_to_json(const Matching& m) {
  Json j = Json::array();
  for (const Edge& e : m) j.push_back(edge_json(e));
  return j;
}

EdgeLists edge_lists_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("edge lists must be an array");
  EdgeLists out;
  for (const Json& item : j) {
    if (!item.contains("edge")) throw ParseError("missing field 'edge'");
    out[edge_from(item.at("edge"))] = get<std::vector<int>>(item, "colors");
  }
  return out;
}

Json edge_lists_to_json(const EdgeLists& lists) {
  Json j = Json::array();
  for (const auto& [e, colors] : lists) j.push_back(Json{{"edge", edge_json(e)}, {"colors", colors}});
  return j;
}

Json edge_coloring_to_json(const EdgeColoring& c) {
  Json j = Json::array();
  for (const auto& [e, color] : c) j.push_back(Json{{"edge", edge_json(e)}, {"color", color}});
  return j;
}

Json unfriendly_report_to_json(const UnfriendlyReport& r) {
  return Json{{"clean", r.clean()}, {"strong", r.strong}, {"majority", r.majority}};
}

Json matching_report_to_json(const MatchingReport& r) {
  return Json{{"clean", r.clean()}, {"badEdges", matching_to_json(r.bad_edges)}, {"unmatchedInterior", r.unmatched_interior}};
}

Json edge_coloring_report_to_json(const EdgeColoringReport& r) {
  Json conflicts = Json::array();
  for (const auto& [a, b] : r.conflicts) conflicts.push_back(Json::array({edge_json(a), edge_json(b)}));
  return Json{{"clean", r.clean()},
              {"uncolored", matching_to_json(r.uncolored)},
              {"offList", matching_to_json(r.off_list)},
              {"conflicts", conflicts}};
}

Json cf_to_json(const CFExpansion& e) {
  return Json{{"a0", e.a0}, {"preperiod", e.preperiod}, {"period", e.period}, {"text", e.to_string()}};
}

Json demo_to_json(const Psl2Demo& d) {
  Json gens = Json::array();
  for (const Moebius& m : d.generators) gens.push_back(m.to_string());
  Json seeds = Json::array();
  for (const SeedReport& s : d.seeds) {
    Json item{{"seed", s.seed.to_string()},
              {"method", s.method},
              {"vertices", s.vertices},
              {"edges", s.edges},
              {"report", witness_report_to_json(s.report)}};
    if (s.end) {
      item["end"] = *s.end;
      item["ray"] = s.ray;
    }
    seeds.push_back(std::move(item));
  }
  return Json{{"generators", gens}, {"badWordBound", d.bad_word_bound}, {"clean", d.clean()}, {"seeds", seeds}};
}

std::string graph_to_dot(const FiniteGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v << (g.is_boundary(v) ? " [style=dashed];\n" : ";\n");
  }
  for (const Edge& e : g.edges()) os << "  " << e.first << " -- " << e.second << ";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_dot(const ActionGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (Vertex v = 0; v < g.graph().vertex_count(); ++v) {
    os << "  " << v << (g.graph().is_boundary(v) ? " [style=dashed];\n" : ";\n");
  }
  for (const Arc& a : g.arcs()) {
    os << "  " << a.src << " -> " << a.dst << " [label=\"g" << a.gen << (a.sign < 0 ? "'" : "") << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string decomposition_to_dot(const FiniteGraph& g, const PathDecomposition& pd) {
  std::ostringstream os;
  os << "graph D {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v << (g.is_boundary(v) ? " [style=dashed];\n" : ";\n");
  }
  const std::size_t colors = sizeof(kPalette) / sizeof(kPalette[0]);
  for (std::size_t j = 0; j < pd.layers.size(); ++j) {
    for (const Path& p : pd.layers[j].paths) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        os << "  " << p[i] << " -- " << p[i + 1] << " [color=" << kPalette[j % colors] << ", label=\"L" << j
           << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace acs::io
