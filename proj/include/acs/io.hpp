#pragma once

// JSON interchange and DOT export. Every reader validates structure and
// throws ParseError on malformed input; file helpers throw IoError.

#include <string>

#include "json.hpp"

#include "acs/cfrac.hpp"
#include "acs/colorings.hpp"
#include "acs/congruence.hpp"
#include "acs/decomp.hpp"
#include "acs/graph.hpp"
#include "acs/psl2.hpp"
#include "acs/realize.hpp"
#include "acs/words.hpp"

namespace acs::io {

using Json = nlohmann::json;  // object keys sorted, so output is deterministic

Json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline.
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const Json& j);

/// {"n": int, "classes": [[mask, ...], ...]}
Json system_to_json(const CongruenceSystem& e);
CongruenceSystem system_from_json(const Json& j);

/// {"n": int, "pairs": [[S, T], ...]}
Json genset_to_json(const GeneratingSet& g);
GeneratingSet genset_from_json(const Json& j);

Json witness_to_json(const ExpansionWitness& w);

/// {"vertices": int, "edges": [[a, b], ...], "boundary": [v, ...],
///  "arcs": [{"src", "dst", "gen", "sign"}, ...]}
Json graph_to_json(const FiniteGraph& g);
Json graph_to_json(const ActionGraph& g);
FiniteGraph finite_graph_from_json(const Json& j);
/// Requires arcs covering every edge.
ActionGraph action_graph_from_json(const Json& j);

/// {"minLength": int, "waiver": bool, "layers": [[[v, ...], ...], ...]}
Json decomposition_to_json(const PathDecomposition& pd);
PathDecomposition decomposition_from_json(const Json& j);

Json net_to_json(const Net& net);

/// {"pieces": n, "assignment": {"vertexId": piece, ...}}
Json realization_to_json(const Realization& r);
/// Vertices missing from the assignment get -1.
Realization realization_from_json(const Json& j, int vertex_count);
Json witness_report_to_json(const WitnessReport& w);

/// {"vertexId": piece}
Json seed_to_json(const Seed& s);
Seed seed_from_json(const Json& j);

Json two_coloring_to_json(const TwoColoring& c);
Json matching_to_json(const Matching& m);
/// [{"edge": [a, b], "colors": [...]}, ...]
EdgeLists edge_lists_from_json(const Json& j);
Json edge_lists_to_json(const EdgeLists& lists);
/// [{"edge": [a, b], "color": c}, ...]
Json edge_coloring_to_json(const EdgeColoring& c);

Json unfriendly_report_to_json(const UnfriendlyReport& r);
Json matching_report_to_json(const MatchingReport& r);
Json edge_coloring_report_to_json(const EdgeColoringReport& r);

Json cf_to_json(const CFExpansion& e);
Json demo_to_json(const Psl2Demo& d);

/// Boundary vertices dashed; arcs labeled g<i> or g<i>'.
std::string graph_to_dot(const ActionGraph& g);
std::string graph_to_dot(const FiniteGraph& g);
/// Path edges colored by layer.
std::string decomposition_to_dot(const FiniteGraph& g, const PathDecomposition& pd);

}  // namespace acs::io
