#pragma once

#include "graphs/quartic.hpp"
#include "graphs/rotation_map.hpp"

#include <json.hpp>

namespace wb {

// External JSON formats:
//   graph: {d, vertices: [{id, color?}], edges: [{u, v, color}], root?}
//   map:   {half_edges, involution, rotation, colors, root?}
//   scheme reports: model, melon count, chain records, degree data

nlohmann::json colored_graph_json(const ColoredGraph& g);
ColoredGraph colored_graph_from_json(const nlohmann::json& j);

nlohmann::json quartic_graph_json(const QuarticGraph& q);
QuarticGraph quartic_graph_from_json(const nlohmann::json& j);

nlohmann::json map_graph_json(const MapGraph& m);
MapGraph map_graph_from_json(const nlohmann::json& j);

const char* chain_kind_name(ChainKind k);
const char* map_chain_kind_name(MapChainKind k);

nlohmann::json scheme_report_json(const SchemeReport& rep);
nlohmann::json map_scheme_report_json(const MapSchemeReport& rep);

} // namespace wb
