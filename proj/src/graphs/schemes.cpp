#include "graphs/schemes.hpp"

namespace wb {

using nlohmann::json;

json colored_graph_json(const ColoredGraph& g) {
    json vertices = json::array(), edges = json::array();
    for (int v : g.live_vertices()) {
        json jv;
        jv["id"] = v;
        if (g.vertex_color(v)) jv["color"] = g.vertex_color(v) == 1 ? "white" : "black";
        vertices.push_back(jv);
        for (int c = 0; c <= g.rank(); ++c) {
            int u = g.partner(v, c);
            if (u > v) edges.push_back({{"u", v}, {"v", u}, {"color", c}});
        }
    }
    return {{"d", g.rank()}, {"vertices", vertices}, {"edges", edges}};
}

ColoredGraph colored_graph_from_json(const json& j) {
    ColoredGraph g(j.at("d").get<int>());
    std::map<int, int> remap;
    for (auto& jv : j.at("vertices")) {
        int8_t col = 0;
        if (jv.contains("color")) col = jv["color"] == "white" ? 1 : -1;
        remap[jv.at("id").get<int>()] = g.add_vertex(col);
    }
    for (auto& je : j.at("edges"))
        g.connect(remap.at(je.at("u").get<int>()), remap.at(je.at("v").get<int>()),
                  je.at("color").get<int>());
    return g;
}

json quartic_graph_json(const QuarticGraph& q) {
    json j = colored_graph_json(q.g);
    j["model"] = q.model == QModel::ON3 ? "on3" : "un2od";
    if (q.bare)
        j["bare"] = true;
    else
        j["root"] = {q.root_u, q.root_v};
    return j;
}

QuarticGraph quartic_graph_from_json(const json& j) {
    QuarticGraph q;
    q.model = j.at("model") == "on3" ? QModel::ON3 : QModel::UN2OD;
    q.g = colored_graph_from_json(j);
    if (j.value("bare", false)) {
        q.bare = true;
    } else {
        q.root_u = j.at("root")[0].get<int>();
        q.root_v = j.at("root")[1].get<int>();
    }
    return q;
}

json map_graph_json(const MapGraph& q) {
    json colors = json::array(), invol = json::array();
    int n = q.m.raw_size();
    for (int v = 0; v < n; ++v) {
        if (!q.m.alive(v)) continue;
        colors.push_back({{"vertex", v}, {"color", q.m.vertex_color(v) == 1 ? "white" : "black"}});
        for (int i = 0; i < 4; ++i) {
            int s = 4 * v + i, t = q.m.alpha(s);
            if (t > s) invol.push_back({s, t});
        }
    }
    json j = {{"half_edges", 4 * q.m.vertex_count()},
              {"involution", invol},
              {"rotation", "slots 4v..4v+3 counter-clockwise"},
              {"colors", colors}};
    if (q.bare)
        j["bare"] = true;
    else
        j["root"] = {q.root_s1, q.root_s2};
    return j;
}

MapGraph map_graph_from_json(const json& j) {
    MapGraph q;
    std::map<int, int> remap; // old vertex -> new
    for (auto& jc : j.at("colors")) {
        int v = jc.at("vertex").get<int>();
        remap[v] = q.m.add_vertex(jc.at("color") == "white" ? 1 : -1);
    }
    auto rslot = [&](int s) { return 4 * remap.at(s / 4) + s % 4; };
    for (auto& je : j.at("involution")) q.m.connect(rslot(je[0].get<int>()), rslot(je[1].get<int>()));
    if (j.value("bare", false)) {
        q.bare = true;
    } else {
        q.root_s1 = rslot(j.at("root")[0].get<int>());
        q.root_s2 = rslot(j.at("root")[1].get<int>());
    }
    return q;
}

const char* chain_kind_name(ChainKind k) {
    switch (k) {
        case ChainKind::Color1: return "color-1";
        case ChainKind::Color2: return "color-2";
        case ChainKind::Color3: return "color-3";
        case ChainKind::Broken: return "broken";
    }
    return "?";
}

const char* map_chain_kind_name(MapChainKind k) {
    switch (k) {
        case MapChainKind::OEven: return "O-even";
        case MapChainKind::OOdd: return "O-odd";
        case MapChainKind::U: return "U";
        case MapChainKind::Broken: return "broken";
    }
    return "?";
}

json scheme_report_json(const SchemeReport& rep) {
    json chains = json::array();
    for (auto& c : rep.chains) {
        json jc = {{"kind", chain_kind_name(c.kind)},
                   {"recorded_length", c.recorded_length},
                   {"reduced_length", c.reduced_length}};
        if (rep.reduced.model == QModel::UN2OD && c.kind == ChainKind::Color3)
            jc["boundary_class"] = c.u_even ? "wbbw" : "wwbb";
        chains.push_back(jc);
    }
    json j = {{"model", rep.reduced.model == QModel::ON3 ? "on3" : "un2od"},
              {"melons_removed", rep.melons_removed},
              {"chains", chains},
              {"degree_before", rep.degree_before.get_str()},
              {"degree_after", rep.degree_after.get_str()},
              {"reduced", quartic_graph_json(rep.reduced)}};
    if (rep.reduced.model == QModel::UN2OD) {
        j["genus_before"] = rep.hl_before.h;
        j["grade_before"] = rep.hl_before.l;
        j["genus_after"] = rep.hl_after.h;
        j["grade_after"] = rep.hl_after.l;
    }
    return j;
}

json map_scheme_report_json(const MapSchemeReport& rep) {
    json chains = json::array();
    for (auto& c : rep.chains)
        chains.push_back({{"kind", map_chain_kind_name(c.kind)},
                          {"recorded_length", c.recorded_length},
                          {"reduced_length", c.reduced_length}});
    return {{"model", "unxod"},
            {"melons_removed", rep.melons_removed},
            {"chains", chains},
            {"genus_before", rep.gl_before.g},
            {"grade_before", rep.gl_before.l},
            {"genus_after", rep.gl_after.g},
            {"grade_after", rep.gl_after.l},
            {"reduced", map_graph_json(rep.reduced)}};
}

} // namespace wb
