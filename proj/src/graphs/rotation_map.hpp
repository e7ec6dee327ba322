#pragma once

#include "core/rational.hpp"

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace wb {

// Bipartite 4-valent combinatorial map: white/black vertices with four
// cyclically ordered slots each (counter-clockwise), edges pairing white
// slots to black slots. Slot ids are 4*v + i. A marked edge (ordered slot
// pair) plays the root. Vertices are marked dead rather than renumbered.
class RotationMap {
public:
    static constexpr int kOpen = -1;

    int add_vertex(int8_t color); // +1 white, -1 black
    void kill_vertex(int v);
    void revive_vertex(int v, int8_t color);

    int raw_size() const { return (int)vcolor_.size(); }
    int vertex_count() const;
    bool alive(int v) const { return v >= 0 && v < raw_size() && !dead_[v]; }
    int8_t vertex_color(int v) const { return vcolor_[v]; }

    static int vertex_of(int slot) { return slot / 4; }
    static int index_of(int slot) { return slot % 4; }
    int sigma(int slot) const { return 4 * vertex_of(slot) + (index_of(slot) + 1) % 4; }
    int opposite(int slot) const { return 4 * vertex_of(slot) + (index_of(slot) + 2) % 4; }
    int alpha(int slot) const { return alpha_[slot]; }

    void connect(int s1, int s2);
    void open_slot(int s) { alpha_[s] = kOpen; }

    std::vector<int> live_slots() const;
    bool closed() const;
    bool connected() const;
    bool bipartite_ok() const;

    unsigned face_count() const;
    std::vector<unsigned> face_lengths() const; // in edges
    // straight cycles: cross each 4-valent vertex; lengths in edges
    std::vector<unsigned> straight_cycle_lengths() const;

    std::string canonical_key(int anchor_slot) const; // rooted canonical code
    std::string canonical_key_closed() const;         // min over anchors

private:
    std::vector<int8_t> vcolor_;
    std::vector<uint8_t> dead_;
    std::vector<int> alpha_; // 4 per vertex
};

struct MapGraph {
    RotationMap m;
    int root_s1 = -1, root_s2 = -1; // ordered marked edge (slots)
    bool bare = false;
    bool is_root_edge(int s1, int s2) const {
        return (s1 == root_s1 && s2 == root_s2) || (s1 == root_s2 && s2 == root_s1);
    }
    std::string canonical_key() const { return bare ? "bare" : m.canonical_key(root_s1); }
};

struct MapGenusGrade {
    long g = 0, l = 0;
};

// (genus, grade) of a closed connected map, with the straight-cycle length
// identity sum (n-2) phi_2n = l - 2 - 2g verified.
MapGenusGrade map_genus_grade(const RotationMap& m);
Rational map_degree(const MapGraph& q); // g + l/2, 0 for the bare edge

// all pairings of n_pairs white/black vertex sets (4 slots each), streamed
// as closed maps; optional connectivity filter
void enumerate_map_pairings(int n_pairs, bool connected_only,
                            const std::function<void(const MapGraph&)>& fn);
void enumerate_rooted_maps(int n_pairs, bool connected_only,
                           const std::function<void(const MapGraph&)>& fn);

// ---- melons / dipoles / chains / schemes --------------------------------

struct MapMelonRecord {
    std::vector<int> piece_vertices;
    std::vector<int8_t> piece_vcolors;
    std::vector<std::array<int, 2>> piece_edges; // slot pairs
    int ext1, ext2;                              // inside slots
    int out1, out2;                              // outside partner slots; -2 if closed to bare
    int prev_root_s1, prev_root_s2;
    bool prev_bare = false;
};

struct MapMelonLog {
    std::vector<MapMelonRecord> records;
    unsigned count() const { return (unsigned)records.size(); }
};

MapMelonLog map_melon_reduce(MapGraph& q, std::mt19937* shuffle = nullptr);
bool map_has_melon(const MapGraph& q);
void map_undo_melons(MapGraph& q, const MapMelonLog& log);

enum class MapDipoleKind { O, U };

struct MapDipoleInst {
    int vw = -1, vb = -1;
    MapDipoleKind kind = MapDipoleKind::O;
    // sides: (white slot, black slot); through pairs sideA's white slot with
    // sideB's black slot and vice versa
    std::array<int, 2> sideA{-1, -1}, sideB{-1, -1};
};

enum class MapChainKind { OEven, OOdd, U, Broken };

struct MapChainInst {
    std::vector<MapDipoleInst> dipoles;
    MapChainKind kind = MapChainKind::Broken;
    unsigned length() const { return (unsigned)dipoles.size(); }
};

std::vector<MapChainInst> map_detect_chains(const MapGraph& q);

struct MapShrinkRecord {
    std::vector<int> piece_vertices;
    std::vector<int8_t> piece_vcolors;
    std::vector<std::array<int, 2>> piece_edges;
    std::array<int, 2> sideA, sideB;
    std::array<int, 2> left_out, right_out;
    int prev_root_s1, prev_root_s2;
};

struct MapSchemeChain {
    MapChainKind kind;
    unsigned recorded_length;
    unsigned reduced_length;
};

struct MapSchemeReport {
    MapGraph reduced;
    unsigned melons_removed = 0;
    std::vector<MapSchemeChain> chains;
    MapGenusGrade gl_before, gl_after;
    MapMelonLog melon_log;
    std::vector<MapShrinkRecord> shrink_log;
};

MapSchemeReport map_scheme_of(const MapGraph& q, std::mt19937* shuffle = nullptr);
MapGraph map_scheme_expand(const MapSchemeReport& rep);

// surgeries + samplers
void map_insert_melon(MapGraph& q, int slot); // splits the edge at `slot`
void map_insert_chain(MapGraph& q, int slot, const std::vector<MapDipoleKind>& word);
MapGraph sample_rooted_map(std::mt19937& rng, int max_core_pairs = 2, int max_melons = 4,
                           int max_chains = 2, int max_chain_len = 4);
MapGraph sample_melonic_map(std::mt19937& rng, int n_melons);

} // namespace wb
