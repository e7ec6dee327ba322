#pragma once

#include "graphs/colored_graph.hpp"

#include <functional>
#include <optional>
#include <random>

namespace wb {

enum class QModel { ON3, UN2OD };
enum class BubbleKind { Tetra, Pillow1, Pillow2, Pillow3, Pillow3b, Pillow3nb };

const char* bubble_kind_name(BubbleKind k);
std::vector<BubbleKind> model_bubbles(QModel m);
int pillow_color(BubbleKind k); // 0 for tetra

// Rooted graph of a quartic model: a closed properly colored graph with a
// marked color-0 edge (the root), or the bare root edge once everything has
// been reduced away.
struct QuarticGraph {
    ColoredGraph g{3};
    QModel model = QModel::ON3;
    int root_u = -1, root_v = -1;
    bool bare = false;

    bool is_root_edge(int u, int v) const {
        return (u == root_u && v == root_v) || (u == root_v && v == root_u);
    }
    std::string canonical_key() const { return bare ? "bare" : g.canonical_key({root_u, root_v}); }
};

// Appends the four vertices of a bubble, colored for the model; internal
// edges use colors 1..3, color-0 slots stay open.
std::array<int, 4> add_bubble(QuarticGraph& q, BubbleKind kind);

struct BubbleInfo {
    std::vector<int> vertices;
    BubbleKind kind;
};
std::vector<BubbleInfo> classify_bubbles(const ColoredGraph& g, QModel model);

// Degree / genus-grade of closed connected graphs.
Rational on3_degree(const ColoredGraph& g);
struct GenusGrade {
    long h = 0, l = 0;
};
GenusGrade un2od_genus_grade(const ColoredGraph& g);

// Model-dispatching degree of a rooted graph (its closure): the ON3 Gurau
// degree, or h + l/2 for UN2OD, plus the raw pair.
Rational quartic_degree(const QuarticGraph& q);
GenusGrade quartic_genus_grade(const QuarticGraph& q);

// All admissible color-0 pairings of the given bubbles (white to black when
// bipartite), each exactly once; optional connectedness filter. The callback
// receives a closed unrooted graph.
void enumerate_pairings(QModel model, const std::vector<BubbleKind>& kinds, bool connected_only,
                        const std::function<void(const QuarticGraph&)>& fn);

// As above but streaming rooted graphs: every closed pairing with every
// ordered choice of marked color-0 edge.
void enumerate_rooted(QModel model, const std::vector<BubbleKind>& kinds, bool connected_only,
                      const std::function<void(const QuarticGraph&)>& fn);

// ---- melons, dipoles, chains, schemes ---------------------------------

struct MelonRecord {
    std::vector<int> piece_vertices;                  // ids at time of contraction
    std::vector<std::array<int, 3>> piece_edges;      // (u, v, color) including internal 0-edges
    std::vector<int8_t> piece_vcolors;
    int ext1, ext2;                                   // piece slots that faced outside
    int out1, out2;                                   // their outside partners (-2 if the pair closed to bare)
    int prev_root_u, prev_root_v;                     // root before the contraction
    bool prev_bare = false;
};

struct MelonLog {
    std::vector<MelonRecord> records;
    unsigned count() const { return (unsigned)records.size(); }
};

// Repeatedly replaces degree-zero 2-point pieces made of one or two bubbles
// by an edge until none remain; result independent of scan order. A rng can
// shuffle the scan order to probe confluence.
MelonLog melon_reduce(QuarticGraph& q, std::mt19937* shuffle = nullptr);
bool has_melon_piece(const QuarticGraph& q);
void undo_melons(QuarticGraph& q, const MelonLog& log);

struct DipoleInst {
    std::vector<int> bubbles;            // indices into classify_bubbles output
    std::vector<int> vertices;           // 4 or 8 vertex ids
    int color = 0;                       // 1..3
    bool pillow = false;                 // type II
    bool vtype = false;                  // UN2OD: bipartite pillow of color 3 (the V-dipole)
    std::array<int, 2> sideA{-1, -1};    // external slots, through-paired with sideB
    std::array<int, 2> sideB{-1, -1};
};

enum class ChainKind { Color1, Color2, Color3, Broken };

struct ChainInst {
    std::vector<DipoleInst> dipoles; // in path order
    ChainKind kind = ChainKind::Broken;
    bool u_even = true; // UN2OD color-3 chains: parity class of U-type dipoles
    unsigned length() const { return (unsigned)dipoles.size(); }
};

// Maximal chains of a melon-free rooted graph; throws if a melonic piece is
// still present.
std::vector<ChainInst> detect_chains(const QuarticGraph& q);

struct ChainShrinkRecord {
    // a deleted dipole, with enough data to re-insert it
    std::vector<int> piece_vertices;
    std::vector<std::array<int, 3>> piece_edges;
    std::vector<int8_t> piece_vcolors;
    std::array<int, 2> sideA, sideB; // slots of the deleted dipole, through-paired
    std::array<int, 2> left_out;     // partners of sideA at deletion time
    std::array<int, 2> right_out;    // partners of sideB, after any bipartite swap
    int prev_root_u, prev_root_v;    // root before the deletion
};

struct SchemeChain {
    ChainKind kind;
    bool u_even;
    unsigned recorded_length;
    unsigned reduced_length;
};

struct SchemeReport {
    QuarticGraph reduced;
    unsigned melons_removed = 0;
    std::vector<SchemeChain> chains;
    Rational degree_before, degree_after;
    GenusGrade hl_before, hl_after; // UN2OD only
    MelonLog melon_log;
    std::vector<ChainShrinkRecord> shrink_log;
};

SchemeReport scheme_of(const QuarticGraph& q, std::mt19937* shuffle = nullptr);

// Re-expands a scheme (chain shrink log, then melon log) and returns the
// reconstructed rooted graph; isomorphic to the original by construction of
// the logs, which the tests assert through canonical keys.
QuarticGraph scheme_expand(const SchemeReport& rep);

// ---- surgeries and samplers --------------------------------------------

// Splits the color-0 edge (u,v) and inserts an elementary melon of the given
// kind (Tetra = type I, pillows = type II). Returns the record of what was
// inserted. Degree is untouched.
void insert_melon(QuarticGraph& q, int u, int v, BubbleKind kind);

// Inserts a chain with the given dipole word on the color-0 edge (u,v).
// Each letter is (color, pillow?, vtype?) encoded as a BubbleKind for pillow
// dipoles or Tetra with a color for type-I dipoles.
struct DipoleLetter {
    int color;     // 1..3
    bool pillow;   // type II if true
    bool vtype;    // UN2OD bipartite pillow-3
};
void insert_chain(QuarticGraph& q, int u, int v, const std::vector<DipoleLetter>& word);

// Random rooted graph: a small random closed core, a random root edge,
// random melon and chain insertions.
QuarticGraph sample_rooted_graph(QModel model, std::mt19937& rng, int max_core_bubbles = 2,
                                 int max_melons = 4, int max_chains = 2, int max_chain_len = 4);

// Random rooted melonic 2-point graph with n elementary melons.
QuarticGraph sample_melonic(QModel model, std::mt19937& rng, int n_melons);

} // namespace wb
