#pragma once

#include "graphs/colored_graph.hpp"

#include <optional>
#include <random>

namespace wb {

// Rooted melonic (d+1)-colored graph: closed, with a marked color-0 edge.
struct RootedColored {
    ColoredGraph g;
    int root_u = -1, root_v = -1;
    std::string canonical_key() const { return g.canonical_key({root_u, root_v}); }
};

// Planar (d+1)-ary tree: every node has one ordered child slot per color;
// the slot matching a node's attachment color holds the next melon stacked
// on the same edge.
struct MelonTree {
    int d = 3;
    std::vector<std::vector<int>> child; // child[node][color], -1 when absent
    int root = -1;                       // -1 encodes the bare edge

    unsigned node_count() const { return (unsigned)child.size(); }
};

// The elementary melon on d+1 colors, rooted at its color-0 edge.
RootedColored elementary_melon(int d);

// Inserts an elementary melon pair on the edge (u, partner(u, c)) of color c.
void insert_colored_melon(RootedColored& r, int u, int c);

// The tree of a rooted melonic graph; throws if the graph is not melonic.
MelonTree melon_tree(const RootedColored& g);

// Inverse bijection.
RootedColored melon_tree_graph(const MelonTree& t, int d);

// All (d+1)-ary trees with n nodes.
std::vector<MelonTree> enumerate_melon_trees(int d, unsigned n);

// binom((d+1) n, n) / (d n + 1)
Integer fuss_catalan(int d, unsigned n);

RootedColored sample_colored_melonic(int d, std::mt19937& rng, unsigned n_melons);

} // namespace wb
