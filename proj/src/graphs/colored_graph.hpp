#pragma once

#include "core/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace wb {

// Properly edge-colored (d+1)-regular multigraph: every live vertex has
// exactly one incident edge of each color 0..d. Color-0 adjacency may be
// open (-1) on at most two vertices, the legs of a 2-point graph. Vertices
// are never renumbered; removed vertices are marked dead so that surgery
// logs stay valid.
class ColoredGraph {
public:
    static constexpr int kOpen = -1;

    ColoredGraph() = default;
    ColoredGraph(int d) : d_(d) {}

    int rank() const { return d_; }
    int colors() const { return d_ + 1; }
    int raw_size() const { return (int)adj_.size(); }
    int vertex_count() const;
    bool alive(int v) const { return v >= 0 && v < raw_size() && !dead_[v]; }

    int add_vertex(int8_t color = 0);
    void kill_vertex(int v);
    void revive_vertex(int v, int8_t color);

    int partner(int v, int c) const { return adj_[v][c]; }
    void connect(int u, int v, int c);
    void open_slot(int v, int c) { adj_[v][c] = kOpen; }
    int8_t vertex_color(int v) const { return vcolor_[v]; }
    void set_vertex_color(int v, int8_t c) { vcolor_[v] = c; }

    std::vector<int> live_vertices() const;
    std::vector<int> open_slots(int c = 0) const;

    bool closed() const; // no open slots on live vertices
    bool connected() const;
    bool properly_colored(std::string* why = nullptr) const;
    bool bipartite_ok() const; // vertex-colored models: every edge joins +1 to -1

    // cycles alternating colors {i, j}; returns their lengths in edges
    std::vector<unsigned> bicolored_faces(int i, int j) const;
    unsigned face_count(int i, int j) const { return (unsigned)bicolored_faces(i, j).size(); }

    // Gurau degree of a closed connected graph, as a sum of jacket genera
    // obtained from Euler characteristics; a nonnegative half-integer.
    Rational gurau_degree() const;

    // Canonical key under color-preserving isomorphism (edge colors, vertex
    // colors, and an optional list of distinguished vertices, e.g. a root).
    std::string canonical_key(const std::vector<int>& pinned = {}) const;

private:
    int d_ = 3;
    std::vector<std::vector<int>> adj_;
    std::vector<int8_t> vcolor_;
    std::vector<uint8_t> dead_;
};

// rho_opt(b) = 3/2 - (1/2) sum_{c<c'} F_{cc'}(b) for a connected bubble with
// colors 1..3 (color-0 slots open).
Rational bubble_optimal_scaling(const ColoredGraph& bubble);

} // namespace wb
