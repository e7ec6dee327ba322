#include "graphs/melon_tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wb {

RootedColored elementary_melon(int d) {
    RootedColored r;
    r.g = ColoredGraph(d);
    int a = r.g.add_vertex(), b = r.g.add_vertex();
    for (int c = 0; c <= d; ++c) r.g.connect(a, b, c);
    r.root_u = a;
    r.root_v = b;
    return r;
}

void insert_colored_melon(RootedColored& r, int u, int c) {
    int v = r.g.partner(u, c);
    if (v < 0) throw std::invalid_argument("insert_colored_melon: open slot");
    bool was_root = c == 0 && ((u == r.root_u && v == r.root_v) || (u == r.root_v && v == r.root_u));
    int leg1 = r.root_u;
    int d = r.g.rank();
    int x = r.g.add_vertex(), y = r.g.add_vertex();
    for (int cc = 0; cc <= d; ++cc)
        if (cc != c) r.g.connect(x, y, cc);
    r.g.connect(u, x, c);
    r.g.connect(v, y, c);
    if (was_root) {
        r.root_u = leg1;
        r.root_v = r.g.partner(leg1, 0);
    }
}

namespace {

struct EdgeKey {
    int u, v, c;
    bool operator<(const EdgeKey& o) const { return std::tie(u, v, c) < std::tie(o.u, o.v, o.c); }
};

EdgeKey key_of(int u, int v, int c) { return {std::min(u, v), std::max(u, v), c}; }

struct Elem {
    int node;
    bool x_up; // the pair's `x` end faces the anchor
};

// Contracted pairs sitting on an edge, listed from the anchor endpoint.
// root_gap >= 0 marks the marked-edge position among the physical segments;
// root_leg1_up remembers whether leg 1 sits on the anchor side of that gap.
struct Decoration {
    int anchor = -1;
    std::vector<Elem> elems;
    int root_gap = -1;
    bool root_leg1_up = true;
};

Decoration reanchored(Decoration dec, int from) {
    if (dec.anchor == from || dec.anchor == -1) {
        dec.anchor = from;
        return dec;
    }
    std::reverse(dec.elems.begin(), dec.elems.end());
    for (auto& e : dec.elems) e.x_up = !e.x_up;
    if (dec.root_gap >= 0) {
        dec.root_gap = (int)dec.elems.size() - dec.root_gap;
        dec.root_leg1_up = !dec.root_leg1_up;
    }
    dec.anchor = from;
    return dec;
}

struct PairRecord {
    int x = -1, y = -1;
    int att = 0;
    std::map<int, Decoration> child_dec; // color != att, anchored at x
};

} // namespace

MelonTree melon_tree(const RootedColored& input) {
    const int d = input.g.rank();
    ColoredGraph g = input.g;
    if (!g.closed() || !g.connected())
        throw std::domain_error("melon_tree: graph must be closed and connected");
    if (g.partner(input.root_u, 0) != input.root_v)
        throw std::invalid_argument("melon_tree: root is not a color-0 edge");
    std::map<EdgeKey, Decoration> dec;
    std::vector<PairRecord> recs;
    int root_edge_u = input.root_u, root_edge_v = input.root_v; // ids of the marked segment while physical

    auto take_dec = [&](int u, int v, int c) -> Decoration {
        auto it = dec.find(key_of(u, v, c));
        Decoration out;
        if (it != dec.end()) {
            out = it->second;
            dec.erase(it);
        }
        return reanchored(out, u);
    };

    while (g.vertex_count() > 2) {
        int px = -1, py = -1, att = -1;
        for (int x : g.live_vertices()) {
            std::map<int, int> counts;
            for (int c = 0; c <= d; ++c) counts[g.partner(x, c)]++;
            for (auto& [y, n] : counts) {
                if (y == x || n != d) continue;
                // keep the marked edge on the spine: never contract a pair
                // whose internal color-0 edge carries the root
                bool root_inside = g.partner(x, 0) == y &&
                                   ((x == root_edge_u && y == root_edge_v) ||
                                    (x == root_edge_v && y == root_edge_u));
                if (root_inside) continue;
                px = x;
                py = y;
                for (int c = 0; c <= d; ++c)
                    if (g.partner(x, c) != y) att = c;
                break;
            }
            if (px >= 0) break;
        }
        if (px < 0) throw std::domain_error("melon_tree: graph is not melonic");
        int qx = g.partner(px, att), qy = g.partner(py, att);
        PairRecord rec;
        rec.x = px;
        rec.y = py;
        rec.att = att;
        for (int c = 0; c <= d; ++c) {
            if (c == att) continue;
            rec.child_dec[c] = take_dec(px, py, c);
        }
        Decoration up = take_dec(qx, px, att);   // anchored at qx
        Decoration down = take_dec(py, qy, att); // anchored at py
        int node_id = (int)recs.size();
        Decoration merged;
        merged.anchor = qx;
        merged.elems = up.elems;
        merged.elems.push_back({node_id, true}); // x faces qx by construction
        size_t a = up.elems.size();
        merged.elems.insert(merged.elems.end(), down.elems.begin(), down.elems.end());
        // root bookkeeping (color 0 merges only can carry it)
        if (up.root_gap >= 0) {
            merged.root_gap = up.root_gap;
            merged.root_leg1_up = up.root_leg1_up;
        } else if (down.root_gap >= 0) {
            merged.root_gap = (int)a + 1 + down.root_gap;
            merged.root_leg1_up = down.root_leg1_up;
        } else if (att == 0 && ((px == root_edge_u && qx == root_edge_v) ||
                                (px == root_edge_v && qx == root_edge_u))) {
            if (a != 0) throw std::logic_error("melon_tree: decorated physical root");
            merged.root_gap = 0;
            merged.root_leg1_up = (input.root_u == qx);
            root_edge_u = root_edge_v = -1;
        } else if (att == 0 && ((py == root_edge_u && qy == root_edge_v) ||
                                (py == root_edge_v && qy == root_edge_u))) {
            if (!down.elems.empty()) throw std::logic_error("melon_tree: decorated physical root");
            merged.root_gap = (int)a + 1;
            merged.root_leg1_up = (input.root_u != qy);
            root_edge_u = root_edge_v = -1;
        }
        g.kill_vertex(px);
        g.kill_vertex(py);
        g.connect(qx, qy, att);
        auto key = key_of(qx, qy, att);
        dec[key] = reanchored(merged, key.u);
        recs.push_back(std::move(rec));
    }

    auto live = g.live_vertices();
    int fx = live[0], fy = live[1];
    int final_id = (int)recs.size();

    MelonTree t;
    t.d = d;
    t.child.assign(recs.size() + 1, std::vector<int>(d + 1, -1));

    // resolve a decoration list into a child chain; `flip` reverses it
    auto resolve = [&](auto&& self, std::vector<Elem> elems, bool flip, int c) -> int {
        if (flip) {
            std::reverse(elems.begin(), elems.end());
            for (auto& e : elems) e.x_up = !e.x_up;
        }
        int head = -1, prev = -1;
        for (auto& e : elems) {
            for (auto& [cc, dc] : recs[e.node].child_dec) {
                // stored anchored at x; flip when y is the upper end
                t.child[e.node][cc] = self(self, dc.elems, !e.x_up, cc);
            }
            if (prev >= 0)
                t.child[prev][c] = e.node;
            else
                head = e.node;
            prev = e.node;
        }
        return head;
    };

    // spine: the color-0 edge of the final pair carries the root gap
    Decoration spine = take_dec(fx, fy, 0);
    int p = spine.root_gap;
    bool leg1_up = spine.root_leg1_up;
    if (p < 0) {
        // the marked edge is still physical: it is the final direct edge and
        // nothing was ever stacked on it
        bool matches = (fx == root_edge_u && fy == root_edge_v) || (fx == root_edge_v && fy == root_edge_u);
        if (!matches || !spine.elems.empty()) throw std::logic_error("melon_tree: lost the root");
        p = 0;
        leg1_up = (input.root_u == spine.anchor);
    }

    // build the descending node order from the gap
    struct SpineElem {
        int node;
        bool x_up;
        bool is_final;
    };
    std::vector<SpineElem> order;
    int k = (int)spine.elems.size();
    if (leg1_up) {
        for (int i = p; i < k; ++i) order.push_back({spine.elems[i].node, spine.elems[i].x_up, false});
        order.push_back({final_id, true, true}); // up end = fy side when descending past the far end
        for (int i = 0; i < p; ++i) order.push_back({spine.elems[i].node, spine.elems[i].x_up, false});
    } else {
        for (int i = p; i-- > 0;) order.push_back({spine.elems[i].node, !spine.elems[i].x_up, false});
        order.push_back({final_id, false, true});
        for (int i = k; i-- > p;) order.push_back({spine.elems[i].node, !spine.elems[i].x_up, false});
    }
    // the final pair's up end: descending with the anchor on top reaches fy
    // first through the far end of the list; with the reversed reading it is fx
    int prev = -1;
    for (auto& e : order) {
        if (e.is_final) {
            int up_vertex = leg1_up ? fy : fx;
            for (int c = 1; c <= d; ++c) {
                Decoration dc = take_dec(fx, fy, c);
                // anchored at min(fx,fy); orient from the up end
                bool flip = dc.anchor != up_vertex;
                t.child[final_id][c] = resolve(resolve, dc.elems, flip, c);
            }
            if (prev >= 0)
                t.child[prev][0] = final_id;
            else
                t.root = final_id;
            prev = final_id;
        } else {
            for (auto& [cc, dc] : recs[e.node].child_dec)
                t.child[e.node][cc] = resolve(resolve, dc.elems, !e.x_up, cc);
            if (prev >= 0)
                t.child[prev][0] = e.node;
            else
                t.root = e.node;
            prev = e.node;
        }
    }
    if (t.root < 0) throw std::logic_error("melon_tree: empty spine");
    return t;
}

namespace {

void build_stack(RootedColored& r, const MelonTree& t, int node, int u, int v, int c);

void build_node(RootedColored& r, const MelonTree& t, int node, int& top, int& bottom) {
    int d = t.d;
    int x = r.g.add_vertex(), y = r.g.add_vertex();
    for (int cc = 0; cc <= d; ++cc) {
        if (cc == 0) continue;
        build_stack(r, t, t.child[node][cc], x, y, cc);
    }
    top = x;
    bottom = y;
}

void build_stack(RootedColored& r, const MelonTree& t, int node, int u, int v, int c) {
    if (node < 0) {
        r.g.connect(u, v, c);
        return;
    }
    int d = t.d;
    int x = r.g.add_vertex(), y = r.g.add_vertex();
    r.g.connect(u, x, c);
    for (int cc = 0; cc <= d; ++cc) {
        if (cc == c) continue;
        build_stack(r, t, t.child[node][cc], x, y, cc);
    }
    build_stack(r, t, t.child[node][c], y, v, c);
}

} // namespace

RootedColored melon_tree_graph(const MelonTree& t, int d) {
    RootedColored r;
    r.g = ColoredGraph(d);
    if (t.root < 0) throw std::invalid_argument("melon_tree_graph: empty tree");
    // the spine: nodes chained through child slot 0, closed by the root edge
    int top, bottom;
    build_node(r, t, t.root, top, bottom);
    int first_top = top;
    int cur = t.child[t.root][0];
    while (cur >= 0) {
        int nt, nb;
        build_node(r, t, cur, nt, nb);
        r.g.connect(bottom, nt, 0);
        bottom = nb;
        cur = t.child[cur][0];
    }
    r.g.connect(bottom, first_top, 0);
    r.root_u = first_top;
    r.root_v = bottom;
    return r;
}

std::vector<MelonTree> enumerate_melon_trees(int d, unsigned n) {
    std::vector<MelonTree> out;
    if (n == 0) {
        MelonTree t;
        t.d = d;
        return {t};
    }
    std::vector<std::vector<MelonTree>> smaller;
    for (unsigned k = 0; k < n; ++k) smaller.push_back(enumerate_melon_trees(d, k));
    std::vector<unsigned> parts(d + 1, 0);
    auto rec = [&](auto&& self, int slot, unsigned rest) -> void {
        if (slot == d) {
            parts[slot] = rest;
            std::vector<size_t> idx(d + 1, 0);
            while (true) {
                MelonTree t;
                t.d = d;
                t.child.push_back(std::vector<int>(d + 1, -1));
                t.root = 0;
                for (int c = 0; c <= d; ++c) {
                    const MelonTree& sub = smaller[parts[c]][idx[c]];
                    if (sub.root < 0) continue;
                    int base = (int)t.child.size();
                    for (auto row : sub.child) {
                        for (auto& ch : row)
                            if (ch >= 0) ch += base;
                        t.child.push_back(row);
                    }
                    t.child[0][c] = sub.root + base;
                }
                out.push_back(std::move(t));
                int c = 0;
                for (; c <= d; ++c) {
                    if (++idx[c] < smaller[parts[c]].size()) break;
                    idx[c] = 0;
                }
                if (c > d) break;
            }
            return;
        }
        for (unsigned k = 0; k <= rest; ++k) {
            parts[slot] = k;
            self(self, slot + 1, rest - k);
        }
    };
    rec(rec, 0, n - 1);
    return out;
}

Integer fuss_catalan(int d, unsigned n) {
    if (n == 0) return Integer(1);
    Integer b = binomial((unsigned long)(d + 1) * n, n);
    Integer q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t(), d * n + 1);
    if (r != 0) throw std::logic_error("fuss_catalan: non-integer");
    return q;
}

RootedColored sample_colored_melonic(int d, std::mt19937& rng, unsigned n_melons) {
    RootedColored r = elementary_melon(d);
    for (unsigned i = 1; i < n_melons; ++i) {
        auto live = r.g.live_vertices();
        int u = live[rng() % live.size()];
        int c = (int)(rng() % (d + 1));
        insert_colored_melon(r, u, c);
    }
    return r;
}

} // namespace wb
