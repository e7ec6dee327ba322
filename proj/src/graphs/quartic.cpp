#include "graphs/quartic.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wb {

const char* bubble_kind_name(BubbleKind k) {
    switch (k) {
        case BubbleKind::Tetra: return "tetra";
        case BubbleKind::Pillow1: return "pillow1";
        case BubbleKind::Pillow2: return "pillow2";
        case BubbleKind::Pillow3: return "pillow3";
        case BubbleKind::Pillow3b: return "pillow3b";
        case BubbleKind::Pillow3nb: return "pillow3nb";
    }
    return "?";
}

std::vector<BubbleKind> model_bubbles(QModel m) {
    if (m == QModel::ON3)
        return {BubbleKind::Tetra, BubbleKind::Pillow1, BubbleKind::Pillow2, BubbleKind::Pillow3};
    return {BubbleKind::Tetra, BubbleKind::Pillow1, BubbleKind::Pillow2, BubbleKind::Pillow3b,
            BubbleKind::Pillow3nb};
}

int pillow_color(BubbleKind k) {
    switch (k) {
        case BubbleKind::Pillow1: return 1;
        case BubbleKind::Pillow2: return 2;
        case BubbleKind::Pillow3:
        case BubbleKind::Pillow3b:
        case BubbleKind::Pillow3nb: return 3;
        default: return 0;
    }
}

std::array<int, 4> add_bubble(QuarticGraph& q, BubbleKind kind) {
    bool bip = q.model == QModel::UN2OD;
    std::array<int8_t, 4> vc{0, 0, 0, 0};
    if (bip) {
        switch (kind) {
            case BubbleKind::Tetra:
            case BubbleKind::Pillow3nb: vc = {1, -1, 1, -1}; break;
            case BubbleKind::Pillow1:
            case BubbleKind::Pillow2:
            case BubbleKind::Pillow3b: vc = {1, -1, -1, 1}; break;
            case BubbleKind::Pillow3: throw std::invalid_argument("Pillow3 is an ON3 bubble");
        }
    } else if (kind == BubbleKind::Pillow3b || kind == BubbleKind::Pillow3nb) {
        throw std::invalid_argument("colored pillow-3 variants are UN2OD bubbles");
    }
    std::array<int, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = q.g.add_vertex(vc[i]);
    if (kind == BubbleKind::Tetra) {
        q.g.connect(v[0], v[1], 1);
        q.g.connect(v[2], v[3], 1);
        q.g.connect(v[1], v[2], 2);
        q.g.connect(v[3], v[0], 2);
        q.g.connect(v[0], v[2], 3);
        q.g.connect(v[1], v[3], 3);
    } else {
        int i = pillow_color(kind);
        int j = i == 1 ? 2 : 1, k = i == 3 ? 2 : 3;
        q.g.connect(v[0], v[1], j);
        q.g.connect(v[0], v[1], k);
        q.g.connect(v[2], v[3], j);
        q.g.connect(v[2], v[3], k);
        q.g.connect(v[0], v[2], i);
        q.g.connect(v[1], v[3], i);
    }
    return v;
}

std::vector<BubbleInfo> classify_bubbles(const ColoredGraph& g, QModel model) {
    std::vector<BubbleInfo> out;
    std::set<int> seen;
    for (int v0 : g.live_vertices()) {
        if (seen.count(v0)) continue;
        std::vector<int> comp{v0};
        seen.insert(v0);
        for (size_t i = 0; i < comp.size(); ++i)
            for (int c = 1; c <= 3; ++c) {
                int u = g.partner(comp[i], c);
                if (u >= 0 && !seen.count(u)) {
                    seen.insert(u);
                    comp.push_back(u);
                }
            }
        if (comp.size() != 4) throw std::domain_error("classify_bubbles: non-quartic bubble found");
        std::sort(comp.begin(), comp.end());
        // internal bicolored cycles over pairs of colors in {1,2,3}; the
        // double-step orbit count is twice the face count
        auto faces = [&](int i, int j) {
            std::set<int> vis;
            unsigned orbits = 0;
            for (int s : comp) {
                if (vis.count(s)) continue;
                int v = s;
                do {
                    vis.insert(v);
                    v = g.partner(g.partner(v, i), j);
                } while (v != s);
                ++orbits;
            }
            if (orbits % 2) throw std::logic_error("classify_bubbles: odd orbit count");
            return orbits / 2;
        };
        unsigned f12 = faces(1, 2), f13 = faces(1, 3), f23 = faces(2, 3);
        BubbleInfo info;
        info.vertices = comp;
        if (f12 == 1 && f13 == 1 && f23 == 1) {
            info.kind = BubbleKind::Tetra;
        } else if (f23 == 2 && f12 == 1 && f13 == 1) {
            info.kind = BubbleKind::Pillow1;
        } else if (f13 == 2 && f12 == 1 && f23 == 1) {
            info.kind = BubbleKind::Pillow2;
        } else if (f12 == 2 && f13 == 1 && f23 == 1) {
            if (model == QModel::ON3) {
                info.kind = BubbleKind::Pillow3;
            } else {
                // split by the vertex coloring of a color-3 edge
                int a = comp[0], b = g.partner(comp[0], 3);
                info.kind = (g.vertex_color(a) == -g.vertex_color(b)) ? BubbleKind::Pillow3b
                                                                      : BubbleKind::Pillow3nb;
            }
        } else {
            throw std::domain_error("classify_bubbles: unrecognized quartic bubble");
        }
        out.push_back(std::move(info));
    }
    return out;
}

Rational on3_degree(const ColoredGraph& g) {
    if (!g.closed()) throw std::domain_error("on3_degree: graph must be closed");
    if (!g.connected()) throw std::domain_error("on3_degree: graph must be connected");
    auto bubbles = classify_bubbles(g, QModel::ON3);
    long nt = 0, np = 0;
    for (auto& b : bubbles)
        (b.kind == BubbleKind::Tetra ? nt : np)++;
    long F = 0;
    for (int i = 1; i <= 3; ++i) F += g.face_count(0, i);
    Rational omega = Rational(3) + rat(3 * nt, 2) + Rational(2 * np) - Rational(F);
    if (sgn(omega) < 0 || !is_integer(omega * 2)) throw std::logic_error("on3_degree: invalid degree");
    return omega;
}

GenusGrade un2od_genus_grade(const ColoredGraph& g) {
    if (!g.closed()) throw std::domain_error("un2od_genus_grade: graph must be closed");
    if (!g.connected()) throw std::domain_error("un2od_genus_grade: graph must be connected");
    if (!g.bipartite_ok()) throw std::domain_error("un2od_genus_grade: bipartiteness violated");
    auto bubbles = classify_bubbles(g, QModel::UN2OD);
    long nt = 0, n1 = 0, n2 = 0, n3 = 0;
    for (auto& b : bubbles) {
        switch (b.kind) {
            case BubbleKind::Tetra: ++nt; break;
            case BubbleKind::Pillow1: ++n1; break;
            case BubbleKind::Pillow2: ++n2; break;
            default: ++n3; break;
        }
    }
    long E = g.vertex_count() / 2;
    long F1 = g.face_count(0, 1), F2 = g.face_count(0, 2), F3 = g.face_count(0, 3);
    // 2 - 2h = F01 + F02 - E + nt + n1 + n2
    long two_minus_2h = F1 + F2 - E + nt + n1 + n2;
    if ((2 - two_minus_2h) % 2 != 0) throw std::logic_error("un2od_genus_grade: non-integer genus");
    long h = (2 - two_minus_2h) / 2;
    // 1 + h - l/2 = F03 - E + (3/2) nt + n1 + n2 + 2 n3
    Rational rhs = Rational(F3) - Rational(E) + rat(3 * nt, 2) + rat(n1 + n2) + Rational(2 * n3);
    Rational l_half = Rational(1 + h) - rhs;
    if (!is_integer(l_half)) throw std::logic_error("un2od_genus_grade: non-integer grade/2");
    long l = 2 * l_half.get_num().get_si();
    if (h < 0 || l < 0) throw std::logic_error("un2od_genus_grade: negative genus or grade");
    // independent combinatorial expression of the grade
    Rational comb = Rational(F1 + F2) / 2 + Rational(F3) - rat(3 * E, 2) + Rational(2 * nt) +
                    Rational(2 * n3) + rat(3 * (n1 + n2), 2);
    if (comb != Rational(2) - rat(l, 2))
        throw std::logic_error("un2od_genus_grade: grade cross-check failed");
    return {h, l};
}

Rational quartic_degree(const QuarticGraph& q) {
    if (q.bare) return Rational(0);
    if (q.model == QModel::ON3) return on3_degree(q.g);
    auto [h, l] = un2od_genus_grade(q.g);
    return Rational(h) + rat(l, 2);
}

GenusGrade quartic_genus_grade(const QuarticGraph& q) {
    if (q.bare) return {0, 0};
    return un2od_genus_grade(q.g);
}

namespace {

void match_slots(QuarticGraph& q, std::vector<int>& slots, size_t at, bool connected_only,
                 const std::function<void(const QuarticGraph&)>& fn) {
    // find first open slot
    int v = -1;
    for (size_t i = 0; i < slots.size(); ++i)
        if (q.g.partner(slots[i], 0) == ColoredGraph::kOpen) {
            v = slots[i];
            break;
        }
    (void)at;
    if (v < 0) {
        if (!connected_only || q.g.connected()) fn(q);
        return;
    }
    // pairing the first open slot with every other open slot enumerates each
    // perfect matching exactly once
    for (int u : slots) {
        if (u == v || q.g.partner(u, 0) != ColoredGraph::kOpen) continue;
        if (q.model == QModel::UN2OD && q.g.vertex_color(u) != -q.g.vertex_color(v)) continue;
        q.g.connect(v, u, 0);
        match_slots(q, slots, at, connected_only, fn);
        q.g.open_slot(v, 0);
        q.g.open_slot(u, 0);
    }
}

} // namespace

void enumerate_pairings(QModel model, const std::vector<BubbleKind>& kinds, bool connected_only,
                        const std::function<void(const QuarticGraph&)>& fn) {
    QuarticGraph q;
    q.model = model;
    for (auto k : kinds) add_bubble(q, k);
    auto slots = q.g.live_vertices();
    if (slots.size() % 2) throw std::invalid_argument("enumerate_pairings: odd number of half-edges");
    if (model == QModel::UN2OD) {
        long w = 0;
        for (int v : slots) w += q.g.vertex_color(v);
        if (w != 0) throw std::invalid_argument("enumerate_pairings: unbalanced bipartition");
    }
    match_slots(q, slots, 0, connected_only, fn);
}

void enumerate_rooted(QModel model, const std::vector<BubbleKind>& kinds, bool connected_only,
                      const std::function<void(const QuarticGraph&)>& fn) {
    enumerate_pairings(model, kinds, connected_only, [&](const QuarticGraph& closed) {
        QuarticGraph q = closed;
        for (int v : q.g.live_vertices()) {
            int u = q.g.partner(v, 0);
            if (u < v) continue;
            for (int flip = 0; flip < 2; ++flip) {
                q.root_u = flip ? u : v;
                q.root_v = flip ? v : u;
                fn(q);
            }
        }
    });
}

// ---- melon machinery ----------------------------------------------------

namespace {

// 2-point piece made of the given bubbles: exactly two color-0 attachments
// to the outside (the root edge counts as cut).
struct Piece {
    std::vector<int> vertices;
    int ext1 = -1, ext2 = -1; // inside slots
    int out1 = -1, out2 = -1; // their partners outside; -2 when the piece closes onto the root
};

std::optional<Piece> piece_of(const QuarticGraph& q, const std::vector<int>& vertices) {
    std::set<int> inside(vertices.begin(), vertices.end());
    Piece p;
    p.vertices = vertices;
    std::vector<std::pair<int, int>> ext;
    for (int v : vertices) {
        int u = q.g.partner(v, 0);
        if (u == ColoredGraph::kOpen) return std::nullopt;
        bool root = q.is_root_edge(v, u);
        if (!inside.count(u)) {
            ext.push_back({v, u});
        } else if (root) {
            // the root edge is always treated as cut
            if (v < u) {
                ext.push_back({v, -2});
                ext.push_back({u, -2});
            }
        }
    }
    if (ext.size() != 2) return std::nullopt;
    p.ext1 = ext[0].first;
    p.out1 = ext[0].second;
    p.ext2 = ext[1].first;
    p.out2 = ext[1].second;
    return p;
}

// degree of the piece closed into a 2-point function
bool piece_is_melonic(const QuarticGraph& q, const Piece& p) {
    QuarticGraph c;
    c.model = q.model;
    std::map<int, int> remap;
    for (int v : p.vertices) remap[v] = c.g.add_vertex(q.g.vertex_color(v));
    std::set<int> inside(p.vertices.begin(), p.vertices.end());
    for (int v : p.vertices)
        for (int col = 0; col <= 3; ++col) {
            int u = q.g.partner(v, col);
            if (u >= 0 && inside.count(u) && v < u) {
                if (col == 0 && q.is_root_edge(v, u)) continue;
                c.g.connect(remap[v], remap[u], col);
            }
        }
    if (p.ext1 == p.ext2) return false;
    c.g.connect(remap[p.ext1], remap[p.ext2], 0);
    if (!c.g.connected()) return false;
    try {
        if (q.model == QModel::ON3) return on3_degree(c.g) == Rational(0);
        auto [h, l] = un2od_genus_grade(c.g);
        return h == 0 && l == 0;
    } catch (const std::exception&) {
        return false;
    }
}

std::optional<Piece> find_melon_piece(const QuarticGraph& q, std::mt19937* shuffle) {
    if (q.bare) return std::nullopt;
    auto bubbles = classify_bubbles(q.g, q.model);
    std::vector<std::vector<int>> cands;
    for (size_t i = 0; i < bubbles.size(); ++i) {
        cands.push_back(bubbles[i].vertices);
        for (size_t j = i + 1; j < bubbles.size(); ++j) {
            std::vector<int> both = bubbles[i].vertices;
            both.insert(both.end(), bubbles[j].vertices.begin(), bubbles[j].vertices.end());
            cands.push_back(std::move(both));
        }
    }
    if (shuffle) std::shuffle(cands.begin(), cands.end(), *shuffle);
    for (auto& vs : cands) {
        auto p = piece_of(q, vs);
        if (p && piece_is_melonic(q, *p)) return p;
    }
    return std::nullopt;
}

MelonRecord contract_piece(QuarticGraph& q, const Piece& p) {
    MelonRecord rec;
    rec.piece_vertices = p.vertices;
    std::set<int> inside(p.vertices.begin(), p.vertices.end());
    for (int v : p.vertices) {
        rec.piece_vcolors.push_back(q.g.vertex_color(v));
        for (int col = 0; col <= 3; ++col) {
            int u = q.g.partner(v, col);
            if (u >= 0 && inside.count(u) && v < u) rec.piece_edges.push_back({v, u, col});
        }
    }
    rec.ext1 = p.ext1;
    rec.ext2 = p.ext2;
    rec.out1 = p.out1;
    rec.out2 = p.out2;
    rec.prev_root_u = q.root_u;
    rec.prev_root_v = q.root_v;
    rec.prev_bare = q.bare;

    bool root1 = p.out1 >= 0 && q.is_root_edge(p.ext1, p.out1);
    bool root2 = p.out2 >= 0 && q.is_root_edge(p.ext2, p.out2);
    for (int v : p.vertices) q.g.kill_vertex(v);
    if (p.out1 == -2) {
        // the piece was the whole 2-point graph
        q.bare = true;
        q.root_u = q.root_v = -1;
    } else {
        q.g.connect(p.out1, p.out2, 0);
        if (root1 || root2) {
            // the root marker moves onto the merged edge
            if (q.root_u == p.out1 || q.root_v == p.out2) {
                q.root_u = p.out1;
                q.root_v = p.out2;
            } else {
                q.root_u = p.out2;
                q.root_v = p.out1;
            }
        }
    }
    return rec;
}

} // namespace

bool has_melon_piece(const QuarticGraph& q) {
    return find_melon_piece(q, nullptr).has_value();
}

MelonLog melon_reduce(QuarticGraph& q, std::mt19937* shuffle) {
    MelonLog log;
    while (auto p = find_melon_piece(q, shuffle)) log.records.push_back(contract_piece(q, *p));
    return log;
}

void undo_melons(QuarticGraph& q, const MelonLog& log) {
    for (auto it = log.records.rbegin(); it != log.records.rend(); ++it) {
        const MelonRecord& r = *it;
        for (size_t i = 0; i < r.piece_vertices.size(); ++i)
            q.g.revive_vertex(r.piece_vertices[i], r.piece_vcolors[i]);
        for (auto& [u, v, c] : r.piece_edges) q.g.connect(u, v, c);
        if (r.out1 == -2) {
            // the record closed to the bare edge; the cut root edge joined
            // ext1 and ext2 directly
            q.g.connect(r.ext1, r.ext2, 0);
        } else {
            q.g.connect(r.out1, r.ext1, 0);
            q.g.connect(r.out2, r.ext2, 0);
        }
        q.bare = r.prev_bare;
        q.root_u = r.prev_root_u;
        q.root_v = r.prev_root_v;
    }
}

// ---- dipoles and chains --------------------------------------------------

namespace {

bool dipole_closure_ok(const QuarticGraph& q, const std::vector<int>& vertices,
                       const std::array<int, 2>& sideA, const std::array<int, 2>& sideB) {
    // join sideA[k] -- sideB[k] (melon closure) and also the opposite order:
    // valid sides close into the degree-zero elementary melon
    QuarticGraph c;
    c.model = q.model;
    std::map<int, int> remap;
    std::set<int> inside(vertices.begin(), vertices.end());
    for (int v : vertices) remap[v] = c.g.add_vertex(q.g.vertex_color(v));
    for (int v : vertices)
        for (int col = 0; col <= 3; ++col) {
            int u = q.g.partner(v, col);
            if (u >= 0 && inside.count(u) && v < u) {
                if (col == 0 && q.is_root_edge(v, u)) continue; // the root is a cut
                c.g.connect(remap[v], remap[u], col);
            }
        }
    // sides close pairwise onto themselves: each side's two slots get joined
    if (q.model == QModel::UN2OD) {
        if (c.g.vertex_color(remap[sideA[0]]) != -c.g.vertex_color(remap[sideA[1]])) return false;
        if (c.g.vertex_color(remap[sideB[0]]) != -c.g.vertex_color(remap[sideB[1]])) return false;
    }
    c.g.connect(remap[sideA[0]], remap[sideA[1]], 0);
    c.g.connect(remap[sideB[0]], remap[sideB[1]], 0);
    if (!c.g.closed() || !c.g.connected()) return false;
    try {
        if (q.model == QModel::ON3) return on3_degree(c.g) == Rational(0);
        auto [h, l] = un2od_genus_grade(c.g);
        return h == 0 && l == 0;
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<DipoleInst> find_dipoles(const QuarticGraph& q, const std::vector<BubbleInfo>& bubbles) {
    std::vector<DipoleInst> out;
    std::map<int, int> bubble_of;
    for (size_t i = 0; i < bubbles.size(); ++i)
        for (int v : bubbles[i].vertices) bubble_of[v] = (int)i;

    // pillows: always dipoles when their four legs leave the bubble
    for (size_t i = 0; i < bubbles.size(); ++i) {
        if (bubbles[i].kind == BubbleKind::Tetra) continue;
        const auto& vs = bubbles[i].vertices;
        bool legs_out = true;
        for (int v : vs) {
            int u = q.g.partner(v, 0);
            if (u < 0 || bubble_of.count(u) == 0 || bubble_of[u] == (int)i) legs_out = false;
        }
        if (!legs_out) continue;
        int color = pillow_color(bubbles[i].kind);
        // sides are the doubled pairs: x and its partner through both colors != color
        int j = color == 1 ? 2 : 1;
        int x = vs[0], y = q.g.partner(vs[0], j);
        DipoleInst d;
        d.bubbles = {(int)i};
        d.vertices = vs;
        d.color = color;
        d.pillow = true;
        d.vtype = (bubbles[i].kind == BubbleKind::Pillow3b);
        d.sideA = {x, y};
        d.sideB = {q.g.partner(x, color), q.g.partner(y, color)};
        out.push_back(std::move(d));
    }
    // tetra pairs with exactly two direct color-0 edges
    for (size_t i = 0; i < bubbles.size(); ++i) {
        if (bubbles[i].kind != BubbleKind::Tetra) continue;
        for (size_t j = i + 1; j < bubbles.size(); ++j) {
            if (bubbles[j].kind != BubbleKind::Tetra) continue;
            std::vector<std::pair<int, int>> cross;
            bool self_edge = false;
            std::vector<int> freeA, freeB;
            for (int v : bubbles[i].vertices) {
                int u = q.g.partner(v, 0);
                if (bubble_of[u] == (int)i) self_edge = true;
                else if (bubble_of[u] == (int)j && !q.is_root_edge(v, u)) cross.push_back({v, u});
                else freeA.push_back(v);
            }
            for (int v : bubbles[j].vertices) {
                int u = q.g.partner(v, 0);
                if (bubble_of[u] == (int)j) self_edge = true;
                else if (!(bubble_of[u] == (int)i && !q.is_root_edge(v, u))) freeB.push_back(v);
            }
            if (self_edge || cross.size() != 2 || freeA.size() != 2 || freeB.size() != 2) continue;
            // the untouched internal face fixes the dipole color
            int color = 0;
            auto [x1, y1] = cross[0];
            auto [x2, y2] = cross[1];
            for (int c = 1; c <= 3; ++c)
                if (q.g.partner(x1, c) == x2 && q.g.partner(y1, c) == y2) color = c;
            if (color == 0) continue;
            std::vector<int> verts = bubbles[i].vertices;
            verts.insert(verts.end(), bubbles[j].vertices.begin(), bubbles[j].vertices.end());
            // two candidate side pairings; the valid one closes to a melon
            DipoleInst d;
            d.bubbles = {(int)i, (int)j};
            d.vertices = verts;
            d.color = color;
            d.pillow = false;
            d.vtype = false;
            std::array<int, 2> A1{freeA[0], freeB[0]}, B1{freeA[1], freeB[1]};
            std::array<int, 2> A2{freeA[0], freeB[1]}, B2{freeA[1], freeB[0]};
            if (dipole_closure_ok(q, verts, A1, B1)) {
                d.sideA = A1;
                d.sideB = B1;
            } else if (dipole_closure_ok(q, verts, A2, B2)) {
                d.sideA = A2;
                d.sideB = B2;
            } else {
                continue;
            }
            out.push_back(std::move(d));
        }
    }
    // keep only bubble-disjoint (isolated) dipoles
    std::map<int, int> uses;
    for (auto& d : out)
        for (int b : d.bubbles) uses[b]++;
    std::vector<DipoleInst> isolated;
    for (auto& d : out) {
        bool ok = true;
        for (int b : d.bubbles)
            if (uses[b] > 1) ok = false;
        if (ok) isolated.push_back(d);
    }
    return isolated;
}

} // namespace

std::vector<ChainInst> detect_chains(const QuarticGraph& q) {
    if (q.bare) return {};
    if (has_melon_piece(q)) throw std::domain_error("detect_chains: residual melon found");
    auto bubbles = classify_bubbles(q.g, q.model);
    auto dipoles = find_dipoles(q, bubbles);

    // side slot -> (dipole, side index)
    std::map<std::pair<int, int>, std::pair<int, int>> side_of; // (slot sorted pair) -> ...
    auto side_key = [](std::array<int, 2> s) {
        return std::make_pair(std::min(s[0], s[1]), std::max(s[0], s[1]));
    };
    for (size_t i = 0; i < dipoles.size(); ++i) {
        side_of[side_key(dipoles[i].sideA)] = {(int)i, 0};
        side_of[side_key(dipoles[i].sideB)] = {(int)i, 1};
    }
    // adjacency between dipoles: a side connects to another dipole's side
    auto linked_side = [&](const DipoleInst& d, int side) -> std::optional<std::pair<int, int>> {
        const auto& s = side ? d.sideB : d.sideA;
        int p0 = q.g.partner(s[0], 0), p1 = q.g.partner(s[1], 0);
        if (p0 < 0 || p1 < 0) return std::nullopt;
        if (q.is_root_edge(s[0], p0) || q.is_root_edge(s[1], p1)) return std::nullopt;
        auto it = side_of.find(side_key({p0, p1}));
        if (it == side_of.end()) return std::nullopt;
        return it->second;
    };
    std::vector<std::array<std::optional<std::pair<int, int>>, 2>> links(dipoles.size());
    for (size_t i = 0; i < dipoles.size(); ++i) {
        for (int s = 0; s < 2; ++s) {
            auto l = linked_side(dipoles[i], s);
            if (l && (size_t)l->first != i) links[i][s] = l;
        }
    }
    // walk maximal paths
    std::vector<ChainInst> chains;
    std::vector<char> used(dipoles.size(), 0);
    for (size_t i = 0; i < dipoles.size(); ++i) {
        if (used[i]) continue;
        // find an end: follow side 0 backwards as far as possible
        int cur = (int)i, from_side = 0;
        std::set<int> guard;
        while (links[cur][from_side] && !guard.count(cur)) {
            guard.insert(cur);
            auto [nxt, nside] = *links[cur][from_side];
            cur = nxt;
            from_side = 1 - nside;
        }
        if (guard.count(cur)) throw std::logic_error("detect_chains: dipole necklace without boundary");
        // now cur's `from_side` is free; walk forward
        ChainInst chain;
        int walk = cur, enter = from_side;
        while (true) {
            used[walk] = 1;
            chain.dipoles.push_back(dipoles[walk]);
            if (enter == 1) std::swap(chain.dipoles.back().sideA, chain.dipoles.back().sideB);
            auto l = links[walk][1 - enter];
            if (!l) break;
            auto [nxt, nside] = *l;
            walk = nxt;
            enter = nside;
        }
        std::set<int> cols;
        long u_count = 0;
        for (auto& d : chain.dipoles) {
            cols.insert(d.color);
            if (!d.vtype) ++u_count;
        }
        if (cols.size() > 1)
            chain.kind = ChainKind::Broken;
        else
            chain.kind = *cols.begin() == 1   ? ChainKind::Color1
                         : *cols.begin() == 2 ? ChainKind::Color2
                                              : ChainKind::Color3;
        chain.u_even = (u_count % 2 == 0);
        chains.push_back(std::move(chain));
    }
    return chains;
}

// ---- scheme construction -------------------------------------------------

namespace {

struct ChainWordKind {
    bool broken;
    int color;
    bool u_even;
    bool operator==(const ChainWordKind& o) const {
        return broken == o.broken && color == o.color && u_even == o.u_even;
    }
};

ChainWordKind word_kind(const std::vector<DipoleInst>& word, QModel model) {
    std::set<int> cols;
    long u = 0;
    for (auto& d : word) {
        cols.insert(d.color);
        if (!d.vtype) ++u;
    }
    ChainWordKind k;
    k.broken = cols.size() > 1;
    k.color = k.broken ? 0 : *cols.begin();
    k.u_even = model == QModel::UN2OD && !k.broken && k.color == 3 ? (u % 2 == 0) : true;
    return k;
}

// delete dipole `pos` from the chain, splicing straight through; returns the
// shrink record, or nullopt when the splice is invalid or changes the degree
std::optional<ChainShrinkRecord> try_delete_dipole(QuarticGraph& q, std::vector<DipoleInst>& word,
                                                   size_t pos) {
    DipoleInst d = word[pos];
    Rational before = quartic_degree(q);
    ChainShrinkRecord rec;
    rec.piece_vertices = d.vertices;
    std::set<int> inside(d.vertices.begin(), d.vertices.end());
    for (int v : d.vertices) {
        rec.piece_vcolors.push_back(q.g.vertex_color(v));
        for (int col = 0; col <= 3; ++col) {
            int u = q.g.partner(v, col);
            if (u >= 0 && inside.count(u) && v < u) rec.piece_edges.push_back({v, u, col});
        }
    }
    rec.sideA = d.sideA;
    rec.sideB = d.sideB;
    std::array<int, 2> left{q.g.partner(d.sideA[0], 0), q.g.partner(d.sideA[1], 0)},
        right{q.g.partner(d.sideB[0], 0), q.g.partner(d.sideB[1], 0)};
    for (int k = 0; k < 2; ++k)
        if (left[k] < 0 || right[k] < 0 || inside.count(left[k]) || inside.count(right[k]))
            return std::nullopt;
    // bipartite models may require the crossed splice
    bool cross = false;
    if (q.model == QModel::UN2OD) {
        if (q.g.vertex_color(left[0]) == -q.g.vertex_color(right[0])) {
            cross = false;
        } else if (q.g.vertex_color(left[0]) == -q.g.vertex_color(right[1])) {
            cross = true;
        } else {
            return std::nullopt;
        }
    }
    if (cross) std::swap(right[0], right[1]);
    rec.left_out = left;
    rec.right_out = right;
    int prev_ru = q.root_u, prev_rv = q.root_v;
    rec.prev_root_u = prev_ru;
    rec.prev_root_v = prev_rv;
    std::array<bool, 2> merged_root{false, false};
    for (int k = 0; k < 2; ++k)
        merged_root[k] = q.is_root_edge(d.sideA[k], left[k]) ||
                         q.is_root_edge(cross ? d.sideB[1 - k] : d.sideB[k], right[k]);
    for (int v : d.vertices) q.g.kill_vertex(v);
    for (int k = 0; k < 2; ++k) q.g.connect(left[k], right[k], 0);
    for (int k = 0; k < 2; ++k)
        if (merged_root[k]) {
            if (prev_ru == left[k] || prev_ru == right[k]) {
                q.root_u = prev_ru;
                q.root_v = (prev_ru == left[k]) ? right[k] : left[k];
            } else {
                q.root_u = left[k];
                q.root_v = right[k];
            }
        }
    // accept only degree-preserving deletions
    bool ok = true;
    try {
        ok = (quartic_degree(q) == before) && (q.model != QModel::UN2OD || q.g.bipartite_ok());
    } catch (const std::exception&) {
        ok = false;
    }
    if (!ok) {
        // revert
        for (size_t i = 0; i < rec.piece_vertices.size(); ++i)
            q.g.revive_vertex(rec.piece_vertices[i], rec.piece_vcolors[i]);
        for (auto& [u, v, c] : rec.piece_edges) q.g.connect(u, v, c);
        for (int k = 0; k < 2; ++k) {
            q.g.connect(d.sideA[k], left[k], 0);
            q.g.connect(cross ? d.sideB[1 - k] : d.sideB[k], right[k], 0);
        }
        q.root_u = prev_ru;
        q.root_v = prev_rv;
        return std::nullopt;
    }
    // record sideB in the spliced order so that re-insertion is direct
    if (cross) std::swap(rec.sideB[0], rec.sideB[1]);
    word.erase(word.begin() + pos);
    return rec;
}

} // namespace

SchemeReport scheme_of(const QuarticGraph& q, std::mt19937* shuffle) {
    SchemeReport rep;
    rep.reduced = q;
    rep.degree_before = quartic_degree(q);
    if (q.model == QModel::UN2OD && !q.bare) rep.hl_before = un2od_genus_grade(q.g);
    rep.melon_log = melon_reduce(rep.reduced, shuffle);
    rep.melons_removed = rep.melon_log.count();
    auto chains = detect_chains(rep.reduced);
    for (auto& chain : chains) {
        SchemeChain sc;
        sc.kind = chain.kind;
        sc.u_even = chain.u_even;
        sc.recorded_length = chain.length();
        auto word = chain.dipoles;
        ChainWordKind kind = word_kind(word, rep.reduced.model);
        bool progress = true;
        while (progress && word.size() > 1) {
            progress = false;
            for (size_t pos = 0; pos < word.size(); ++pos) {
                auto shorter = word;
                shorter.erase(shorter.begin() + pos);
                if (!(word_kind(shorter, rep.reduced.model) == kind)) continue;
                auto rec = try_delete_dipole(rep.reduced, word, pos);
                if (rec) {
                    rep.shrink_log.push_back(*rec);
                    progress = true;
                    break;
                }
            }
        }
        sc.reduced_length = (unsigned)word.size();
        rep.chains.push_back(sc);
    }
    rep.degree_after = quartic_degree(rep.reduced);
    if (rep.reduced.model == QModel::UN2OD && !rep.reduced.bare)
        rep.hl_after = un2od_genus_grade(rep.reduced.g);
    return rep;
}

QuarticGraph scheme_expand(const SchemeReport& rep) {
    QuarticGraph q = rep.reduced;
    // undo chain shrinks in reverse
    for (auto it = rep.shrink_log.rbegin(); it != rep.shrink_log.rend(); ++it) {
        const auto& r = *it;
        for (size_t i = 0; i < r.piece_vertices.size(); ++i)
            q.g.revive_vertex(r.piece_vertices[i], r.piece_vcolors[i]);
        for (auto& [u, v, c] : r.piece_edges) q.g.connect(u, v, c);
        for (int k = 0; k < 2; ++k) {
            q.g.connect(r.left_out[k], r.sideA[k], 0);
            q.g.connect(r.right_out[k], r.sideB[k], 0);
        }
        q.root_u = r.prev_root_u;
        q.root_v = r.prev_root_v;
    }
    undo_melons(q, rep.melon_log);
    return q;
}

// ---- surgeries ------------------------------------------------------------

namespace {

// elementary melon piece; returns (ext1, ext2)
std::pair<int, int> build_melon_piece(QuarticGraph& q, BubbleKind kind) {
    if (kind == BubbleKind::Tetra) {
        auto a = add_bubble(q, BubbleKind::Tetra);
        auto b = add_bubble(q, BubbleKind::Tetra);
        if (q.model == QModel::UN2OD)
            for (int i = 0; i < 4; ++i) q.g.set_vertex_color(b[i], -q.g.vertex_color(b[i]));
        for (int i = 1; i < 4; ++i) q.g.connect(a[i], b[i], 0);
        return {a[0], b[0]};
    }
    auto v = add_bubble(q, kind);
    q.g.connect(v[0], v[1], 0);
    return {v[2], v[3]};
}

} // namespace

void insert_melon(QuarticGraph& q, int u, int v, BubbleKind kind) {
    if (q.g.partner(u, 0) != v) throw std::invalid_argument("insert_melon: not a color-0 edge");
    bool was_root = q.is_root_edge(u, v);
    int leg1 = q.root_u;
    auto [e1, e2] = build_melon_piece(q, kind);
    if (q.model == QModel::UN2OD && q.g.vertex_color(e1) != -q.g.vertex_color(u)) std::swap(e1, e2);
    q.g.connect(u, e1, 0);
    q.g.connect(v, e2, 0);
    if (was_root) {
        if (leg1 == u) {
            q.root_u = u;
            q.root_v = e1;
        } else {
            q.root_u = v;
            q.root_v = e2;
        }
    }
}

namespace {

// dipole piece with its two sides (through-paired index-wise)
struct DipolePiece {
    std::array<int, 2> sideA, sideB;
};

DipolePiece build_dipole_piece(QuarticGraph& q, const DipoleLetter& let) {
    DipolePiece p;
    if (let.pillow) {
        BubbleKind k;
        if (q.model == QModel::ON3)
            k = let.color == 1 ? BubbleKind::Pillow1 : let.color == 2 ? BubbleKind::Pillow2 : BubbleKind::Pillow3;
        else
            k = let.color == 1   ? BubbleKind::Pillow1
                : let.color == 2 ? BubbleKind::Pillow2
                : let.vtype      ? BubbleKind::Pillow3b
                                 : BubbleKind::Pillow3nb;
        auto v = add_bubble(q, k);
        p.sideA = {v[0], v[1]};
        p.sideB = {v[2], v[3]};
    } else {
        // two tetras joined by two color-0 edges, leaving the color-`c` face
        auto a = add_bubble(q, BubbleKind::Tetra);
        auto b = add_bubble(q, BubbleKind::Tetra);
        if (q.model == QModel::UN2OD)
            for (int i = 0; i < 4; ++i) q.g.set_vertex_color(b[i], -q.g.vertex_color(b[i]));
        // from the melon a[i] -- b[i] (i=1..3), cutting edge `cut` yields the
        // dipole of color: cut 3 -> 2, cut 1 -> 1-face... the internal face
        // joining the two remaining cross edges fixes the color
        int cut = 0;
        for (int candidate = 1; candidate <= 3; ++candidate) {
            int x1 = -1, x2 = -1;
            std::array<int, 2> keep{};
            int kk = 0;
            for (int i = 1; i <= 3; ++i)
                if (i != candidate) keep[kk++] = i;
            x1 = a[keep[0]];
            x2 = a[keep[1]];
            if (q.g.partner(x1, let.color) == x2) cut = candidate;
        }
        if (cut == 0) throw std::logic_error("build_dipole_piece: no cut produces requested color");
        for (int i = 1; i <= 3; ++i)
            if (i != cut) q.g.connect(a[i], b[i], 0);
        p.sideA = {a[0], b[0]};
        p.sideB = {a[cut], b[cut]};
    }
    return p;
}

void connect_bip(QuarticGraph& q, std::array<int, 2> from, std::array<int, 2> to) {
    if (q.model == QModel::UN2OD && q.g.vertex_color(from[0]) != -q.g.vertex_color(to[0]))
        std::swap(to[0], to[1]);
    q.g.connect(from[0], to[0], 0);
    q.g.connect(from[1], to[1], 0);
}

} // namespace

void insert_chain(QuarticGraph& q, int u, int v, const std::vector<DipoleLetter>& word) {
    if (word.empty()) throw std::invalid_argument("insert_chain: empty word");
    // pick a second color-0 edge distinct from (u,v)
    int u2 = -1, v2 = -1;
    for (int x : q.g.live_vertices()) {
        int y = q.g.partner(x, 0);
        if (y < 0 || y == x) continue;
        if ((x == u && y == v) || (x == v && y == u)) continue;
        u2 = x;
        v2 = y;
        break;
    }
    if (u2 < 0) throw std::domain_error("insert_chain: need a second color-0 edge");
    bool root1 = q.is_root_edge(u, v), root2 = q.is_root_edge(u2, v2);
    int leg1 = q.root_u;
    std::vector<DipolePiece> pieces;
    for (auto& let : word) pieces.push_back(build_dipole_piece(q, let));
    for (size_t i = 0; i + 1 < pieces.size(); ++i) connect_bip(q, pieces[i].sideB, pieces[i + 1].sideA);
    // boundary gluing: (u,v) -> first sideA, (u2,v2) -> last sideB
    connect_bip(q, {u, v}, pieces.front().sideA);
    connect_bip(q, {u2, v2}, pieces.back().sideB);
    if (root1) {
        q.root_u = leg1 == u ? u : v;
        q.root_v = q.g.partner(q.root_u, 0);
    } else if (root2) {
        q.root_u = leg1 == u2 ? u2 : v2;
        q.root_v = q.g.partner(q.root_u, 0);
    }
}

// ---- samplers --------------------------------------------------------------

QuarticGraph sample_rooted_graph(QModel model, std::mt19937& rng, int max_core_bubbles, int max_melons,
                                 int max_chains, int max_chain_len) {
    auto menu = model_bubbles(model);
    std::uniform_int_distribution<int> nb(1, max_core_bubbles);
    QuarticGraph q;
    while (true) {
        q = QuarticGraph{};
        q.model = model;
        int n = nb(rng);
        for (int i = 0; i < n; ++i) add_bubble(q, menu[rng() % menu.size()]);
        // random matching
        auto slots = q.g.live_vertices();
        std::shuffle(slots.begin(), slots.end(), rng);
        bool ok = true;
        for (int v : slots) {
            if (q.g.partner(v, 0) != ColoredGraph::kOpen) continue;
            std::vector<int> cands;
            for (int x : slots)
                if (x != v && q.g.partner(x, 0) == ColoredGraph::kOpen &&
                    (model != QModel::UN2OD || q.g.vertex_color(x) == -q.g.vertex_color(v)))
                    cands.push_back(x);
            if (cands.empty()) {
                ok = false;
                break;
            }
            q.g.connect(v, cands[rng() % cands.size()], 0);
        }
        if (ok && q.g.closed() && q.g.connected()) break;
    }
    // root
    auto live = q.g.live_vertices();
    int r = live[rng() % live.size()];
    q.root_u = r;
    q.root_v = q.g.partner(r, 0);

    auto random_edge = [&]() -> std::pair<int, int> {
        auto vs = q.g.live_vertices();
        int x = vs[rng() % vs.size()];
        return {x, q.g.partner(x, 0)};
    };
    int melons = (int)(rng() % (max_melons + 1));
    for (int i = 0; i < melons; ++i) {
        auto [x, y] = random_edge();
        BubbleKind k = menu[rng() % menu.size()];
        insert_melon(q, x, y, k);
    }
    int chains = (int)(rng() % (max_chains + 1));
    for (int i = 0; i < chains; ++i) {
        auto [x, y] = random_edge();
        int len = 1 + (int)(rng() % max_chain_len);
        std::vector<DipoleLetter> word;
        for (int l = 0; l < len; ++l) {
            DipoleLetter let;
            let.color = 1 + (int)(rng() % 3);
            let.pillow = rng() % 2;
            let.vtype = model == QModel::UN2OD && let.color == 3 && let.pillow && (rng() % 2);
            word.push_back(let);
        }
        try {
            insert_chain(q, x, y, word);
        } catch (const std::domain_error&) {
            break; // not enough edges; rare for tiny cores
        }
    }
    return q;
}

QuarticGraph sample_melonic(QModel model, std::mt19937& rng, int n_melons) {
    auto menu = model_bubbles(model);
    QuarticGraph q;
    q.model = model;
    auto [e1, e2] = build_melon_piece(q, menu[rng() % menu.size()]);
    q.g.connect(e1, e2, 0);
    q.root_u = e1;
    q.root_v = e2;
    for (int i = 1; i < n_melons; ++i) {
        auto vs = q.g.live_vertices();
        int x = vs[rng() % vs.size()];
        insert_melon(q, x, q.g.partner(x, 0), menu[rng() % menu.size()]);
    }
    return q;
}

} // namespace wb
