#include "graphs/rotation_map.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wb {

int RotationMap::add_vertex(int8_t color) {
    vcolor_.push_back(color);
    dead_.push_back(0);
    for (int i = 0; i < 4; ++i) alpha_.push_back(kOpen);
    return raw_size() - 1;
}

void RotationMap::kill_vertex(int v) {
    dead_[v] = 1;
    for (int i = 0; i < 4; ++i) alpha_[4 * v + i] = kOpen;
}

void RotationMap::revive_vertex(int v, int8_t color) {
    if (!dead_[v]) throw std::logic_error("revive_vertex: id not dead");
    dead_[v] = 0;
    vcolor_[v] = color;
    for (int i = 0; i < 4; ++i) alpha_[4 * v + i] = kOpen;
}

int RotationMap::vertex_count() const {
    int n = 0;
    for (int v = 0; v < raw_size(); ++v)
        if (!dead_[v]) ++n;
    return n;
}

void RotationMap::connect(int s1, int s2) {
    if (vertex_of(s1) == vertex_of(s2))
        throw std::invalid_argument("RotationMap::connect: slots on the same vertex");
    alpha_[s1] = s2;
    alpha_[s2] = s1;
}

std::vector<int> RotationMap::live_slots() const {
    std::vector<int> out;
    for (int v = 0; v < raw_size(); ++v)
        if (!dead_[v])
            for (int i = 0; i < 4; ++i) out.push_back(4 * v + i);
    return out;
}

bool RotationMap::closed() const {
    for (int s : live_slots())
        if (alpha_[s] == kOpen) return false;
    return true;
}

bool RotationMap::connected() const {
    std::vector<int> live;
    for (int v = 0; v < raw_size(); ++v)
        if (!dead_[v]) live.push_back(v);
    if (live.empty()) return true;
    std::set<int> seen{live[0]};
    std::vector<int> stack{live[0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int i = 0; i < 4; ++i) {
            int s = alpha_[4 * v + i];
            if (s == kOpen) continue;
            int u = vertex_of(s);
            if (!seen.count(u)) {
                seen.insert(u);
                stack.push_back(u);
            }
        }
    }
    return (int)seen.size() == (int)live.size();
}

bool RotationMap::bipartite_ok() const {
    for (int s : live_slots()) {
        int t = alpha_[s];
        if (t != kOpen && vcolor_[vertex_of(s)] != -vcolor_[vertex_of(t)]) return false;
    }
    return true;
}

std::vector<unsigned> RotationMap::face_lengths() const {
    std::vector<unsigned> out;
    std::set<int> seen;
    for (int s0 : live_slots()) {
        if (seen.count(s0)) continue;
        unsigned len = 0;
        int s = s0;
        do {
            seen.insert(s);
            s = sigma(alpha_[s]);
            ++len;
        } while (s != s0);
        out.push_back(len);
    }
    return out;
}

unsigned RotationMap::face_count() const { return (unsigned)face_lengths().size(); }

std::vector<unsigned> RotationMap::straight_cycle_lengths() const {
    std::vector<unsigned> out;
    std::set<int> seen; // directed states = slots
    for (int s0 : live_slots()) {
        if (seen.count(s0)) continue;
        // walk the straight cycle and mark both directions
        unsigned steps = 0;
        bool self_reverse = false;
        int s = s0;
        do {
            seen.insert(s);
            int rev = alpha_[s];
            if (rev == s0 && steps > 0) self_reverse = true;
            seen.insert(rev);
            s = opposite(alpha_[s]);
            ++steps;
        } while (s != s0);
        out.push_back(self_reverse ? steps / 2 : steps);
    }
    return out;
}

std::string RotationMap::canonical_key(int anchor_slot) const {
    // deterministic first-visit traversal: rooted maps have no symmetries
    std::map<int, int> vlabel;
    std::map<int, int> base; // vertex -> its slot labeled 0
    std::vector<int> queue;
    auto visit = [&](int slot) {
        int v = vertex_of(slot);
        if (!vlabel.count(v)) {
            vlabel[v] = (int)vlabel.size();
            base[v] = index_of(slot);
            queue.push_back(slot);
        }
    };
    visit(anchor_slot);
    std::ostringstream os;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int s = queue[qi];
        int v = vertex_of(s);
        os << "|" << (int)vcolor_[v];
        for (int k = 0; k < 4; ++k) {
            int slot = 4 * v + (base[v] + k) % 4;
            int t = alpha_[slot];
            if (t == kOpen) {
                os << ",x";
                continue;
            }
            visit(t);
            int u = vertex_of(t);
            os << "," << vlabel[u] << ":" << (index_of(t) - base[u] + 4) % 4;
        }
    }
    return os.str();
}

std::string RotationMap::canonical_key_closed() const {
    std::string best;
    for (int s : live_slots()) {
        std::string k = canonical_key(s);
        if (best.empty() || k < best) best = k;
    }
    return best;
}

MapGenusGrade map_genus_grade(const RotationMap& m) {
    if (!m.closed()) throw std::domain_error("map_genus_grade: map must be closed");
    if (!m.connected()) throw std::domain_error("map_genus_grade: map must be connected");
    if (!m.bipartite_ok()) throw std::domain_error("map_genus_grade: bipartiteness violated");
    long V = m.vertex_count();
    long E = 2 * V; // 4-valent
    long F = m.face_count();
    long chi = F - E + V;
    if (chi % 2) throw std::logic_error("map_genus_grade: odd Euler characteristic");
    long g = (2 - chi) / 2;
    auto prof = m.straight_cycle_lengths();
    long phi = (long)prof.size();
    // l/2 = 1 + g + E - 3V/2 - phi
    if ((3 * V) % 2) throw std::logic_error("map_genus_grade: odd vertex count");
    long l_half = 1 + g + E - (3 * V) / 2 - phi;
    long l = 2 * l_half;
    if (g < 0 || l < 0) throw std::logic_error("map_genus_grade: negative genus or grade");
    // sum (n-2) phi_2n = l - 2 - 2g
    long acc = 0;
    for (unsigned len : prof) {
        if (len % 2) throw std::logic_error("map_genus_grade: odd straight cycle");
        acc += (long)(len / 2) - 2;
    }
    if (acc != l - 2 - 2 * g) throw std::logic_error("map_genus_grade: cycle-length identity failed");
    return {g, l};
}

Rational map_degree(const MapGraph& q) {
    if (q.bare) return Rational(0);
    auto [g, l] = map_genus_grade(q.m);
    return Rational(g) + rat(l, 2);
}

namespace {

void match_map_slots(MapGraph& q, bool connected_only, const std::function<void(const MapGraph&)>& fn) {
    int s1 = -1;
    for (int s : q.m.live_slots())
        if (q.m.alpha(s) == RotationMap::kOpen && q.m.vertex_color(RotationMap::vertex_of(s)) == 1) {
            s1 = s;
            break;
        }
    if (s1 < 0) {
        if (!connected_only || q.m.connected()) fn(q);
        return;
    }
    for (int s2 : q.m.live_slots()) {
        if (q.m.alpha(s2) != RotationMap::kOpen) continue;
        if (q.m.vertex_color(RotationMap::vertex_of(s2)) != -1) continue;
        q.m.connect(s1, s2);
        match_map_slots(q, connected_only, fn);
        q.m.open_slot(s1);
        q.m.open_slot(s2);
    }
}

} // namespace

void enumerate_map_pairings(int n_pairs, bool connected_only,
                            const std::function<void(const MapGraph&)>& fn) {
    MapGraph q;
    for (int i = 0; i < n_pairs; ++i) {
        q.m.add_vertex(1);
        q.m.add_vertex(-1);
    }
    match_map_slots(q, connected_only, fn);
}

void enumerate_rooted_maps(int n_pairs, bool connected_only,
                           const std::function<void(const MapGraph&)>& fn) {
    enumerate_map_pairings(n_pairs, connected_only, [&](const MapGraph& closed) {
        MapGraph q = closed;
        for (int s : q.m.live_slots()) {
            int t = q.m.alpha(s);
            if (t < s) continue;
            for (int flip = 0; flip < 2; ++flip) {
                q.root_s1 = flip ? t : s;
                q.root_s2 = flip ? s : t;
                fn(q);
            }
        }
    });
}

// ---- melon machinery ------------------------------------------------------

namespace {

struct MapPiece {
    std::vector<int> vertices;
    int ext1 = -1, ext2 = -1;
    int out1 = -1, out2 = -1; // -2 when the piece closes onto the root
};

std::optional<MapPiece> map_piece_of(const MapGraph& q, const std::vector<int>& vertices) {
    std::set<int> inside(vertices.begin(), vertices.end());
    MapPiece p;
    p.vertices = vertices;
    std::vector<std::pair<int, int>> ext;
    for (int v : vertices)
        for (int i = 0; i < 4; ++i) {
            int s = 4 * v + i, t = q.m.alpha(s);
            if (t == RotationMap::kOpen) return std::nullopt;
            bool root = q.is_root_edge(s, t);
            if (!inside.count(RotationMap::vertex_of(t))) {
                ext.push_back({s, t});
            } else if (root && s < t) {
                ext.push_back({s, -2});
                ext.push_back({t, -2});
            }
        }
    if (ext.size() != 2) return std::nullopt;
    p.ext1 = ext[0].first;
    p.out1 = ext[0].second;
    p.ext2 = ext[1].first;
    p.out2 = ext[1].second;
    return p;
}

RotationMap piece_closure(const MapGraph& q, const std::vector<int>& vertices,
                          const std::vector<std::pair<int, int>>& joins) {
    RotationMap c;
    std::map<int, int> remap;
    std::set<int> inside(vertices.begin(), vertices.end());
    for (int v : vertices) remap[v] = c.add_vertex(q.m.vertex_color(v));
    auto rslot = [&](int s) { return 4 * remap[RotationMap::vertex_of(s)] + RotationMap::index_of(s); };
    for (int v : vertices)
        for (int i = 0; i < 4; ++i) {
            int s = 4 * v + i, t = q.m.alpha(s);
            if (t >= 0 && inside.count(RotationMap::vertex_of(t)) && s < t) {
                if (q.is_root_edge(s, t)) continue; // the root is a cut
                c.connect(rslot(s), rslot(t));
            }
        }
    for (auto& [a, b] : joins) c.connect(rslot(a), rslot(b));
    return c;
}

bool map_piece_is_melonic(const MapGraph& q, const MapPiece& p) {
    if (p.ext1 == p.ext2) return false;
    if (q.m.vertex_color(RotationMap::vertex_of(p.ext1)) !=
        -q.m.vertex_color(RotationMap::vertex_of(p.ext2)))
        return false;
    RotationMap c = piece_closure(q, p.vertices, {{p.ext1, p.ext2}});
    if (!c.closed() || !c.connected()) return false;
    try {
        auto [g, l] = map_genus_grade(c);
        return g == 0 && l == 0;
    } catch (const std::exception&) {
        return false;
    }
}

std::optional<MapPiece> find_map_melon(const MapGraph& q, std::mt19937* shuffle) {
    if (q.bare) return std::nullopt;
    std::vector<int> whites, blacks;
    for (int v = 0; v < q.m.raw_size(); ++v) {
        if (!q.m.alive(v)) continue;
        (q.m.vertex_color(v) == 1 ? whites : blacks).push_back(v);
    }
    std::vector<std::pair<int, int>> cands;
    for (int w : whites)
        for (int b : blacks) {
            int edges = 0;
            for (int i = 0; i < 4; ++i) {
                int t = q.m.alpha(4 * w + i);
                if (t >= 0 && RotationMap::vertex_of(t) == b && !q.is_root_edge(4 * w + i, t)) ++edges;
            }
            if (edges == 3) cands.push_back({w, b});
        }
    if (shuffle) std::shuffle(cands.begin(), cands.end(), *shuffle);
    for (auto& [w, b] : cands) {
        auto p = map_piece_of(q, {w, b});
        if (p && map_piece_is_melonic(q, *p)) return p;
    }
    return std::nullopt;
}

MapMelonRecord map_contract(MapGraph& q, const MapPiece& p) {
    MapMelonRecord rec;
    rec.piece_vertices = p.vertices;
    std::set<int> inside(p.vertices.begin(), p.vertices.end());
    for (int v : p.vertices) {
        rec.piece_vcolors.push_back(q.m.vertex_color(v));
        for (int i = 0; i < 4; ++i) {
            int s = 4 * v + i, t = q.m.alpha(s);
            if (t >= 0 && inside.count(RotationMap::vertex_of(t)) && s < t)
                rec.piece_edges.push_back({s, t});
        }
    }
    rec.ext1 = p.ext1;
    rec.ext2 = p.ext2;
    rec.out1 = p.out1;
    rec.out2 = p.out2;
    rec.prev_root_s1 = q.root_s1;
    rec.prev_root_s2 = q.root_s2;
    rec.prev_bare = q.bare;
    bool root1 = p.out1 >= 0 && q.is_root_edge(p.ext1, p.out1);
    bool root2 = p.out2 >= 0 && q.is_root_edge(p.ext2, p.out2);
    for (int v : p.vertices) q.m.kill_vertex(v);
    if (p.out1 == -2) {
        q.bare = true;
        q.root_s1 = q.root_s2 = -1;
    } else {
        q.m.connect(p.out1, p.out2);
        if (root1 || root2) {
            if (q.root_s1 == p.out1 || q.root_s2 == p.out2) {
                q.root_s1 = p.out1;
                q.root_s2 = p.out2;
            } else {
                q.root_s1 = p.out2;
                q.root_s2 = p.out1;
            }
        }
    }
    return rec;
}

} // namespace

bool map_has_melon(const MapGraph& q) { return find_map_melon(q, nullptr).has_value(); }

MapMelonLog map_melon_reduce(MapGraph& q, std::mt19937* shuffle) {
    MapMelonLog log;
    while (auto p = find_map_melon(q, shuffle)) log.records.push_back(map_contract(q, *p));
    return log;
}

void map_undo_melons(MapGraph& q, const MapMelonLog& log) {
    for (auto it = log.records.rbegin(); it != log.records.rend(); ++it) {
        const auto& r = *it;
        for (size_t i = 0; i < r.piece_vertices.size(); ++i)
            q.m.revive_vertex(r.piece_vertices[i], r.piece_vcolors[i]);
        for (auto& [a, b] : r.piece_edges) q.m.connect(a, b);
        if (r.out1 == -2) {
            q.m.connect(r.ext1, r.ext2);
        } else {
            q.m.connect(r.out1, r.ext1);
            q.m.connect(r.out2, r.ext2);
        }
        q.bare = r.prev_bare;
        q.root_s1 = r.prev_root_s1;
        q.root_s2 = r.prev_root_s2;
    }
}

// ---- dipoles and chains ----------------------------------------------------

namespace {

std::vector<MapDipoleInst> find_map_dipoles(const MapGraph& q) {
    std::vector<MapDipoleInst> out;
    std::vector<int> whites, blacks;
    for (int v = 0; v < q.m.raw_size(); ++v) {
        if (!q.m.alive(v)) continue;
        (q.m.vertex_color(v) == 1 ? whites : blacks).push_back(v);
    }
    std::map<int, int> uses; // vertex -> number of dipole instances
    std::vector<MapDipoleInst> found;
    for (int w : whites)
        for (int b : blacks) {
            std::vector<int> cross, freeW, freeB;
            for (int i = 0; i < 4; ++i) {
                int s = 4 * w + i, t = q.m.alpha(s);
                if (t >= 0 && RotationMap::vertex_of(t) == b && !q.is_root_edge(s, t))
                    cross.push_back(s);
                else
                    freeW.push_back(s);
            }
            for (int i = 0; i < 4; ++i) {
                int s = 4 * b + i, t = q.m.alpha(s);
                if (!(t >= 0 && RotationMap::vertex_of(t) == w && !q.is_root_edge(s, t)))
                    freeB.push_back(s);
            }
            if (cross.size() != 2 || freeW.size() != 2 || freeB.size() != 2) continue;
            // kind: the two connecting edges close a straight cycle of
            // length 2 (O) or a face of length 2 (U)
            bool is_o = q.m.opposite(cross[0]) == cross[1] &&
                        q.m.opposite(q.m.alpha(cross[0])) == q.m.alpha(cross[1]);
            bool is_u = q.m.sigma(q.m.alpha(cross[0])) == q.m.alpha(cross[1]) ||
                        q.m.sigma(q.m.alpha(cross[1])) == q.m.alpha(cross[0]);
            MapDipoleKind kind;
            if (is_o)
                kind = MapDipoleKind::O;
            else if (is_u)
                kind = MapDipoleKind::U;
            else
                continue;
            // side pairings: (white free slot, black free slot); pick the one
            // whose double closure is the degree-zero melon
            MapDipoleInst d;
            d.vw = w;
            d.vb = b;
            d.kind = kind;
            std::array<int, 2> A1{freeW[0], freeB[0]}, B1{freeW[1], freeB[1]};
            std::array<int, 2> A2{freeW[0], freeB[1]}, B2{freeW[1], freeB[0]};
            auto ok = [&](std::array<int, 2> A, std::array<int, 2> B) {
                RotationMap c = piece_closure(q, {w, b}, {{A[0], A[1]}, {B[0], B[1]}});
                if (!c.closed() || !c.connected()) return false;
                try {
                    auto [g, l] = map_genus_grade(c);
                    return g == 0 && l == 0;
                } catch (const std::exception&) {
                    return false;
                }
            };
            if (ok(A1, B1)) {
                d.sideA = A1;
                d.sideB = B1;
            } else if (ok(A2, B2)) {
                d.sideA = A2;
                d.sideB = B2;
            } else {
                continue;
            }
            found.push_back(d);
            uses[w]++;
            uses[b]++;
        }
    for (auto& d : found)
        if (uses[d.vw] == 1 && uses[d.vb] == 1) out.push_back(d);
    return out;
}

MapChainKind chain_kind_of(const std::vector<MapDipoleInst>& word) {
    bool has_o = false, has_u = false;
    for (auto& d : word) (d.kind == MapDipoleKind::O ? has_o : has_u) = true;
    if (has_o && has_u) return MapChainKind::Broken;
    if (has_u) return MapChainKind::U;
    return word.size() % 2 == 0 ? MapChainKind::OEven : MapChainKind::OOdd;
}

} // namespace

std::vector<MapChainInst> map_detect_chains(const MapGraph& q) {
    if (q.bare) return {};
    if (map_has_melon(q)) throw std::domain_error("map_detect_chains: residual melon found");
    auto dipoles = find_map_dipoles(q);
    auto side_key = [](std::array<int, 2> s) {
        return std::make_pair(std::min(s[0], s[1]), std::max(s[0], s[1]));
    };
    std::map<std::pair<int, int>, std::pair<int, int>> side_of;
    for (size_t i = 0; i < dipoles.size(); ++i) {
        side_of[side_key(dipoles[i].sideA)] = {(int)i, 0};
        side_of[side_key(dipoles[i].sideB)] = {(int)i, 1};
    }
    auto linked = [&](const MapDipoleInst& d, int side) -> std::optional<std::pair<int, int>> {
        const auto& s = side ? d.sideB : d.sideA;
        int p0 = q.m.alpha(s[0]), p1 = q.m.alpha(s[1]);
        if (p0 < 0 || p1 < 0) return std::nullopt;
        if (q.is_root_edge(s[0], p0) || q.is_root_edge(s[1], p1)) return std::nullopt;
        auto it = side_of.find(side_key({p0, p1}));
        if (it == side_of.end()) return std::nullopt;
        return it->second;
    };
    std::vector<std::array<std::optional<std::pair<int, int>>, 2>> links(dipoles.size());
    for (size_t i = 0; i < dipoles.size(); ++i)
        for (int s = 0; s < 2; ++s) {
            auto l = linked(dipoles[i], s);
            if (l && (size_t)l->first != i) links[i][s] = l;
        }
    std::vector<MapChainInst> chains;
    std::vector<char> used(dipoles.size(), 0);
    for (size_t i = 0; i < dipoles.size(); ++i) {
        if (used[i]) continue;
        int cur = (int)i, from = 0;
        std::set<int> guard;
        while (links[cur][from] && !guard.count(cur)) {
            guard.insert(cur);
            auto [nxt, nside] = *links[cur][from];
            cur = nxt;
            from = 1 - nside;
        }
        if (guard.count(cur)) throw std::logic_error("map_detect_chains: dipole necklace");
        MapChainInst chain;
        int walk = cur, enter = from;
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
        chain.kind = chain_kind_of(chain.dipoles);
        chains.push_back(std::move(chain));
    }
    return chains;
}

// ---- scheme -----------------------------------------------------------------

namespace {

// kind signature preserved by shrinking: (O/U/broken, parity for O)
int word_class(const std::vector<MapDipoleInst>& w) { return (int)chain_kind_of(w); }

std::optional<MapShrinkRecord> map_try_delete(MapGraph& q, std::vector<MapDipoleInst>& word,
                                              size_t pos) {
    MapDipoleInst d = word[pos];
    Rational before = map_degree(q);
    MapShrinkRecord rec;
    rec.piece_vertices = {d.vw, d.vb};
    std::set<int> inside{d.vw, d.vb};
    for (int v : rec.piece_vertices) {
        rec.piece_vcolors.push_back(q.m.vertex_color(v));
        for (int i = 0; i < 4; ++i) {
            int s = 4 * v + i, t = q.m.alpha(s);
            if (t >= 0 && inside.count(RotationMap::vertex_of(t)) && s < t)
                rec.piece_edges.push_back({s, t});
        }
    }
    rec.sideA = d.sideA;
    rec.sideB = d.sideB;
    // through pairing: sideA's white slot continues into sideB's black slot
    auto is_white = [&](int s) { return q.m.vertex_color(RotationMap::vertex_of(s)) == 1; };
    std::array<int, 2> A = d.sideA, B = d.sideB;
    if (!is_white(A[0])) std::swap(A[0], A[1]);
    if (!is_white(B[0])) std::swap(B[0], B[1]);
    // splice: partner(A_white) -- partner(B_black), partner(A_black) -- partner(B_white)
    std::array<int, 2> left{q.m.alpha(A[0]), q.m.alpha(A[1])};
    std::array<int, 2> right{q.m.alpha(B[1]), q.m.alpha(B[0])};
    for (int k = 0; k < 2; ++k)
        if (left[k] < 0 || right[k] < 0 || inside.count(RotationMap::vertex_of(left[k])) ||
            inside.count(RotationMap::vertex_of(right[k])))
            return std::nullopt;
    rec.sideA = A;
    rec.sideB = {B[1], B[0]};
    rec.left_out = left;
    rec.right_out = right;
    rec.prev_root_s1 = q.root_s1;
    rec.prev_root_s2 = q.root_s2;
    int prev_s1 = q.root_s1;
    std::array<bool, 2> merged_root;
    merged_root[0] = q.is_root_edge(A[0], left[0]) || q.is_root_edge(B[1], right[0]);
    merged_root[1] = q.is_root_edge(A[1], left[1]) || q.is_root_edge(B[0], right[1]);
    for (int v : rec.piece_vertices) q.m.kill_vertex(v);
    for (int k = 0; k < 2; ++k) q.m.connect(left[k], right[k]);
    for (int k = 0; k < 2; ++k)
        if (merged_root[k]) {
            if (prev_s1 == left[k] || prev_s1 == right[k]) {
                q.root_s1 = prev_s1;
                q.root_s2 = (prev_s1 == left[k]) ? right[k] : left[k];
            } else {
                q.root_s1 = left[k];
                q.root_s2 = right[k];
            }
        }
    bool ok = true;
    try {
        ok = (map_degree(q) == before) && q.m.bipartite_ok();
    } catch (const std::exception&) {
        ok = false;
    }
    if (!ok) {
        for (size_t i = 0; i < rec.piece_vertices.size(); ++i)
            q.m.revive_vertex(rec.piece_vertices[i], rec.piece_vcolors[i]);
        for (auto& [a, b] : rec.piece_edges) q.m.connect(a, b);
        for (int k = 0; k < 2; ++k) {
            q.m.connect(rec.sideA[k], left[k]);
            q.m.connect(rec.sideB[k], right[k]);
        }
        q.root_s1 = rec.prev_root_s1;
        q.root_s2 = rec.prev_root_s2;
        return std::nullopt;
    }
    word.erase(word.begin() + pos);
    return rec;
}

} // namespace

MapSchemeReport map_scheme_of(const MapGraph& q, std::mt19937* shuffle) {
    MapSchemeReport rep;
    rep.reduced = q;
    if (!q.bare) rep.gl_before = map_genus_grade(q.m);
    rep.melon_log = map_melon_reduce(rep.reduced, shuffle);
    rep.melons_removed = rep.melon_log.count();
    auto chains = map_detect_chains(rep.reduced);
    for (auto& chain : chains) {
        MapSchemeChain sc;
        sc.kind = chain.kind;
        sc.recorded_length = chain.length();
        auto word = chain.dipoles;
        int kind = word_class(word);
        bool progress = true;
        while (progress && word.size() > 1) {
            progress = false;
            for (size_t pos = 0; pos < word.size(); ++pos) {
                auto shorter = word;
                shorter.erase(shorter.begin() + pos);
                if (word_class(shorter) != kind) continue;
                auto rec = map_try_delete(rep.reduced, word, pos);
                if (rec) {
                    rep.shrink_log.push_back(*rec);
                    progress = true;
                    break;
                }
            }
            if (!progress && word.size() > 2) {
                // parity-preserving deletions may need to go in adjacent pairs
                for (size_t pos = 0; pos + 1 < word.size() && !progress; ++pos) {
                    auto shorter = word;
                    shorter.erase(shorter.begin() + pos, shorter.begin() + pos + 2);
                    if (word_class(shorter) != kind) continue;
                    auto r1 = map_try_delete(rep.reduced, word, pos);
                    if (!r1) continue;
                    rep.shrink_log.push_back(*r1);
                    auto r2 = map_try_delete(rep.reduced, word, pos);
                    if (r2) rep.shrink_log.push_back(*r2);
                    progress = true;
                }
            }
        }
        sc.reduced_length = (unsigned)word.size();
        rep.chains.push_back(sc);
    }
    if (!rep.reduced.bare) rep.gl_after = map_genus_grade(rep.reduced.m);
    return rep;
}

MapGraph map_scheme_expand(const MapSchemeReport& rep) {
    MapGraph q = rep.reduced;
    for (auto it = rep.shrink_log.rbegin(); it != rep.shrink_log.rend(); ++it) {
        const auto& r = *it;
        for (size_t i = 0; i < r.piece_vertices.size(); ++i)
            q.m.revive_vertex(r.piece_vertices[i], r.piece_vcolors[i]);
        for (auto& [a, b] : r.piece_edges) q.m.connect(a, b);
        for (int k = 0; k < 2; ++k) {
            q.m.connect(r.left_out[k], r.sideA[k]);
            q.m.connect(r.right_out[k], r.sideB[k]);
        }
        q.root_s1 = r.prev_root_s1;
        q.root_s2 = r.prev_root_s2;
    }
    map_undo_melons(q, rep.melon_log);
    return q;
}

// ---- surgeries --------------------------------------------------------------

namespace {

// builds the mirror-glued elementary melon; returns its two free slots
// (white, black)
std::pair<int, int> build_map_melon(RotationMap& m) {
    int w = m.add_vertex(1), b = m.add_vertex(-1);
    m.connect(4 * w + 1, 4 * b + 3);
    m.connect(4 * w + 2, 4 * b + 2);
    m.connect(4 * w + 3, 4 * b + 1);
    return {4 * w + 0, 4 * b + 0};
}

} // namespace

void map_insert_melon(MapGraph& q, int slot) {
    int s1 = slot, s2 = q.m.alpha(slot);
    if (s2 < 0) throw std::invalid_argument("map_insert_melon: open slot");
    bool was_root = q.is_root_edge(s1, s2);
    int leg1 = q.root_s1;
    auto [mw, mb] = build_map_melon(q.m);
    int e1 = s1, e2 = s2;
    if (q.m.vertex_color(RotationMap::vertex_of(e1)) == 1) {
        q.m.connect(e1, mb);
        q.m.connect(e2, mw);
    } else {
        q.m.connect(e1, mw);
        q.m.connect(e2, mb);
    }
    if (was_root) {
        q.root_s1 = leg1;
        q.root_s2 = q.m.alpha(leg1);
    }
}

namespace {

struct MapDipolePiece {
    std::array<int, 2> sideA, sideB; // (white slot, black slot)
};

MapDipolePiece build_map_dipole(RotationMap& m, MapDipoleKind kind) {
    // the elementary melon minus one edge: the middle edge gives the O-dipole
    // (a straight cycle of length 2), a top edge gives the U-dipole (a face
    // of length 2)
    int w = m.add_vertex(1), b = m.add_vertex(-1);
    MapDipolePiece p;
    if (kind == MapDipoleKind::O) {
        m.connect(4 * w + 1, 4 * b + 3);
        m.connect(4 * w + 3, 4 * b + 1);
        p.sideA = {4 * w + 0, 4 * b + 0};
        p.sideB = {4 * w + 2, 4 * b + 2};
    } else {
        m.connect(4 * w + 1, 4 * b + 3);
        m.connect(4 * w + 2, 4 * b + 2);
        p.sideA = {4 * w + 0, 4 * b + 0};
        p.sideB = {4 * w + 3, 4 * b + 1};
    }
    return p;
}

void map_connect_sides(RotationMap& m, std::array<int, 2> from, std::array<int, 2> to) {
    // join white to black slots
    auto white = [&](int s) { return m.vertex_color(RotationMap::vertex_of(s)) == 1; };
    if (white(from[0]) == white(to[0])) std::swap(to[0], to[1]);
    m.connect(from[0], to[0]);
    m.connect(from[1], to[1]);
}

} // namespace

void map_insert_chain(MapGraph& q, int slot, const std::vector<MapDipoleKind>& word) {
    if (word.empty()) throw std::invalid_argument("map_insert_chain: empty word");
    int u = slot, v = q.m.alpha(slot);
    if (v < 0) throw std::invalid_argument("map_insert_chain: open slot");
    int u2 = -1, v2 = -1;
    for (int s : q.m.live_slots()) {
        int t = q.m.alpha(s);
        if (t < 0) continue;
        if ((s == u && t == v) || (s == v && t == u)) continue;
        u2 = s;
        v2 = t;
        break;
    }
    if (u2 < 0) throw std::domain_error("map_insert_chain: need a second edge");
    bool root1 = q.is_root_edge(u, v), root2 = q.is_root_edge(u2, v2);
    int leg1 = q.root_s1;
    std::vector<MapDipolePiece> pieces;
    for (auto k : word) pieces.push_back(build_map_dipole(q.m, k));
    for (size_t i = 0; i + 1 < pieces.size(); ++i)
        map_connect_sides(q.m, pieces[i].sideB, pieces[i + 1].sideA);
    map_connect_sides(q.m, {u, v}, pieces.front().sideA);
    map_connect_sides(q.m, {u2, v2}, pieces.back().sideB);
    if (root1 || root2) {
        q.root_s1 = leg1;
        q.root_s2 = q.m.alpha(leg1);
    }
}

MapGraph sample_rooted_map(std::mt19937& rng, int max_core_pairs, int max_melons, int max_chains,
                           int max_chain_len) {
    std::uniform_int_distribution<int> np(1, max_core_pairs);
    MapGraph q;
    while (true) {
        q = MapGraph{};
        int n = np(rng);
        for (int i = 0; i < n; ++i) {
            q.m.add_vertex(1);
            q.m.add_vertex(-1);
        }
        auto slots = q.m.live_slots();
        std::shuffle(slots.begin(), slots.end(), rng);
        bool ok = true;
        for (int s : slots) {
            if (q.m.alpha(s) != RotationMap::kOpen) continue;
            std::vector<int> cands;
            for (int t : slots)
                if (q.m.alpha(t) == RotationMap::kOpen &&
                    q.m.vertex_color(RotationMap::vertex_of(t)) ==
                        -q.m.vertex_color(RotationMap::vertex_of(s)))
                    cands.push_back(t);
            if (cands.empty()) {
                ok = false;
                break;
            }
            q.m.connect(s, cands[rng() % cands.size()]);
        }
        if (ok && q.m.closed() && q.m.connected()) break;
    }
    auto slots = q.m.live_slots();
    int r = slots[rng() % slots.size()];
    q.root_s1 = r;
    q.root_s2 = q.m.alpha(r);
    int melons = (int)(rng() % (max_melons + 1));
    for (int i = 0; i < melons; ++i) {
        auto ls = q.m.live_slots();
        map_insert_melon(q, ls[rng() % ls.size()]);
    }
    int chains = (int)(rng() % (max_chains + 1));
    for (int i = 0; i < chains; ++i) {
        auto ls = q.m.live_slots();
        int len = 1 + (int)(rng() % max_chain_len);
        std::vector<MapDipoleKind> word;
        for (int l = 0; l < len; ++l)
            word.push_back(rng() % 2 ? MapDipoleKind::O : MapDipoleKind::U);
        try {
            map_insert_chain(q, ls[rng() % ls.size()], word);
        } catch (const std::domain_error&) {
            break;
        }
    }
    return q;
}

MapGraph sample_melonic_map(std::mt19937& rng, int n_melons) {
    MapGraph q;
    auto [w, b] = build_map_melon(q.m);
    q.m.connect(w, b);
    q.root_s1 = w;
    q.root_s2 = b;
    for (int i = 1; i < n_melons; ++i) {
        auto ls = q.m.live_slots();
        map_insert_melon(q, ls[rng() % ls.size()]);
    }
    return q;
}

} // namespace wb
