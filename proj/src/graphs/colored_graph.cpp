#include "graphs/colored_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wb {

int ColoredGraph::vertex_count() const {
    int n = 0;
    for (int v = 0; v < raw_size(); ++v)
        if (!dead_[v]) ++n;
    return n;
}

int ColoredGraph::add_vertex(int8_t color) {
    adj_.push_back(std::vector<int>(d_ + 1, kOpen));
    vcolor_.push_back(color);
    dead_.push_back(0);
    return raw_size() - 1;
}

void ColoredGraph::kill_vertex(int v) {
    dead_[v] = 1;
    for (auto& x : adj_[v]) x = kOpen;
}

void ColoredGraph::revive_vertex(int v, int8_t color) {
    if (v < 0 || v >= raw_size() || !dead_[v]) throw std::logic_error("revive_vertex: id not dead");
    dead_[v] = 0;
    vcolor_[v] = color;
    for (auto& x : adj_[v]) x = kOpen;
}

void ColoredGraph::connect(int u, int v, int c) {
    if (u == v) throw std::invalid_argument("ColoredGraph::connect: proper coloring forbids loops");
    adj_[u][c] = v;
    adj_[v][c] = u;
}

std::vector<int> ColoredGraph::live_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < raw_size(); ++v)
        if (!dead_[v]) out.push_back(v);
    return out;
}

std::vector<int> ColoredGraph::open_slots(int c) const {
    std::vector<int> out;
    for (int v = 0; v < raw_size(); ++v)
        if (!dead_[v] && adj_[v][c] == kOpen) out.push_back(v);
    return out;
}

bool ColoredGraph::closed() const {
    for (int v = 0; v < raw_size(); ++v) {
        if (dead_[v]) continue;
        for (int c = 0; c <= d_; ++c)
            if (adj_[v][c] == kOpen) return false;
    }
    return true;
}

bool ColoredGraph::connected() const {
    auto live = live_vertices();
    if (live.empty()) return true;
    std::set<int> seen{live[0]};
    std::vector<int> stack{live[0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c = 0; c <= d_; ++c) {
            int u = adj_[v][c];
            if (u >= 0 && !seen.count(u)) {
                seen.insert(u);
                stack.push_back(u);
            }
        }
    }
    return (int)seen.size() == (int)live.size();
}

bool ColoredGraph::properly_colored(std::string* why) const {
    for (int v = 0; v < raw_size(); ++v) {
        if (dead_[v]) continue;
        for (int c = 0; c <= d_; ++c) {
            int u = adj_[v][c];
            if (u == kOpen) continue;
            if (u == v || !alive(u) || adj_[u][c] != v) {
                if (why) {
                    std::ostringstream os;
                    os << "bad edge at vertex " << v << " color " << c;
                    *why = os.str();
                }
                return false;
            }
        }
    }
    return true;
}

bool ColoredGraph::bipartite_ok() const {
    for (int v = 0; v < raw_size(); ++v) {
        if (dead_[v] || vcolor_[v] == 0) continue;
        // colors 1,2 must join opposite vertex colors; color 0 likewise
        for (int c : {0, 1, 2}) {
            int u = adj_[v][c];
            if (u >= 0 && vcolor_[u] != -vcolor_[v]) return false;
        }
    }
    return true;
}

std::vector<unsigned> ColoredGraph::bicolored_faces(int i, int j) const {
    if (i < 0 || j < 0 || i > d_ || j > d_ || i == j)
        throw std::invalid_argument("bicolored_faces: invalid colors");
    std::vector<unsigned> lengths;
    std::set<std::pair<int, int>> visited; // (vertex, next color)
    for (int v0 = 0; v0 < raw_size(); ++v0) {
        if (dead_[v0]) continue;
        if (visited.count({v0, i})) continue;
        unsigned len = 0;
        int v = v0, c = i;
        while (true) {
            if (visited.count({v, c})) break;
            int u = adj_[v][c];
            if (u == kOpen) throw std::domain_error("bicolored_faces: open slot in face walk");
            visited.insert({v, c});
            visited.insert({u, c}); // the reverse traversal of the same cycle
            ++len;
            v = u;
            c = (c == i) ? j : i;
            if (v == v0 && c == i) break;
        }
        lengths.push_back(len);
    }
    return lengths;
}

Rational ColoredGraph::gurau_degree() const {
    if (!closed()) throw std::domain_error("gurau_degree: graph must be closed");
    if (!connected()) throw std::domain_error("gurau_degree: graph must be connected");
    int V = vertex_count();
    long E = (long)V * (d_ + 1) / 2;
    // cycles over colors 0..d, canonicalized: fix first = 0, quotient by reversal
    std::vector<int> rest;
    for (int c = 1; c <= d_; ++c) rest.push_back(c);
    Rational omega(0);
    std::sort(rest.begin(), rest.end());
    do {
        // reversal of (0, r1, ..., rd) is (0, rd, ..., r1); keep r1 < rd
        if (rest.front() > rest.back()) continue;
        std::vector<int> cyc{0};
        for (int c : rest) cyc.push_back(c);
        long F = 0;
        for (size_t k = 0; k < cyc.size(); ++k) F += face_count(cyc[k], cyc[(k + 1) % cyc.size()]);
        // 2 - 2 k_tau = V - E + F_tau
        Rational k_tau = (Rational(2) - Rational(V) + Rational(E) - Rational(F)) / 2;
        if (sgn(k_tau) < 0) throw std::logic_error("gurau_degree: negative jacket genus");
        omega += k_tau;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return omega;
}

std::string ColoredGraph::canonical_key(const std::vector<int>& pinned) const {
    auto live = live_vertices();
    int n = (int)live.size();
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[live[i]] = i;

    // initial classes: vertex color + pinned marks
    std::vector<long> cls(n);
    for (int i = 0; i < n; ++i) {
        long c = vcolor_[live[i]] + 2;
        for (size_t p = 0; p < pinned.size(); ++p)
            if (pinned[p] == live[i]) c += 16 * (long)(p + 1);
        cls[i] = c;
    }
    auto refine = [&](std::vector<long> classes) {
        while (true) {
            std::vector<std::vector<long>> sig(n);
            for (int i = 0; i < n; ++i) {
                sig[i].push_back(classes[i]);
                for (int c = 0; c <= d_; ++c) {
                    int u = adj_[live[i]][c];
                    sig[i].push_back(u == kOpen ? -1 : classes[idx[u]]);
                }
            }
            std::vector<std::vector<long>> sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            std::vector<long> next(n);
            for (int i = 0; i < n; ++i)
                next[i] = std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin();
            if (next == classes) return classes;
            classes = next;
        }
    };
    // canonical string from a discrete coloring
    auto emit = [&](const std::vector<long>& classes) {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return classes[a] < classes[b]; });
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        std::ostringstream os;
        for (int i = 0; i < n; ++i) {
            int v = live[order[i]];
            os << "|" << (int)vcolor_[v];
            for (size_t p = 0; p < pinned.size(); ++p)
                if (pinned[p] == v) os << "r" << p;
            for (int c = 0; c <= d_; ++c) {
                int u = adj_[v][c];
                os << "," << (u == kOpen ? -1 : pos[idx[u]]);
            }
        }
        return os.str();
    };
    // individualization-refinement; instances are tiny so plain backtracking
    std::string best;
    auto rec = [&](auto&& self, std::vector<long> classes) -> void {
        classes = refine(classes);
        // find smallest non-singleton class
        std::map<long, std::vector<int>> groups;
        for (int i = 0; i < n; ++i) groups[classes[i]].push_back(i);
        const std::vector<int>* cell = nullptr;
        for (auto& [c, members] : groups)
            if (members.size() > 1) {
                cell = &members;
                break;
            }
        if (!cell) {
            std::string key = emit(classes);
            if (best.empty() || key < best) best = key;
            return;
        }
        for (int i : *cell) {
            auto next = classes;
            next[i] = -(long)(i + 1000000); // individualize
            self(self, std::move(next));
        }
    };
    rec(rec, cls);
    return best;
}

Rational bubble_optimal_scaling(const ColoredGraph& bubble) {
    if (bubble.rank() != 3) throw std::invalid_argument("bubble_optimal_scaling: expected colors 1..3");
    for (int v : bubble.live_vertices())
        for (int c = 1; c <= 3; ++c)
            if (bubble.partner(v, c) == ColoredGraph::kOpen)
                throw std::invalid_argument("bubble_optimal_scaling: bubble has open colored slot");
    if (!bubble.connected()) throw std::invalid_argument("bubble_optimal_scaling: bubble not connected");
    long F = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) F += bubble.face_count(i, j);
    return rat(3, 2) - Rational(F) / 2;
}

} // namespace wb
