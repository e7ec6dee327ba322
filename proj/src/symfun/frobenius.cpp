#include "symfun/frobenius.hpp"

#include "symfun/characters.hpp"

#include <algorithm>

#include <map>
#include <stdexcept>

namespace wb {

Rational frobenius_count(unsigned k, const std::vector<Partition>& vertex_profiles,
                         const Partition& face_profile) {
    if (vertex_profiles.size() != k + 1)
        throw std::invalid_argument("frobenius_count: expected k+1 vertex profiles");
    unsigned n = face_profile.size();
    for (auto& p : vertex_profiles)
        if (p.size() != n) throw std::invalid_argument("frobenius_count: profile size mismatch");
    Rational pre = pow_rat(Rational(factorial(n)), (long)k + 1);
    pre /= Rational(z_lambda(face_profile));
    for (auto& p : vertex_profiles) pre /= Rational(z_lambda(p));
    Rational sum(0);
    for (const Partition& mu : partitions_of(n)) {
        Integer prod = mn_character(mu, face_profile);
        if (prod == 0) continue;
        bool dead = false;
        for (auto& p : vertex_profiles) {
            Integer c = mn_character(mu, p);
            if (c == 0) {
                dead = true;
                break;
            }
            prod *= c;
        }
        if (dead) continue;
        sum += Rational(prod) / pow_rat(Rational(dimension_sym(mu)), (long)k);
    }
    Rational result = pre * sum;
    if (!is_integer(result) || sgn(result) < 0)
        throw std::logic_error("frobenius_count: non-integer or negative count");
    return result;
}

Rational labeled_map_count(const Partition& lam, const Partition& nu) {
    unsigned m = lam.size();
    if (m != nu.size() || m % 2 != 0)
        throw std::invalid_argument("labeled_map_count: profiles must partition an even 2E");
    std::vector<unsigned> twos(m / 2, 2);
    return frobenius_count(1, {lam, Partition(twos)}, nu);
}

namespace {

using ProfilePair = std::pair<Partition, Partition>;

std::map<ProfilePair, Rational> g_conn_memo;

// all nonempty sub-multisets of a partition, as partitions
std::vector<Partition> sub_multisets(const Partition& p) {
    std::vector<Partition> out;
    std::vector<unsigned> parts = p.parts();
    size_t k = parts.size();
    std::vector<int> take(k, 0);
    // binary enumeration over parts, deduplicated afterwards
    std::vector<std::vector<unsigned>> seen;
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
        std::vector<unsigned> sel;
        for (size_t i = 0; i < k; ++i)
            if (mask & (1ul << i)) sel.push_back(parts[i]);
        seen.push_back(sel);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (auto& s : seen) out.emplace_back(s);
    (void)take;
    return out;
}

Partition multiset_minus(const Partition& p, const Partition& q) {
    std::vector<unsigned> rest = p.parts();
    for (unsigned v : q.parts()) {
        auto it = std::find(rest.begin(), rest.end(), v);
        if (it == rest.end()) throw std::logic_error("multiset_minus: not a sub-multiset");
        rest.erase(it);
    }
    return Partition(rest);
}

} // namespace

Rational connected_labeled_map_count(const Partition& lam, const Partition& nu) {
    if (lam.empty() && nu.empty()) return Rational(0);
    ProfilePair key{lam, nu};
    auto it = g_conn_memo.find(key);
    if (it != g_conn_memo.end()) return it->second;
    unsigned m = lam.size();
    Rational total = labeled_map_count(lam, nu);
    // subtract configurations whose marked-half-edge component is proper
    for (const Partition& lsub : sub_multisets(lam)) {
        if (lsub == lam) continue;
        unsigned msub = lsub.size();
        if (msub == 0 || msub % 2) continue;
        for (const Partition& nsub : sub_multisets(nu)) {
            if (nsub.size() != msub) continue;
            Rational c = connected_labeled_map_count(lsub, nsub);
            if (is_zero(c)) continue;
            Rational rest = labeled_map_count(multiset_minus(lam, lsub), multiset_minus(nu, nsub));
            if (is_zero(rest)) continue;
            total -= Rational(binomial(m - 1, msub - 1)) * c * rest;
        }
    }
    g_conn_memo.emplace(key, total);
    return total;
}

Integer frobenius_rooted_planar_maps(unsigned edges) {
    unsigned m = 2 * edges;
    if (edges == 0) return Integer(1); // the trivial map
    Rational total(0);
    auto profiles = partitions_of(m);
    for (const Partition& lam : profiles)
        for (const Partition& nu : profiles) {
            // connected + planar: V - E + F = 2
            if (lam.length() + nu.length() != edges + 2) continue;
            total += connected_labeled_map_count(lam, nu);
        }
    total /= Rational(factorial(m - 1));
    if (!is_integer(total)) throw std::logic_error("frobenius_rooted_planar_maps: non-integer");
    return total.get_num();
}

} // namespace wb
