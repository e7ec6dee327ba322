#include "symfun/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace wb {

namespace {

// beta-set with exactly m beads: beta_i = lam_i + (m-1-i), i = 0..m-1
std::vector<long> beta_set(const std::vector<unsigned>& lam, unsigned m) {
    std::vector<long> b(m);
    for (unsigned i = 0; i < m; ++i) {
        unsigned li = i < lam.size() ? lam[i] : 0;
        b[i] = (long)li + (long)(m - 1 - i);
    }
    return b;
}

std::vector<unsigned> partition_from_beta(std::vector<long> b) {
    std::sort(b.begin(), b.end(), std::greater<long>());
    unsigned m = (unsigned)b.size();
    std::vector<unsigned> lam;
    for (unsigned i = 0; i < m; ++i) {
        long part = b[i] - (long)(m - 1 - i);
        if (part < 0) throw std::logic_error("partition_from_beta: invalid beta set");
        if (part > 0) lam.push_back((unsigned)part);
    }
    return lam;
}

} // namespace

std::vector<std::pair<Partition, unsigned>> border_strip_removals(const Partition& lam, unsigned len) {
    std::vector<std::pair<Partition, unsigned>> out;
    if (len == 0) return out;
    unsigned m = std::max<unsigned>(lam.length(), 1);
    auto b = beta_set(lam.parts(), m);
    for (unsigned i = 0; i < m; ++i) {
        long target = b[i] - (long)len;
        if (target < 0) continue;
        if (std::find(b.begin(), b.end(), target) != b.end()) continue;
        unsigned height = 0;
        for (long x : b)
            if (x > target && x < b[i]) ++height;
        auto nb = b;
        nb[i] = target;
        out.emplace_back(Partition(partition_from_beta(std::move(nb))), height);
    }
    return out;
}

CharacterTable& CharacterTable::instance() {
    static CharacterTable t;
    return t;
}

Integer CharacterTable::chi(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw std::invalid_argument("mn_character: |lambda| != |mu|");
    return chi_impl(lam.parts(), mu.parts());
}

Integer CharacterTable::chi_impl(const std::vector<unsigned>& lam, const std::vector<unsigned>& mu) {
    if (mu.empty()) return Integer(1); // chi^empty_empty
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find({lam, mu});
        if (it != memo_.end()) return it->second;
    }
    std::vector<unsigned> rest(mu.begin() + 1, mu.end());
    Integer acc(0);
    for (auto& [shape, height] : border_strip_removals(Partition(lam), mu[0])) {
        Integer term = chi_impl(shape.parts(), rest);
        if (height % 2) term = -term;
        acc += term;
    }
    {
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(std::make_pair(lam, mu), acc);
    }
    return acc;
}

Integer CharacterTable::dimension(const Partition& lam) {
    std::vector<unsigned> ones(lam.size(), 1);
    return chi(lam, Partition(ones));
}

Integer mn_character(const Partition& lam, const Partition& mu) {
    return CharacterTable::instance().chi(lam, mu);
}

Integer dimension_sym(const Partition& lam) { return CharacterTable::instance().dimension(lam); }

} // namespace wb
