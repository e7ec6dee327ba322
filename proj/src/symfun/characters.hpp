#pragma once

#include "symfun/partition.hpp"

#include <map>
#include <mutex>

namespace wb {

// Irreducible symmetric-group characters chi^lambda_mu via recursive border
// strip removal. Values are exact integers; the (lambda, mu) table is
// memoized behind a mutex (concurrent reads re-enter the lock only briefly).
class CharacterTable {
public:
    static CharacterTable& instance();

    Integer chi(const Partition& lam, const Partition& mu);
    Integer dimension(const Partition& lam);

private:
    CharacterTable() = default;
    Integer chi_impl(const std::vector<unsigned>& lam, const std::vector<unsigned>& mu);

    std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, Integer> memo_;
    std::mutex mu_;
};

// Convenience wrappers.
Integer mn_character(const Partition& lam, const Partition& mu);
Integer dimension_sym(const Partition& lam);

// All removals of a border strip of length `len` from `lam`; returns the
// remaining partition and the strip height.
std::vector<std::pair<Partition, unsigned>> border_strip_removals(const Partition& lam, unsigned len);

} // namespace wb
