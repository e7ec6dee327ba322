#include "symfun/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wb {

void Partition::validate() const {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("Partition: zero part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

unsigned Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::conjugate() const {
    std::vector<unsigned> c;
    if (parts_.empty()) return Partition();
    c.resize(parts_[0], 0);
    for (unsigned p : parts_)
        for (unsigned j = 0; j < p; ++j) c[j]++;
    return Partition(std::move(c));
}

unsigned Partition::multiplicity(unsigned k) const {
    return (unsigned)std::count(parts_.begin(), parts_.end(), k);
}

unsigned Partition::leg(unsigned r, unsigned c) const {
    unsigned l = 0;
    for (unsigned i = r + 1; i < parts_.size() && parts_[i] > c; ++i) ++l;
    return l;
}

unsigned Partition::diag() const {
    unsigned d = 0;
    while (d < parts_.size() && parts_[d] >= d + 1) ++d;
    return d;
}

std::pair<std::vector<unsigned>, std::vector<unsigned>> Partition::frobenius() const {
    unsigned d = diag();
    Partition conj = conjugate();
    std::vector<unsigned> alpha(d), beta(d);
    for (unsigned i = 0; i < d; ++i) {
        alpha[i] = parts_[i] - (i + 1);
        beta[i] = conj.parts_[i] - (i + 1);
    }
    return {alpha, beta};
}

Partition Partition::from_frobenius(const std::vector<unsigned>& alpha,
                                    const std::vector<unsigned>& beta) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("from_frobenius: arm/leg length mismatch");
    unsigned d = (unsigned)alpha.size();
    for (unsigned i = 1; i < d; ++i)
        if (alpha[i] >= alpha[i - 1] || beta[i] >= beta[i - 1])
            throw std::invalid_argument("from_frobenius: coordinates must strictly decrease");
    std::vector<unsigned> rows;
    for (unsigned i = 0; i < d; ++i) rows.push_back(alpha[i] + i + 1);
    // rows below the diagonal come from beta, via the conjugate
    unsigned max_extra = d ? beta[0] : 0;
    for (unsigned r = d; r < d + max_extra; ++r) {
        unsigned len = 0;
        for (unsigned i = 0; i < d; ++i)
            if (beta[i] + i + 1 > r) ++len;
        if (len == 0) break;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

bool Partition::dominated_by(const Partition& other) const {
    unsigned a = 0, b = 0;
    unsigned n = std::max(length(), other.length());
    for (unsigned i = 0; i < n; ++i) {
        a += part(i);
        b += other.part(i);
        if (a > b) return false;
    }
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    // descending recursion produces reverse lexicographic order directly
    auto rec = [&](auto&& self, unsigned rest, unsigned maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

Integer z_lambda(const Partition& lam) {
    Integer z(1);
    unsigned i = 0;
    const auto& parts = lam.parts();
    while (i < parts.size()) {
        unsigned j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        unsigned m = j - i;
        for (unsigned k = 0; k < m; ++k) z *= parts[i];
        z *= factorial(m);
        i = j;
    }
    return z;
}

} // namespace wb
