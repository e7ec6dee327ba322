#pragma once

#include "core/rational.hpp"

#include <vector>

namespace wb {

// Weakly decreasing sequence of positive integers; the empty partition is
// allowed and has size 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<unsigned> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned size() const;               // |lambda|
    unsigned length() const { return (unsigned)parts_.size(); }
    unsigned part(unsigned i) const { return i < parts_.size() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    unsigned multiplicity(unsigned k) const;

    // arm/leg of the box at (row r, col c), 0-based
    unsigned arm(unsigned r, unsigned c) const { return parts_[r] - 1 - c; }
    unsigned leg(unsigned r, unsigned c) const;

    // d(lambda) = number of diagonal boxes; Frobenius coordinates
    // alpha_i = lambda_i - i, beta_i = lambda'_i - i (0-based i).
    unsigned diag() const;
    std::pair<std::vector<unsigned>, std::vector<unsigned>> frobenius() const;
    static Partition from_frobenius(const std::vector<unsigned>& alpha,
                                    const std::vector<unsigned>& beta);

    // true if *this <= other in dominance order (same size assumed)
    bool dominated_by(const Partition& other) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;

private:
    void validate() const;
    std::vector<unsigned> parts_;
};

// All partitions of n, each exactly once, in reverse lexicographic order
// ([n] first, [1^n] last).
std::vector<Partition> partitions_of(unsigned n);

// Centralizer size z_lambda = prod_i i^{m_i} m_i!.
Integer z_lambda(const Partition& lam);

} // namespace wb
