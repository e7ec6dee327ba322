#pragma once

#include "core/brat.hpp"
#include "symfun/partition.hpp"

#include <functional>
#include <sstream>
#include <vector>

namespace wb {

// Polynomials in t with coefficients polynomial in b.
using TBPoly = Poly1<BPoly>;

// prod over boxes of (1 + t c(box)); plain content c = j - i, deformed
// content c_b = (1+b)(j-1) - (i-1) so that b = 0 recovers the plain case.
TBPoly content_product_coeff(const Partition& lam, bool deformed);

// Hypergeometric normalization d_lambda / n! carried by the principal
// specialization; the bare content product does not solve the quadratic
// relations on its own.
TBPoly content_product_coordinate(const Partition& lam, bool deformed);

struct PluckerRelation {
    Partition lambda;
    unsigned i, j; // removed hook indices, 1-based
    bool pass;
    std::string detail;
};

struct PluckerReport {
    std::vector<PluckerRelation> relations;
    bool all_pass() const {
        for (auto& r : relations)
            if (!r.pass) return false;
        return true;
    }
    unsigned failures() const {
        unsigned f = 0;
        for (auto& r : relations)
            if (!r.pass) ++f;
        return f;
    }
};

// Evaluates, for every |lambda| <= size_bound and every pair i < j <= d(lambda),
// the hook-removal relation
//   D_(a|b) D_(a_ij|b_ij) = D_(a_i|b_i) D_(a_j|b_j) - D_(a_i|b_j) D_(a_j|b_i)
// over an arbitrary commutative ring supplied through `coeff`.
template <typename C>
PluckerReport plucker_check(const std::function<C(const Partition&)>& coeff, unsigned size_bound) {
    PluckerReport rep;
    for (unsigned n = 0; n <= size_bound; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            auto [alpha, beta] = lam.frobenius();
            unsigned d = (unsigned)alpha.size();
            if (d < 2) continue;
            auto drop = [&](const std::vector<unsigned>& v, unsigned a, unsigned b) {
                std::vector<unsigned> out;
                for (unsigned k = 0; k < v.size(); ++k)
                    if (k != a && k != b) out.push_back(v[k]);
                return out;
            };
            for (unsigned i = 0; i < d; ++i)
                for (unsigned j = i + 1; j < d; ++j) {
                    Partition l_ij = Partition::from_frobenius(drop(alpha, i, j), drop(beta, i, j));
                    Partition l_i = Partition::from_frobenius(drop(alpha, i, d), drop(beta, i, d));
                    Partition l_j = Partition::from_frobenius(drop(alpha, j, d), drop(beta, j, d));
                    Partition l_i_bj = Partition::from_frobenius(drop(alpha, i, d), drop(beta, j, d));
                    Partition l_j_bi = Partition::from_frobenius(drop(alpha, j, d), drop(beta, i, d));
                    C lhs = coeff(lam) * coeff(l_ij);
                    C rhs = coeff(l_i) * coeff(l_j) - coeff(l_i_bj) * coeff(l_j_bi);
                    PluckerRelation rel;
                    rel.lambda = lam;
                    rel.i = i + 1;
                    rel.j = j + 1;
                    rel.pass = (lhs == rhs);
                    if (!rel.pass) {
                        std::ostringstream os;
                        os << "hook relation fails at lambda=" << lam.str() << " (i,j)=(" << i + 1
                           << "," << j + 1 << ")";
                        rel.detail = os.str();
                    }
                    rep.relations.push_back(std::move(rel));
                }
        }
    }
    return rep;
}

} // namespace wb
