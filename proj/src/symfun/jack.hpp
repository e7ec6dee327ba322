#pragma once

#include "symfun/symfunc.hpp"

namespace wb {

// Monic (P-normalized) Jack polynomial: P_lambda = m_lambda + lower terms in
// dominance order, orthogonal for <p_lam|p_mu>_b = delta (1+b)^len z_lam.
// Coefficients live in Q(b).
SymPoly<BRat> jack_in_monomials(const Partition& lam);
SymPoly<BRat> jack_in_powersums(const Partition& lam);

// Deformed hook products: h_b = (1+b)a + l + 1, h'_b = (1+b)a + l + 1 + b.
BPoly hook_product_b(const Partition& lam);
BPoly hook_product_b_prime(const Partition& lam);

// Squared norm of the monic Jack polynomial: H'_b / H_b. The integral form
// J_lambda = H_b * P_lambda has norm H_b * H'_b.
BRat jack_norm(const Partition& lam);

// Principal specialization p_k -> u for all k, as a polynomial in u over Q(b).
Poly1<BRat> jack_principal(const Partition& lam);

// Laplace-Beltrami operator (1+b) sum x_i^2 d_i^2 + 2 sum_{i!=j}
// x_i x_j/(x_i-x_j) d_i applied to a symmetric polynomial given in the
// monomial basis, in `nvars` variables.
SymPoly<BRat> laplace_beltrami(const SymPoly<BRat>& f_m, unsigned degree);

// Checks D P_lambda = e P_lambda for a scalar e; returns the eigenvalue.
struct LBReport {
    bool is_eigenvector;
    BRat eigenvalue;
};
LBReport laplace_beltrami_check(const Partition& lam);

} // namespace wb
