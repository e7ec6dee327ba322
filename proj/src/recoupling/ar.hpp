#pragma once

#include "recoupling/wigner.hpp"

#include <string>
#include <vector>

namespace wb {

// Checks on the 3j-built classical solution and its heat-kernel
// regularization: the diagonal cubic condition, the square relation between
// the quadratic and cubic coefficients, the normalization N_eps with its
// truncation tail, and the first-order vanishing of the completeness defect.
struct ARReport {
    bool cubic_condition_exact = false;   // T^{-m1 0 -m3} = c3 (-1)^{-m3} delta
    bool square_relation_exact = false;   // c1 = (c3)^2
    double n_eps = 0;                     // normalization at the given eps
    double tail_bound = 0;                // geometric bound on the dropped tail
    bool tail_ok = false;                 // tail below tolerance
    std::vector<double> eps_values;       // the sweep
    std::vector<double> deviation;        // D(eps) completeness defect
    bool linear_decay = false;            // D(eps/2) <= 0.6 D(eps) along the sweep
    std::vector<std::string> notes;
};

ARReport ar_coefficients(Spin jmax, double eps, double mu, double lambda,
                         const std::vector<double>& eps_sweep = {0.1, 0.05, 0.025});

} // namespace wb
