#pragma once

#include "recoupling/wigner.hpp"

#include <string>
#include <vector>

namespace wb {

struct IdentityInstance {
    std::string identity;
    std::string instance;
    bool exact;      // verified in exact arithmetic
    double residual; // float residual (0 when exact)
    bool pass;
};

struct IdentityReport {
    std::vector<IdentityInstance> instances;
    bool all_pass() const {
        for (auto& i : instances)
            if (!i.pass) return false;
        return true;
    }
    unsigned failures() const {
        unsigned f = 0;
        for (auto& i : instances)
            if (!i.pass) ++f;
        return f;
    }
    unsigned exact_count() const {
        unsigned f = 0;
        for (auto& i : instances)
            if (i.exact) ++f;
        return f;
    }
};

// Runs the recoupling identity suite with all free spins <= jmax:
// both 3j orthonormality relations, the m3 = 0 alternating sum, the j2 = 0
// evaluation, the 3j/6j contraction, the 6j with one vanishing argument,
// permutation/sign symmetries, and definition-vs-closed-form agreement for
// the 6j up to spin 3/2. Identities are checked exactly; `tol` only guards
// the reported float residuals.
IdentityReport identity_suite(Spin jmax, double tol = 1e-12);

} // namespace wb
