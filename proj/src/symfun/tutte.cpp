#include "symfun/tutte.hpp"

#include <stdexcept>

namespace wb {

Integer tutte_closed_form(unsigned n) {
    Integer p3(1);
    for (unsigned i = 0; i < n; ++i) p3 *= 3;
    Integer num = 2 * p3 * catalan(n);
    Integer q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), n + 2);
    if (r != 0) throw std::logic_error("tutte_closed_form: non-integer value");
    return q;
}

namespace {

// exact division of p(x) - p(1) ... more precisely of q(x) with q(1) = 0 by (x-1)
XPoly1 divide_by_x_minus_1(const XPoly1& q) {
    // synthetic division at root 1; remainder must vanish
    int deg = q.degree();
    if (deg < 0) return XPoly1();
    std::vector<Rational> dense(deg + 1, Rational(0));
    for (auto& [e, c] : q.terms()) dense[e] = c;
    std::vector<Rational> out(deg, Rational(0));
    Rational carry(0);
    for (int k = deg; k >= 1; --k) {
        carry += dense[k];
        out[k - 1] = carry;
    }
    if (!is_zero(carry + dense[0]))
        throw std::logic_error("tutte_catalytic: division by (x-1) left a remainder");
    XPoly1 r;
    for (int k = 0; k < deg; ++k) r.set(k, out[k]);
    return r;
}

} // namespace

std::vector<XPoly1> tutte_catalytic(unsigned nmax) {
    std::vector<XPoly1> P;
    P.push_back(XPoly1(1)); // the trivial map
    XPoly1 x = XPoly1::var();
    for (unsigned n = 1; n <= nmax; ++n) {
        // join: x^2 sum_{a+b=n-1} P_a P_b
        XPoly1 join;
        for (unsigned a = 0; a < n; ++a) join += P[a] * P[n - 1 - a];
        join *= x * x;
        // cut: x (x P_{n-1}(x) - P_{n-1}(1)) / (x - 1)
        XPoly1 q = x * P[n - 1] - XPoly1(P[n - 1].eval(Rational(1)));
        XPoly1 cut = x * divide_by_x_minus_1(q);
        P.push_back(join + cut);
    }
    return P;
}

} // namespace wb
