#include "symfun/symfunc.hpp"

#include <algorithm>

namespace wb {

template <typename C>
XPoly<C> m_to_x(const Partition& lam, unsigned nvars) {
    XPoly<C> r;
    if (lam.length() > nvars) return r; // m_lambda vanishes with too few variables
    XMono e(nvars, 0);
    for (unsigned i = 0; i < lam.length(); ++i) e[i] = (uint8_t)lam.parts()[i];
    std::sort(e.begin(), e.end());
    do {
        r[e] = C(1);
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

template <typename C>
XPoly<C> p_to_x(unsigned k, unsigned nvars) {
    XPoly<C> r;
    for (unsigned i = 0; i < nvars; ++i) {
        XMono e(nvars, 0);
        e[i] = (uint8_t)k;
        r[e] = C(1);
    }
    return r;
}

template <typename C>
std::map<Partition, C> x_to_m(const XPoly<C>& f) {
    // coefficient of m_lambda = coefficient of the representative monomial
    // x1^l1 x2^l2 ... with decreasing exponents
    std::map<Partition, C> out;
    for (auto& [e, c] : f) {
        if (!std::is_sorted(e.begin(), e.end(), std::greater<uint8_t>())) continue;
        std::vector<unsigned> parts;
        for (uint8_t x : e)
            if (x) parts.push_back(x);
        out[Partition(parts)] = c;
    }
    return out;
}

SymPoly<Rational> schur_in_powersums(const Partition& lam) {
    SymPoly<Rational> out;
    out.basis = SymBasis::PowerSum;
    unsigned n = lam.size();
    for (const Partition& mu : partitions_of(n)) {
        Integer chi = mn_character(lam, mu);
        if (chi == 0) continue;
        out.terms[mu] = Rational(chi) / Rational(z_lambda(mu));
    }
    return out;
}

template <typename C>
SymPoly<C> powersum_to_monomial(const SymPoly<C>& f, unsigned degree) {
    SymPoly<C> out;
    out.basis = SymBasis::Monomial;
    unsigned nv = std::max(degree, 1u);
    for (auto& [mu, coef] : f.terms) {
        XPoly<C> prod;
        prod[XMono(nv, 0)] = C(1);
        for (unsigned k : mu.parts()) prod = x_mul(prod, p_to_x<C>(k, nv));
        for (auto& [part, c] : x_to_m(prod)) out.add(part, coef * c);
    }
    return out;
}

namespace {

// Integer matrix of p_mu over m_lambda at fixed degree, cached.
const std::vector<std::vector<Rational>>& p_to_m_matrix(unsigned n, const std::vector<Partition>& parts) {
    static std::map<unsigned, std::vector<std::vector<Rational>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    size_t d = parts.size();
    std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d, Rational(0)));
    for (size_t i = 0; i < d; ++i) {
        SymPoly<Rational> p;
        p.terms[parts[i]] = Rational(1);
        auto m = powersum_to_monomial(p, n);
        for (size_t j = 0; j < d; ++j) {
            auto jt = m.terms.find(parts[j]);
            if (jt != m.terms.end()) M[i][j] = jt->second;
        }
    }
    return cache.emplace(n, std::move(M)).first->second;
}

} // namespace

template <typename C>
SymPoly<C> monomial_to_powersum(const SymPoly<C>& f, unsigned degree) {
    // Solve sum_mu c_mu (p_mu in m) = f over the degree-n window.
    auto parts = partitions_of(degree);
    size_t d = parts.size();
    auto M = p_to_m_matrix(degree, parts); // copy: elimination is destructive
    std::vector<C> rhs(d, C(0));
    for (size_t j = 0; j < d; ++j) {
        auto it = f.terms.find(parts[j]);
        if (it != f.terms.end()) rhs[j] = it->second;
    }
    // Gaussian elimination on M^T c = rhs with exact pivots.
    std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) A[i][j] = M[j][i];
    std::vector<size_t> perm(d);
    for (size_t col = 0, row = 0; col < d && row < d; ++col, ++row) {
        size_t piv = row;
        while (piv < d && is_zero(A[piv][col])) ++piv;
        if (piv == d) throw std::logic_error("monomial_to_powersum: singular basis matrix");
        std::swap(A[piv], A[row]);
        std::swap(rhs[piv], rhs[row]);
        for (size_t r = row + 1; r < d; ++r) {
            if (is_zero(A[r][col])) continue;
            Rational factor = A[r][col] / A[row][col];
            for (size_t cc = col; cc < d; ++cc) A[r][cc] -= factor * A[row][cc];
            rhs[r] -= rhs[row] * C(factor);
        }
    }
    std::vector<C> sol(d, C(0));
    for (size_t r = d; r-- > 0;) {
        C acc = rhs[r];
        for (size_t cc = r + 1; cc < d; ++cc) acc -= sol[cc] * C(A[r][cc]);
        sol[r] = acc * C(Rational(1) / A[r][r]);
    }
    SymPoly<C> out;
    out.basis = SymBasis::PowerSum;
    for (size_t i = 0; i < d; ++i)
        if (!(sol[i] == C(0))) out.terms[parts[i]] = sol[i];
    return out;
}

BRat hall_pairing_b(const SymPoly<BRat>& f, const SymPoly<BRat>& g) {
    BRat acc(0);
    BRat one_plus_b = BRat(1) + BRat::b();
    for (auto& [lam, cf] : f.terms) {
        auto it = g.terms.find(lam);
        if (it == g.terms.end()) continue;
        BRat w(Rational(z_lambda(lam)));
        for (unsigned i = 0; i < lam.length(); ++i) w *= one_plus_b;
        acc += cf * it->second * w;
    }
    return acc;
}

template <typename C>
SymPoly<C> m_multiply(const SymPoly<C>& a, unsigned dega, const SymPoly<C>& b, unsigned degb) {
    unsigned nv = std::max(dega + degb, 1u);
    XPoly<C> xa, xb;
    xa[XMono(nv, 0)] = C(0);
    xa.clear();
    for (auto& [p, c] : a.terms)
        for (auto& [e, u] : m_to_x<C>(p, nv)) {
            auto it = xa.find(e);
            if (it == xa.end())
                xa[e] = c * u;
            else
                it->second += c * u;
        }
    for (auto& [p, c] : b.terms)
        for (auto& [e, u] : m_to_x<C>(p, nv)) {
            auto it = xb.find(e);
            if (it == xb.end())
                xb[e] = c * u;
            else
                it->second += c * u;
        }
    auto prod = x_mul(xa, xb);
    SymPoly<C> out;
    out.basis = SymBasis::Monomial;
    for (auto& [p, c] : x_to_m(prod)) out.add(p, c);
    return out;
}

template XPoly<Rational> m_to_x<Rational>(const Partition&, unsigned);
template XPoly<BRat> m_to_x<BRat>(const Partition&, unsigned);
template XPoly<Rational> p_to_x<Rational>(unsigned, unsigned);
template XPoly<BRat> p_to_x<BRat>(unsigned, unsigned);
template std::map<Partition, Rational> x_to_m<Rational>(const XPoly<Rational>&);
template std::map<Partition, BRat> x_to_m<BRat>(const XPoly<BRat>&);
template SymPoly<Rational> powersum_to_monomial<Rational>(const SymPoly<Rational>&, unsigned);
template SymPoly<BRat> powersum_to_monomial<BRat>(const SymPoly<BRat>&, unsigned);
template SymPoly<Rational> monomial_to_powersum<Rational>(const SymPoly<Rational>&, unsigned);
template SymPoly<BRat> monomial_to_powersum<BRat>(const SymPoly<BRat>&, unsigned);
template SymPoly<Rational> m_multiply<Rational>(const SymPoly<Rational>&, unsigned, const SymPoly<Rational>&, unsigned);
template SymPoly<BRat> m_multiply<BRat>(const SymPoly<BRat>&, unsigned, const SymPoly<BRat>&, unsigned);

} // namespace wb
