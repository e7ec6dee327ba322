#include "symfun/jack.hpp"

#include <mutex>

namespace wb {

namespace {

std::map<Partition, SymPoly<BRat>> g_jack_cache;
std::mutex g_jack_mutex;

} // namespace

SymPoly<BRat> jack_in_monomials(const Partition& lam) {
    {
        std::lock_guard<std::mutex> lock(g_jack_mutex);
        auto it = g_jack_cache.find(lam);
        if (it != g_jack_cache.end()) return it->second;
    }
    unsigned n = lam.size();
    // partitions_of returns reverse-lex order, a linear extension of dominance
    // with [n] maximal; build from the dominance-minimal end upward.
    auto parts = partitions_of(n);
    std::vector<Partition> order(parts.rbegin(), parts.rend());
    std::vector<SymPoly<BRat>> built;   // in m-basis
    std::vector<SymPoly<BRat>> built_p; // same, in p-basis
    std::vector<BRat> norms;
    SymPoly<BRat> result;
    for (const Partition& nu : order) {
        SymPoly<BRat> cur;
        cur.basis = SymBasis::Monomial;
        cur.terms[nu] = BRat(1);
        SymPoly<BRat> cur_p = monomial_to_powersum(cur, n);
        for (size_t k = 0; k < built.size(); ++k) {
            BRat proj = hall_pairing_b(cur_p, built_p[k]) / norms[k];
            if (proj.is_zero()) continue;
            for (auto& [mu, c] : built[k].terms) cur.add(mu, -(proj * c));
            for (auto& [mu, c] : built_p[k].terms) cur_p.add(mu, -(proj * c));
        }
        if (nu == lam) {
            result = cur;
            break;
        }
        norms.push_back(hall_pairing_b(cur_p, cur_p));
        built.push_back(std::move(cur));
        built_p.push_back(std::move(cur_p));
    }
    std::lock_guard<std::mutex> lock(g_jack_mutex);
    g_jack_cache.emplace(lam, result);
    return result;
}

SymPoly<BRat> jack_in_powersums(const Partition& lam) {
    return monomial_to_powersum(jack_in_monomials(lam), lam.size());
}

BPoly hook_product_b(const Partition& lam) {
    BPoly prod(1);
    BPoly alpha = BPoly::var() + BPoly(1); // 1+b
    for (unsigned r = 0; r < lam.length(); ++r)
        for (unsigned c = 0; c < lam.parts()[r]; ++c) {
            BPoly h = alpha * BPoly((int)lam.arm(r, c)) + BPoly((int)lam.leg(r, c) + 1);
            prod *= h;
        }
    return prod;
}

BPoly hook_product_b_prime(const Partition& lam) {
    BPoly prod(1);
    BPoly alpha = BPoly::var() + BPoly(1);
    for (unsigned r = 0; r < lam.length(); ++r)
        for (unsigned c = 0; c < lam.parts()[r]; ++c) {
            BPoly h = alpha * BPoly((int)lam.arm(r, c)) + BPoly((int)lam.leg(r, c)) + alpha;
            prod *= h;
        }
    return prod;
}

BRat jack_norm(const Partition& lam) {
    auto p = jack_in_powersums(lam);
    return hall_pairing_b(p, p);
}

Poly1<BRat> jack_principal(const Partition& lam) {
    Poly1<BRat> out;
    for (auto& [mu, c] : jack_in_powersums(lam).terms) out += Poly1<BRat>::term(mu.length(), c);
    return out;
}

namespace {

using BX = XPoly<BRat>;

BX x_derive(const BX& f, unsigned i) {
    BX r;
    for (auto& [e, c] : f) {
        if (e[i] == 0) continue;
        XMono d = e;
        d[i]--;
        r[d] = c * BRat(Rational((int)e[i]));
    }
    return r;
}

void bx_add(BX& a, const XMono& e, const BRat& c) {
    auto it = a.find(e);
    if (it == a.end()) {
        if (!c.is_zero()) a.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

// Exact division of g by (x_i - x_j), viewing g as univariate in x_i:
// q_{k} = g_{k+1} + x_j q_{k+1} descending from the top degree. The
// remainder must vanish (g antisymmetric under i <-> j).
BX x_div_diff(const BX& g, unsigned i, unsigned j) {
    std::map<unsigned, BX> gk;
    unsigned top = 0;
    for (auto& [e, c] : g) {
        XMono rest = e;
        unsigned k = rest[i];
        rest[i] = 0;
        gk[k][rest] = c;
        top = std::max(top, k);
    }
    BX q, carry;
    for (unsigned k = top; k-- > 0;) {
        BX qk;
        auto it = gk.find(k + 1);
        if (it != gk.end()) qk = it->second;
        for (auto& [e, c] : carry) {
            XMono m = e;
            m[j] += 1;
            bx_add(qk, m, c);
        }
        for (auto& [e, c] : qk) {
            XMono m = e;
            m[i] += k;
            bx_add(q, m, c);
        }
        carry = std::move(qk);
    }
    // remainder check: g_0 + x_j q_0 == 0
    BX rem;
    auto it0 = gk.find(0);
    if (it0 != gk.end()) rem = it0->second;
    for (auto& [e, c] : carry) {
        XMono m = e;
        m[j] += 1;
        bx_add(rem, m, c);
    }
    if (!rem.empty()) throw std::logic_error("x_div_diff: input not divisible by x_i - x_j");
    return q;
}

} // namespace

SymPoly<BRat> laplace_beltrami(const SymPoly<BRat>& f_m, unsigned degree) {
    unsigned nv = std::max(degree, 1u);
    BX f;
    for (auto& [p, c] : f_m.terms)
        for (auto& [e, u] : m_to_x<BRat>(p, nv)) {
            auto it = f.find(e);
            if (it == f.end())
                f[e] = c * u;
            else
                it->second += c * u;
        }
    BRat alpha = BRat(1) + BRat::b();
    BX acc;
    // (1+b) x_i^2 d_i^2
    for (unsigned i = 0; i < nv; ++i) {
        BX d2 = x_derive(x_derive(f, i), i);
        for (auto& [e, c] : d2) {
            XMono m = e;
            m[i] += 2;
            BRat v = c * alpha;
            auto it = acc.find(m);
            if (it == acc.end())
                acc[m] = v;
            else
                it->second += v;
        }
    }
    // pair term: 2 x_i x_j (d_i f - d_j f)/(x_i - x_j) summed over i < j
    for (unsigned i = 0; i < nv; ++i)
        for (unsigned j = i + 1; j < nv; ++j) {
            BX g = x_derive(f, i);
            for (auto& [e, c] : x_derive(f, j)) bx_add(g, e, -c);
            BX q = x_div_diff(g, i, j);
            for (auto& [e, c] : q) {
                XMono m = e;
                m[i] += 1;
                m[j] += 1;
                bx_add(acc, m, c * BRat(Rational(2)));
            }
        }
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second == BRat(0))
            it = acc.erase(it);
        else
            ++it;
    }
    SymPoly<BRat> out;
    out.basis = SymBasis::Monomial;
    for (auto& [p, c] : x_to_m(acc)) out.add(p, c);
    return out;
}

LBReport laplace_beltrami_check(const Partition& lam) {
    auto P = jack_in_monomials(lam);
    auto DP = laplace_beltrami(P, lam.size());
    // eigenvalue from the leading coefficient (monic in m_lambda)
    BRat e(0);
    auto it = DP.terms.find(lam);
    if (it != DP.terms.end()) e = it->second;
    SymPoly<BRat> residual = DP;
    for (auto& [mu, c] : P.terms) residual.add(mu, -(e * c));
    return {residual.terms.empty(), e};
}

} // namespace wb
