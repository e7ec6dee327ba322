#pragma once

#include "core/brat.hpp"
#include "symfun/characters.hpp"
#include "symfun/partition.hpp"

#include <cstdint>
#include <map>

namespace wb {

enum class SymBasis { PowerSum, Monomial, Schur };

// Finitely supported expansion over a partition-indexed basis.
template <typename C>
struct SymPoly {
    SymBasis basis = SymBasis::PowerSum;
    std::map<Partition, C> terms;

    void add(const Partition& p, const C& c) {
        auto it = terms.find(p);
        if (it == terms.end()) {
            if (!(c == C(0))) terms[p] = c;
        } else {
            it->second += c;
            if (it->second == C(0)) terms.erase(it);
        }
    }
    bool operator==(const SymPoly& o) const { return basis == o.basis && terms == o.terms; }
};

// ---- dense exponent-vector backend (N variables) ----------------------

using XMono = std::vector<uint8_t>;

template <typename C>
using XPoly = std::map<XMono, C>;

template <typename C>
XPoly<C> x_mul(const XPoly<C>& a, const XPoly<C>& b) {
    XPoly<C> r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            XMono e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto it = r.find(e);
            if (it == r.end()) {
                C v = ca * cb;
                if (!(v == C(0))) r.emplace(std::move(e), std::move(v));
            } else {
                it->second += ca * cb;
                if (it->second == C(0)) r.erase(it);
            }
        }
    return r;
}

// Monomial symmetric polynomial m_lambda in nvars variables.
template <typename C>
XPoly<C> m_to_x(const Partition& lam, unsigned nvars);

// Power sum p_k in nvars variables.
template <typename C>
XPoly<C> p_to_x(unsigned k, unsigned nvars);

// Extract monomial-basis coefficients (valid when nvars >= degree).
template <typename C>
std::map<Partition, C> x_to_m(const XPoly<C>& f);

// ---- basis conversions -------------------------------------------------

// chi^lambda_mu / z_mu expansion of the Schur function.
SymPoly<Rational> schur_in_powersums(const Partition& lam);

template <typename C>
SymPoly<C> powersum_to_monomial(const SymPoly<C>& f, unsigned degree);

template <typename C>
SymPoly<C> monomial_to_powersum(const SymPoly<C>& f, unsigned degree);

// b-deformed Hall pairing <p_lam | p_mu>_b = delta (1+b)^len z_lam, applied
// to two power-sum expansions.
BRat hall_pairing_b(const SymPoly<BRat>& f, const SymPoly<BRat>& g);

// Product in the monomial basis (inputs homogeneous of the given degrees).
template <typename C>
SymPoly<C> m_multiply(const SymPoly<C>& a, unsigned dega, const SymPoly<C>& b, unsigned degb);

extern template XPoly<Rational> m_to_x<Rational>(const Partition&, unsigned);
extern template XPoly<BRat> m_to_x<BRat>(const Partition&, unsigned);
extern template SymPoly<Rational> powersum_to_monomial<Rational>(const SymPoly<Rational>&, unsigned);
extern template SymPoly<BRat> powersum_to_monomial<BRat>(const SymPoly<BRat>&, unsigned);
extern template SymPoly<Rational> monomial_to_powersum<Rational>(const SymPoly<Rational>&, unsigned);
extern template SymPoly<BRat> monomial_to_powersum<BRat>(const SymPoly<BRat>&, unsigned);

} // namespace wb
