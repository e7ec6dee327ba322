#pragma once

#include "core/rational.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace wb {

// Sparse univariate polynomial over a commutative ring R. Zero coefficients
// are never stored. The variable name only matters for printing.
template <typename R>
class Poly1 {
public:
    Poly1() = default;
    Poly1(int c) { set(0, R(c)); }
    explicit Poly1(const R& c) { set(0, c); }

    static Poly1 var(unsigned exp = 1) {
        Poly1 p;
        p.set(exp, R(1));
        return p;
    }
    static Poly1 term(unsigned exp, const R& c) {
        Poly1 p;
        p.set(exp, c);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }
    int degree() const { return coeffs_.empty() ? -1 : (int)coeffs_.rbegin()->first; }

    R coeff(unsigned e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? R(0) : it->second;
    }
    R constant() const { return coeff(0); }
    const R& leading() const { return coeffs_.rbegin()->second; }

    void set(unsigned e, const R& c) {
        if (c == R(0))
            coeffs_.erase(e);
        else
            coeffs_[e] = c;
    }

    const std::map<unsigned, R>& terms() const { return coeffs_; }

    Poly1 operator-() const {
        Poly1 r;
        for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }
    Poly1& operator+=(const Poly1& o) {
        for (auto& [e, c] : o.coeffs_) {
            auto it = coeffs_.find(e);
            if (it == coeffs_.end()) {
                coeffs_[e] = c;
            } else {
                it->second += c;
                if (it->second == R(0)) coeffs_.erase(it);
            }
        }
        return *this;
    }
    Poly1& operator-=(const Poly1& o) { return *this += -o; }
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        Poly1 r;
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_) {
                auto it = r.coeffs_.find(ea + eb);
                if (it == r.coeffs_.end()) {
                    R v = ca * cb;
                    if (!(v == R(0))) r.coeffs_[ea + eb] = v;
                } else {
                    it->second += ca * cb;
                    if (it->second == R(0)) r.coeffs_.erase(it);
                }
            }
        return r;
    }
    Poly1& operator*=(const Poly1& o) { return *this = *this * o; }
    friend Poly1 operator*(const Poly1& a, const R& s) { return a * Poly1(s); }

    bool operator==(const Poly1& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly1& o) const { return !(*this == o); }
    bool operator<(const Poly1& o) const { return coeffs_ < o.coeffs_; }

    template <typename S>
    S eval(const S& x) const {
        // Horner from the top degree down.
        S acc(0);
        int last = -1;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if (last >= 0)
                for (int k = 0; k < last - (int)it->first; ++k) acc = acc * x;
            acc = acc + S(it->second);
            last = (int)it->first;
        }
        for (int k = 0; k < last; ++k) acc = acc * x;
        return acc;
    }

    std::string str(const std::string& v) const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << coeff_str(it->second);
            if (it->first >= 1) os << "*" << v;
            if (it->first >= 2) os << "^" << it->first;
        }
        return os.str();
    }

private:
    static std::string coeff_str(const Rational& c) { return c.get_str(); }
    template <typename S>
    static std::string coeff_str(const S& c) {
        return "(" + c.str() + ")";
    }

    std::map<unsigned, R> coeffs_;
};

// Polynomials in the deformation parameter b with rational coefficients.
using BPoly = Poly1<Rational>;

inline std::optional<BPoly> try_invert(const BPoly& p) {
    if (!p.is_constant() || p.is_zero()) return std::nullopt;
    return BPoly(Rational(1) / p.constant());
}

inline std::optional<Rational> try_invert(const Rational& r) {
    if (is_zero(r)) return std::nullopt;
    return Rational(1) / r;
}

} // namespace wb
