#pragma once

#include "core/poly1.hpp"

namespace wb {

// Long division of univariate rational polynomials: a = q*b + r.
inline std::pair<BPoly, BPoly> poly_divmod(const BPoly& a, const BPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    BPoly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        unsigned e = r.degree() - b.degree();
        Rational c = r.leading() / b.leading();
        BPoly t = BPoly::term(e, c);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

inline BPoly poly_gcd(BPoly a, BPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    // monic normalization
    return a * BPoly(Rational(1) / a.leading());
}

// Element of Q(b): quotient of two polynomials in b, kept reduced with a
// monic denominator. This is the coefficient field used wherever 1/(1+b)
// factors appear.
class BRat {
public:
    BRat() : num_(0), den_(1) {}
    BRat(int c) : num_(c), den_(1) {}
    BRat(const Rational& c) : num_(c), den_(1) {}
    BRat(const BPoly& p) : num_(p), den_(1) {}
    BRat(BPoly n, BPoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static BRat b(unsigned e = 1) { return BRat(BPoly::var(e)); }

    const BPoly& num() const { return num_; }
    const BPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == BPoly(1); }

    BRat operator-() const {
        BRat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend BRat operator+(const BRat& a, const BRat& b) {
        return BRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BRat operator-(const BRat& a, const BRat& b) { return a + (-b); }
    friend BRat operator*(const BRat& a, const BRat& b) {
        return BRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BRat operator/(const BRat& a, const BRat& b) {
        if (b.is_zero()) throw std::domain_error("BRat: division by zero");
        return BRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    BRat& operator+=(const BRat& o) { return *this = *this + o; }
    BRat& operator-=(const BRat& o) { return *this = *this - o; }
    BRat& operator*=(const BRat& o) { return *this = *this * o; }
    BRat& operator/=(const BRat& o) { return *this = *this / o; }

    bool operator==(const BRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const BRat& o) const { return !(*this == o); }
    bool operator<(const BRat& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    // Evaluate at a rational value of b; the denominator must not vanish there.
    Rational eval(const Rational& bval) const {
        Rational d = den_.eval(bval);
        if (sgn(d) == 0) throw std::domain_error("BRat::eval: pole at given b");
        return num_.eval(bval) / d;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str("b");
        return "(" + num_.str("b") + ")/(" + den_.str("b") + ")";
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("BRat: zero denominator");
        if (num_.is_zero()) {
            den_ = BPoly(1);
            return;
        }
        BPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_divmod(num_, g).first;
            den_ = poly_divmod(den_, g).first;
        }
        Rational lead = den_.leading();
        if (!(lead == Rational(1))) {
            BPoly inv(Rational(1) / lead);
            num_ *= inv;
            den_ *= inv;
        }
    }

    BPoly num_, den_;
};

inline std::optional<BRat> try_invert(const BRat& r) {
    if (r.is_zero()) return std::nullopt;
    return BRat(1) / r;
}

} // namespace wb
