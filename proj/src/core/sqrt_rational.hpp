#pragma once

#include "core/rational.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace wb {

// Exact value of the form sign * sqrt(radicand) with a nonnegative rational
// radicand. Closed under multiplication. Square factors are not extracted;
// two values are equal iff their signs and reduced radicands agree, which is
// faithful because the representation is determined by the value.
class SqrtRational {
public:
    SqrtRational() : sign_(0), rad_(0) {}
    SqrtRational(int sign, Rational radicand) : sign_(sign), rad_(std::move(radicand)) {
        normalize();
    }

    // The exact value q, stored as sign(q) * sqrt(q^2).
    static SqrtRational of_rational(const Rational& q) { return SqrtRational(sgn(q), q * q); }
    static SqrtRational sqrt_of(const Rational& r) {
        if (sgn(r) < 0) throw std::domain_error("SqrtRational: negative radicand");
        return SqrtRational(1, r);
    }
    static SqrtRational zero() { return SqrtRational(); }

    int sign() const { return sign_; }
    const Rational& radicand() const { return rad_; }
    bool is_zero() const { return sign_ == 0; }

    // The square always lands back in the rationals.
    Rational squared() const { return rad_; }

    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
        return SqrtRational(a.sign_ * b.sign_, a.rad_ * b.rad_);
    }
    SqrtRational& operator*=(const SqrtRational& o) { return *this = *this * o; }
    SqrtRational operator-() const { return SqrtRational(-sign_, rad_); }

    // Addition stays exact when the two radicands differ by the square of a
    // rational, which covers every identity this project checks; otherwise
    // there is no SqrtRational result.
    friend std::optional<SqrtRational> try_add(const SqrtRational& a, const SqrtRational& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Rational ratio = a.rad_ / b.rad_;
        auto root = rational_sqrt(ratio);
        if (!root) return std::nullopt;
        // a = sign_a * q * sqrt(rad_b) with q = sqrt(ratio) > 0.
        Rational coeff = Rational(a.sign_) * (*root) + Rational(b.sign_);
        return SqrtRational(sgn(coeff), coeff * coeff * b.rad_);
    }

    bool operator==(const SqrtRational& o) const { return sign_ == o.sign_ && rad_ == o.rad_; }
    bool operator!=(const SqrtRational& o) const { return !(*this == o); }

    double to_double() const { return sign_ * std::sqrt(rad_.get_d()); }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        return s + "sqrt(" + rad_.get_str() + ")";
    }

    static std::optional<Rational> rational_sqrt(const Rational& q) {
        if (sgn(q) < 0) return std::nullopt;
        if (sgn(q) == 0) return Rational(0);
        if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) return std::nullopt;
        if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) return std::nullopt;
        Integer n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
        return Rational(n) / Rational(d);
    }

private:
    void normalize() {
        if (sgn(rad_) < 0) throw std::domain_error("SqrtRational: negative radicand");
        if (sgn(rad_) == 0) sign_ = 0;
        if (sign_ == 0) rad_ = 0;
    }

    int sign_;
    Rational rad_;
};

} // namespace wb
