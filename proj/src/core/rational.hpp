#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wb {

// Exact rational arithmetic is delegated to GMP. mpq_class keeps values
// canonical (lowest terms, positive denominator) as long as everything goes
// through its operators; the helpers below cover the few gaps.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    if (k > n) return Integer(0);
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// Catalan number C_n = binom(2n, n) / (n+1).
inline Integer catalan(unsigned long n) {
    Integer c = binomial(2 * n, n);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1);
    return c;
}

inline Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational acc(1), b = base;
    unsigned long n = e < 0 ? -e : e;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) {
        if (is_zero(acc)) throw std::domain_error("pow_rat: zero to negative power");
        acc = Rational(1) / acc;
    }
    return acc;
}

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace wb
