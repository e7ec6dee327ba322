#pragma once

#include "core/sqrt_rational.hpp"

#include <vector>

namespace wb {

// Spins and magnetic indices live in (1/2)Z and are carried as twice their
// value to stay integral.
struct Spin {
    int twice = 0;
    Spin() = default;
    explicit Spin(int twice_j) : twice(twice_j) {}
    static Spin half(int n) { return Spin(n); }
    bool operator==(const Spin& o) const { return twice == o.twice; }
    bool operator<(const Spin& o) const { return twice < o.twice; }
};

inline Rational dim_j(const Spin& j) { return Rational(j.twice + 1); }

bool triangle_ok(const Spin& j1, const Spin& j2, const Spin& j3);

// Exact Wigner 3j symbol by the Racah single-sum formula; Condon-Shortley
// phases. Zero outside the selection rules. Magnetic arguments are twice the
// physical values; throws if m is not compatible with j.
SqrtRational wigner_3j(Spin j1, Spin j2, Spin j3, int tm1, int tm2, int tm3);

// Exact 6j symbol by the Racah formula.
SqrtRational wigner_6j(Spin j1, Spin j2, Spin j3, Spin j4, Spin j5, Spin j6);

// 6j evaluated from its defining signed magnetic sum over four 3j symbols;
// agrees with wigner_6j and serves as its oracle.
SqrtRational wigner_6j_definition(Spin j1, Spin j2, Spin j3, Spin j4, Spin j5, Spin j6);

// Exact finite sum of sqrt-rationals kept as a list of square-class
// representatives. Distinct classes are linearly independent over Q, so the
// sum vanishes iff the list is empty.
class RadicalSum {
public:
    RadicalSum() = default;
    RadicalSum(const SqrtRational& v) { add(v); }

    void add(const SqrtRational& v);
    void add_scaled(const Rational& c, const SqrtRational& v);
    bool is_zero() const { return terms_.empty(); }
    const std::vector<SqrtRational>& terms() const { return terms_; }
    double to_double() const;
    std::string str() const;

    friend RadicalSum operator-(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum r = a;
        for (auto& t : b.terms_) r.add(-t);
        return r;
    }

private:
    std::vector<SqrtRational> terms_;
};

} // namespace wb
