#pragma once

#include "core/poly1.hpp"

#include <functional>
#include <sstream>
#include <vector>

namespace wb {

// Formal power series in one variable, truncated at a fixed order. All
// arithmetic is exact in the coefficient ring R and never reports
// coefficients beyond the truncation order.
template <typename R>
class Series {
public:
    Series() : order_(0), c_(1, R(0)) {}
    Series(unsigned order, std::string var = "t") : order_(order), var_(std::move(var)), c_(order + 1, R(0)) {}
    Series(unsigned order, const R& c0, std::string var = "t") : Series(order, std::move(var)) { c_[0] = c0; }

    static Series constant(unsigned order, const R& c, const std::string& var = "t") {
        return Series(order, c, var);
    }
    static Series variable(unsigned order, const std::string& var = "t") {
        Series s(order, var);
        if (order >= 1) s.c_[1] = R(1);
        return s;
    }

    unsigned order() const { return order_; }
    const std::string& var() const { return var_; }
    const R& operator[](unsigned k) const { return c_.at(k); }
    void set(unsigned k, const R& v) { c_.at(k) = v; }

    Series truncated(unsigned new_order) const {
        Series s(new_order, var_);
        for (unsigned k = 0; k <= std::min(new_order, order_); ++k) s.c_[k] = c_[k];
        return s;
    }

    Series operator-() const {
        Series s(*this);
        for (auto& x : s.c_) x = -x;
        return s;
    }
    friend Series operator+(const Series& a, const Series& b) {
        Series s(std::min(a.order_, b.order_), a.var_);
        for (unsigned k = 0; k <= s.order_; ++k) s.c_[k] = a.c_[k] + b.c_[k];
        return s;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    friend Series operator*(const Series& a, const Series& b) {
        Series s(std::min(a.order_, b.order_), a.var_);
        for (unsigned i = 0; i <= s.order_; ++i) {
            if (a.c_[i] == R(0)) continue;
            for (unsigned j = 0; i + j <= s.order_; ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return s;
    }
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }
    friend Series operator*(const Series& a, const R& s) { return a * Series::constant(a.order_, s, a.var_); }

    bool operator==(const Series& o) const { return order_ == o.order_ && c_ == o.c_; }

    Series pow(unsigned e) const {
        Series acc = constant(order_, R(1), var_), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    // Substitution f(g) for g with zero constant term.
    Series compose(const Series& g) const {
        if (!(g.c_[0] == R(0))) throw std::domain_error("Series::compose: inner constant term must vanish");
        Series acc = constant(g.order_, R(0), g.var_);
        for (unsigned k = order_ + 1; k-- > 0;) {
            acc *= g;
            acc.c_[0] += c_[k];
        }
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (unsigned k = 0; k <= order_; ++k) {
            if (c_[k] == R(0)) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(c_[k]) << ")";
            if (k >= 1) os << "*" << var_;
            if (k >= 2) os << "^" << k;
        }
        if (first) os << "0";
        os << " + O(" << var_ << "^" << order_ + 1 << ")";
        return os.str();
    }

private:
    static std::string coeff_str(const Rational& c) { return c.get_str(); }
    template <typename S>
    static std::string coeff_str(const S& c) {
        return c.str();
    }

    unsigned order_;
    std::string var_ = "t";
    std::vector<R> c_;
};

// numerator / denominator through the truncation order; the denominator must
// have an invertible constant term.
template <typename R>
Series<R> series_divide(const Series<R>& num, const Series<R>& den) {
    auto inv0 = try_invert(den[0]);
    if (!inv0) throw std::domain_error("series_divide: denominator constant term is not invertible");
    Series<R> q(std::min(num.order(), den.order()), num.var());
    for (unsigned n = 0; n <= q.order(); ++n) {
        R acc = num[n];
        for (unsigned k = 1; k <= n; ++k) acc -= den[k] * q[n - k];
        q.set(n, acc * (*inv0));
    }
    return q;
}

struct SeriesSolveError : std::runtime_error {
    unsigned first_unstable_order;
    SeriesSolveError(unsigned ord)
        : std::runtime_error("series_solve: coefficient at order " + std::to_string(ord) +
                             " failed to stabilize"),
          first_unstable_order(ord) {}
};

// Solves S = F(S) by fixed-point iteration, for maps of the form
// F(S) = 1 + (terms each carrying a factor of the series variable). Each
// iteration freezes one more order, so `order`+1 rounds suffice; one extra
// round detects non-contracting maps.
template <typename R>
Series<R> series_solve(const std::function<Series<R>(const Series<R>&)>& F, unsigned order,
                       const std::string& var = "t") {
    Series<R> s = Series<R>::constant(order, R(1), var);
    for (unsigned it = 0; it <= order; ++it) s = F(s).truncated(order);
    Series<R> next = F(s).truncated(order);
    for (unsigned k = 0; k <= order; ++k)
        if (!(next[k] == s[k])) throw SeriesSolveError(k);
    return s;
}

} // namespace wb
