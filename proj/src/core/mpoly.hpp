#pragma once

#include "core/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

namespace wb {

// Sparse multivariate polynomial with a fixed window of NV variables and
// coefficients in R. Exponents are small by construction everywhere this is
// used (formal couplings u, u_i, q_i and the bookkeeping variable t).
template <typename R, int NV>
class MPoly {
public:
    using Expo = std::array<uint8_t, NV>;

    MPoly() = default;
    MPoly(int c) {
        if (!(R(c) == R(0))) terms_[Expo{}] = R(c);
    }
    explicit MPoly(const R& c) {
        if (!(c == R(0))) terms_[Expo{}] = c;
    }

    static MPoly var(int i, unsigned e = 1) {
        MPoly p;
        Expo x{};
        x[i] = (uint8_t)e;
        p.terms_[x] = R(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
    }
    R constant() const {
        auto it = terms_.find(Expo{});
        return it == terms_.end() ? R(0) : it->second;
    }
    const std::map<Expo, R>& terms() const { return terms_; }

    void add_term(const Expo& e, const R& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!(c == R(0))) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == R(0)) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Expo e;
                for (int i = 0; i < NV; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(c) << ")";
            for (int i = 0; i < NV; ++i) {
                if (e[i] == 0) continue;
                os << "*" << names[i];
                if (e[i] > 1) os << "^" << (int)e[i];
            }
        }
        return os.str();
    }

private:
    static std::string coeff_str(const Rational& c) { return c.get_str(); }
    template <typename S>
    static std::string coeff_str(const S& c) {
        return c.str();
    }

    std::map<Expo, R> terms_;
};

} // namespace wb
