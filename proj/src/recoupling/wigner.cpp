#include "recoupling/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wb {

namespace {

// factorial of a half-integer argument that must in fact be integral
Rational hfact(int twice) {
    if (twice < 0 || twice % 2 != 0) throw std::logic_error("hfact: negative or half-integral");
    return Rational(factorial(twice / 2));
}

bool even_sum(int a, int b, int c) { return (a + b + c) % 2 == 0; }

// sign (-1)^(twice/2); twice must be even
int half_pow_sign(int twice) {
    if (twice % 2 != 0) throw std::logic_error("half_pow_sign: non-integer exponent");
    return (twice / 2) % 2 ? -1 : 1;
}

Rational triangle_delta(const Spin& a, const Spin& b, const Spin& c) {
    return hfact(a.twice + b.twice - c.twice) * hfact(a.twice - b.twice + c.twice) *
           hfact(-a.twice + b.twice + c.twice) / hfact(a.twice + b.twice + c.twice + 2);
}

} // namespace

bool triangle_ok(const Spin& j1, const Spin& j2, const Spin& j3) {
    if (!even_sum(j1.twice, j2.twice, j3.twice)) return false;
    return j1.twice + j2.twice >= j3.twice && j1.twice + j3.twice >= j2.twice &&
           j2.twice + j3.twice >= j1.twice;
}

SqrtRational wigner_3j(Spin j1, Spin j2, Spin j3, int tm1, int tm2, int tm3) {
    if (j1.twice < 0 || j2.twice < 0 || j3.twice < 0)
        throw std::invalid_argument("wigner_3j: negative spin");
    if (std::abs(tm1) > j1.twice || (j1.twice - tm1) % 2 != 0 || std::abs(tm2) > j2.twice ||
        (j2.twice - tm2) % 2 != 0 || std::abs(tm3) > j3.twice || (j3.twice - tm3) % 2 != 0)
        throw std::invalid_argument("wigner_3j: invalid magnetic index");
    if (tm1 + tm2 + tm3 != 0) return SqrtRational::zero();
    if (!triangle_ok(j1, j2, j3)) return SqrtRational::zero();

    // Racah sum; all factorial arguments below are guaranteed integral
    int kmin = std::max({0, -(j3.twice - j2.twice + tm1), -(j3.twice - j1.twice - tm2)});
    int kmax = std::min({j1.twice + j2.twice - j3.twice, j1.twice - tm1, j2.twice + tm2});
    if (kmin % 2) kmin += 1; // arguments step by 2 in twice-units
    Rational sum(0);
    for (int k = kmin; k <= kmax; k += 2) {
        Rational term = Rational(1) / (hfact(k) * hfact(j1.twice + j2.twice - j3.twice - k) *
                                       hfact(j1.twice - tm1 - k) * hfact(j2.twice + tm2 - k) *
                                       hfact(j3.twice - j2.twice + tm1 + k) *
                                       hfact(j3.twice - j1.twice - tm2 + k));
        if ((k / 2) % 2) term = -term;
        sum += term;
    }
    if (is_zero(sum)) return SqrtRational::zero();

    Rational rad = triangle_delta(j1, j2, j3) * hfact(j1.twice + tm1) * hfact(j1.twice - tm1) *
                   hfact(j2.twice + tm2) * hfact(j2.twice - tm2) * hfact(j3.twice + tm3) *
                   hfact(j3.twice - tm3);
    int phase = half_pow_sign(j1.twice - j2.twice - tm3);
    int s = phase * sgn(sum);
    return SqrtRational(s, rad * sum * sum);
}

SqrtRational wigner_6j(Spin j1, Spin j2, Spin j3, Spin j4, Spin j5, Spin j6) {
    if (!triangle_ok(j1, j2, j3) || !triangle_ok(j1, j5, j6) || !triangle_ok(j4, j2, j6) ||
        !triangle_ok(j4, j5, j3))
        return SqrtRational::zero();
    int t1 = j1.twice + j2.twice + j3.twice;
    int t2 = j1.twice + j5.twice + j6.twice;
    int t3 = j4.twice + j2.twice + j6.twice;
    int t4 = j4.twice + j5.twice + j3.twice;
    int q1 = j1.twice + j2.twice + j4.twice + j5.twice;
    int q2 = j2.twice + j3.twice + j5.twice + j6.twice;
    int q3 = j3.twice + j1.twice + j6.twice + j4.twice;
    int kmin = std::max({t1, t2, t3, t4});
    int kmax = std::min({q1, q2, q3});
    Rational sum(0);
    for (int k = kmin; k <= kmax; k += 2) {
        Rational term = hfact(k + 2) / (hfact(k - t1) * hfact(k - t2) * hfact(k - t3) *
                                        hfact(k - t4) * hfact(q1 - k) * hfact(q2 - k) * hfact(q3 - k));
        if ((k / 2) % 2) term = -term;
        sum += term;
    }
    if (is_zero(sum)) return SqrtRational::zero();
    Rational rad = triangle_delta(j1, j2, j3) * triangle_delta(j1, j5, j6) *
                   triangle_delta(j4, j2, j6) * triangle_delta(j4, j5, j3);
    return SqrtRational(sgn(sum), rad * sum * sum);
}

SqrtRational wigner_6j_definition(Spin j1, Spin j2, Spin j3, Spin j4, Spin j5, Spin j6) {
    if (!triangle_ok(j1, j2, j3) || !triangle_ok(j1, j5, j6) || !triangle_ok(j4, j2, j6) ||
        !triangle_ok(j4, j5, j3))
        return SqrtRational::zero();
    RadicalSum acc;
    for (int tm1 = -j1.twice; tm1 <= j1.twice; tm1 += 2)
        for (int tm2 = -j2.twice; tm2 <= j2.twice; tm2 += 2)
            for (int tm4 = -j4.twice; tm4 <= j4.twice; tm4 += 2)
                for (int tm5 = -j5.twice; tm5 <= j5.twice; tm5 += 2) {
                    int tm3 = -(tm1 + tm2); // first 3j forces (-m1)+(-m2)+(-m3) = 0
                    if (std::abs(tm3) > j3.twice) continue;
                    int tm6 = tm5 - tm1; // second 3j: m1 - m5 + m6 = 0
                    if (std::abs(tm6) > j6.twice) continue;
                    // third and fourth 3j constraints follow automatically:
                    // m4 + m2 - m6 = 0 and -m4 + m5 + m3 = 0 must also hold
                    if (tm4 + tm2 - tm6 != 0) continue;
                    if (-tm4 + tm5 + tm3 != 0) continue;
                    SqrtRational prod =
                        wigner_3j(j1, j2, j3, -tm1, -tm2, -tm3) *
                        wigner_3j(j1, j5, j6, tm1, -tm5, tm6) *
                        wigner_3j(j4, j2, j6, tm4, tm2, -tm6) *
                        wigner_3j(j4, j5, j3, -tm4, tm5, tm3);
                    if (prod.is_zero()) continue;
                    int tsum = (j1.twice - tm1) + (j2.twice - tm2) + (j3.twice - tm3) +
                               (j4.twice - tm4) + (j5.twice - tm5) + (j6.twice - tm6);
                    if (half_pow_sign(tsum) < 0) prod = -prod;
                    acc.add(prod);
                }
    if (acc.is_zero()) return SqrtRational::zero();
    if (acc.terms().size() != 1)
        throw std::logic_error("wigner_6j_definition: radical classes failed to merge");
    return acc.terms()[0];
}

void RadicalSum::add(const SqrtRational& v) {
    if (v.is_zero()) return;
    for (size_t i = 0; i < terms_.size(); ++i) {
        auto merged = try_add(terms_[i], v);
        if (merged) {
            if (merged->is_zero())
                terms_.erase(terms_.begin() + i);
            else
                terms_[i] = *merged;
            return;
        }
    }
    terms_.push_back(v);
}

void RadicalSum::add_scaled(const Rational& c, const SqrtRational& v) {
    if (sgn(c) == 0) return;
    add(SqrtRational::of_rational(c) * v);
}

double RadicalSum::to_double() const {
    double acc = 0;
    for (auto& t : terms_) acc += t.to_double();
    return acc;
}

std::string RadicalSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << terms_[i].str();
    }
    return os.str();
}

} // namespace wb
