#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/brat.hpp"
#include "core/series.hpp"
#include "core/sqrt_rational.hpp"

#include <random>

using namespace wb;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-40, 40), den(1, 17);
    return rat(num(rng), den(rng));
}

BPoly random_bpoly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 4);
    BPoly p;
    int d = deg(rng);
    for (int k = 0; k <= d; ++k) p += BPoly::term(k, random_rational(rng));
    return p;
}

using QSeries = Series<Rational>;
using MuPoly = Poly1<Rational>; // polynomials in the formal parameter mu
using MuSeries = Series<MuPoly>;

// Independent oracle: planar 4-ary trees with n internal nodes, by direct
// convolution over the four ordered subtrees.
std::vector<Integer> quartic_tree_counts(unsigned nmax) {
    std::vector<Integer> t(nmax + 1, Integer(0));
    t[0] = 1;
    for (unsigned n = 1; n <= nmax; ++n)
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; a + b < n; ++b)
                for (unsigned c = 0; a + b + c < n; ++c)
                    t[n] += t[a] * t[b] * t[c] * t[n - 1 - a - b - c];
    return t;
}

// Trees whose internal nodes are quartic (weight 1) or binary (weight mu).
std::vector<MuPoly> bicolored_tree_counts(unsigned nmax) {
    std::vector<MuPoly> t(nmax + 1);
    t[0] = MuPoly(1);
    for (unsigned n = 1; n <= nmax; ++n) {
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; a + b < n; ++b)
                for (unsigned c = 0; a + b + c < n; ++c)
                    t[n] += t[a] * t[b] * t[c] * t[n - 1 - a - b - c];
        MuPoly binary;
        for (unsigned a = 0; a < n; ++a) binary += t[a] * t[n - 1 - a];
        t[n] += MuPoly::var() * binary;
    }
    return t;
}

} // namespace

TEST_CASE("rational and bpoly ring axioms on random samples") {
    std::mt19937 rng(20240811);
    for (int it = 0; it < 200; ++it) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
    for (int it = 0; it < 60; ++it) {
        BPoly a = random_bpoly(rng), b = random_bpoly(rng), c = random_bpoly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("brat field arithmetic") {
    std::mt19937 rng(7);
    BRat one_plus_b = BRat(1) + BRat::b();
    CHECK((one_plus_b / one_plus_b) == BRat(1));
    for (int it = 0; it < 40; ++it) {
        BRat x = BRat(random_bpoly(rng)) / one_plus_b;
        BRat y(random_bpoly(rng));
        if (x.is_zero()) continue;
        CHECK((x * y) / x == y);
        CHECK(x - x == BRat(0));
    }
    CHECK(one_plus_b.eval(rat(1)) == rat(2));
}

TEST_CASE("series ring axioms and truncation window") {
    std::mt19937 rng(99);
    auto random_series = [&](unsigned order) {
        QSeries s(order);
        for (unsigned k = 0; k <= order; ++k) s.set(k, random_rational(rng));
        return s;
    };
    for (int it = 0; it < 40; ++it) {
        QSeries a = random_series(8), b = random_series(8), c = random_series(8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("series_solve: quartic fixed point vs tree enumeration") {
    auto F = [](const QSeries& s) {
        QSeries t = QSeries::variable(s.order());
        return QSeries::constant(s.order(), rat(1)) + t * s.pow(4);
    };
    QSeries m = series_solve<Rational>(F, 4);
    auto oracle = quartic_tree_counts(4);
    for (unsigned n = 0; n <= 4; ++n) CHECK(m[n] == Rational(oracle[n]));
    CHECK(m[1] == rat(1));
    CHECK(m[2] == rat(4));
    CHECK(m[3] == rat(22));
    CHECK(m[4] == rat(140));
    // re-substitution reproduces the series
    CHECK(F(m).truncated(4) == m);
}

TEST_CASE("series_solve: bivariate fixed point vs bicolored trees") {
    auto F = [](const MuSeries& s) {
        MuSeries t = MuSeries::variable(s.order());
        MuSeries mu_t = t * MuPoly::var();
        return MuSeries::constant(s.order(), MuPoly(1)) + t * s.pow(4) + mu_t * s.pow(2);
    };
    MuSeries m = series_solve<MuPoly>(F, 2);
    auto oracle = bicolored_tree_counts(2);
    CHECK(m[0] == MuPoly(1));
    CHECK(m[1] == oracle[1]);
    CHECK(m[2] == oracle[2]);
    // frozen values: [t] = 1 + mu, [t^2] = 4 + 6 mu + 2 mu^2
    MuPoly t1 = MuPoly(1) + MuPoly::var();
    MuPoly t2 = MuPoly(4) + MuPoly::term(1, rat(6)) + MuPoly::term(2, rat(2));
    CHECK(m[1] == t1);
    CHECK(m[2] == t2);
}

TEST_CASE("series_solve: constant map and non-contracting diagnostics") {
    auto F = [](const QSeries& s) { return QSeries::constant(s.order(), rat(1)); };
    QSeries one = series_solve<Rational>(F, 6);
    for (unsigned k = 1; k <= 6; ++k) CHECK(one[k] == rat(0));
    CHECK(one[0] == rat(1));

    // S = 1 + S fails to stabilize at order 0
    auto bad = [](const QSeries& s) { return QSeries::constant(s.order(), rat(1)) + s; };
    CHECK_THROWS_AS(series_solve<Rational>(bad, 3), SeriesSolveError);
}

TEST_CASE("series_divide: geometric series and broken-chain expansion") {
    QSeries u = QSeries::variable(8); // U treated as the formal variable
    QSeries one = QSeries::constant(8, rat(1));
    QSeries geo = series_divide(u, one - u);
    for (unsigned k = 1; k <= 8; ++k) CHECK(geo[k] == rat(1));
    CHECK(geo[0] == rat(0));

    CHECK(series_divide(one, one) == one);

    // (4U^2 - 6U^3) / ((1-U)(1-2U)(1-3U)); the coefficient of U^n counts
    // length-n broken words over three dipole flavors: 3^n - 2^n - 1
    QSeries num = u * u * rat(4) - u * u * u * rat(6);
    QSeries den = (one - u) * (one - u * rat(2)) * (one - u * rat(3));
    QSeries b = series_divide(num, den);
    CHECK(b[2] == rat(4));
    CHECK(b[3] == rat(18));
    for (unsigned n = 2; n <= 8; ++n) {
        Rational words = pow_rat(rat(3), n) - pow_rat(rat(2), n) - 1;
        CHECK(b[n] == words);
    }

    QSeries zero_const = u;
    CHECK_THROWS(series_divide(one, zero_const));
}

TEST_CASE("sqrt-rational multiplication and addition") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(0, 30), den(1, 9), sg(0, 1);
    for (int it = 0; it < 100; ++it) {
        Rational r1 = rat(num(rng), den(rng)), r2 = rat(num(rng), den(rng));
        int s1 = sg(rng) ? 1 : -1, s2 = sg(rng) ? 1 : -1;
        SqrtRational a(s1, r1), b(s2, r2);
        SqrtRational p = a * b;
        CHECK(p.squared() == r1 * r2);
        if (!is_zero(r1) && !is_zero(r2)) CHECK(p.sign() == s1 * s2);
        // squaring lands in the rationals exactly
        CHECK((a * a).squared() == r1 * r1);
        CHECK((a * a).sign() == (is_zero(r1) ? 0 : 1));
    }
    // sqrt(9/4) + sqrt(1/4) = 2, sqrt(2) + sqrt(8) = sqrt(18)
    auto s = try_add(SqrtRational(1, rat(9, 4)), SqrtRational(1, rat(1, 4)));
    REQUIRE(s.has_value());
    CHECK(*s == SqrtRational::of_rational(rat(2)));
    auto t = try_add(SqrtRational(1, rat(2)), SqrtRational(1, rat(8)));
    REQUIRE(t.has_value());
    CHECK(*t == SqrtRational(1, rat(18)));
    CHECK_FALSE(try_add(SqrtRational(1, rat(2)), SqrtRational(1, rat(3))).has_value());
}
