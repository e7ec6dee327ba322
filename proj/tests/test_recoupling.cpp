#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recoupling/ar.hpp"
#include "recoupling/identities.hpp"
#include "recoupling/wigner.hpp"

using namespace wb;

TEST_CASE("3j selection rules exhaustively for spins <= 2") {
    for (int j1 = 0; j1 <= 4; ++j1)
        for (int j2 = 0; j2 <= 4; ++j2)
            for (int j3 = 0; j3 <= 4; ++j3)
                for (int m1 = -j1; m1 <= j1; m1 += 2)
                    for (int m2 = -j2; m2 <= j2; m2 += 2)
                        for (int m3 = -j3; m3 <= j3; m3 += 2) {
                            SqrtRational v = wigner_3j(Spin(j1), Spin(j2), Spin(j3), m1, m2, m3);
                            if (m1 + m2 + m3 != 0 || !triangle_ok(Spin(j1), Spin(j2), Spin(j3)))
                                CHECK(v.is_zero());
                        }
    CHECK_THROWS(wigner_3j(Spin(2), Spin(0), Spin(2), 1, 0, -1)); // m not integral for j=1
}

TEST_CASE("3j explicit values") {
    // (1,0,1; 1,0,-1) = +1/sqrt(3)
    SqrtRational v = wigner_3j(Spin(2), Spin(0), Spin(2), 2, 0, -2);
    CHECK(v == SqrtRational(1, rat(1, 3)));
    // (2j3+1) sum_{m1,m2} 3j(1/2,1/2,j3)^2 = 1 at j3 = 1: each square is 1/3... times d=3
    Rational acc(0);
    for (int m1 = -1; m1 <= 1; m1 += 2)
        for (int m2 = -1; m2 <= 1; m2 += 2) {
            int m3 = -m1 - m2;
            if (std::abs(m3) > 2) continue;
            SqrtRational w = wigner_3j(Spin(1), Spin(1), Spin(2), m1, m2, m3);
            acc += w.squared();
        }
    CHECK(acc == rat(1)); // three m3 slots, each orthonormality sum = 1/3
    for (int m3 = -2; m3 <= 2; m3 += 2) {
        Rational s(0);
        for (int m1 = -1; m1 <= 1; m1 += 2) {
            int m2 = -m3 - m1;
            if (std::abs(m2) > 1) continue;
            s += wigner_3j(Spin(1), Spin(1), Spin(2), m1, m2, m3).squared();
        }
        CHECK(s == rat(1, 3));
    }
}

TEST_CASE("6j explicit values and the definition oracle") {
    // {1 1 1; 1 1 0} = (-1)^3 / sqrt(9) = -1/3
    SqrtRational v = wigner_6j(Spin(2), Spin(2), Spin(2), Spin(2), Spin(2), Spin(0));
    CHECK(v == SqrtRational(-1, rat(1, 9)));
    // {1 1 1; 1 1 1}: definition sum agrees with the closed form
    SqrtRational a = wigner_6j(Spin(2), Spin(2), Spin(2), Spin(2), Spin(2), Spin(2));
    SqrtRational b = wigner_6j_definition(Spin(2), Spin(2), Spin(2), Spin(2), Spin(2), Spin(2));
    CHECK(a == b);
    CHECK(a == SqrtRational(1, rat(1, 36))); // known value 1/6
    // triangle-violating input
    CHECK(wigner_6j(Spin(6), Spin(2), Spin(2), Spin(2), Spin(2), Spin(2)).is_zero());
}

TEST_CASE("6j definition equals closed form for all spins <= 3/2") {
    for (int j1 = 0; j1 <= 3; ++j1)
        for (int j2 = 0; j2 <= 3; ++j2)
            for (int j3 = 0; j3 <= 3; ++j3)
                for (int j4 = 0; j4 <= 3; ++j4)
                    for (int j5 = 0; j5 <= 3; ++j5)
                        for (int j6 = 0; j6 <= 3; ++j6) {
                            SqrtRational a = wigner_6j(Spin(j1), Spin(j2), Spin(j3), Spin(j4), Spin(j5), Spin(j6));
                            SqrtRational b = wigner_6j_definition(Spin(j1), Spin(j2), Spin(j3), Spin(j4),
                                                                  Spin(j5), Spin(j6));
                            CHECK(a == b);
                        }
}

TEST_CASE("identity suite passes for spins <= 2") {
    auto rep = identity_suite(Spin(4));
    CHECK(rep.all_pass());
    CHECK(rep.instances.size() > 100);
    CHECK(rep.exact_count() == rep.instances.size());
}

TEST_CASE("ar coefficient checks") {
    auto rep = ar_coefficients(Spin(40), 0.05, 1.0, 1.0);
    CHECK(rep.cubic_condition_exact);
    CHECK(rep.square_relation_exact);
    CHECK(rep.linear_decay);
    CHECK(rep.n_eps > 0);
    REQUIRE(rep.deviation.size() == 3);
    CHECK(rep.deviation[1] < rep.deviation[0]);
    CHECK(rep.deviation[2] < rep.deviation[1]);
}
