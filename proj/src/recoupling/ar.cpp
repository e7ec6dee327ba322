#include "recoupling/ar.hpp"

#include <cmath>
#include <sstream>

namespace wb {

namespace {

// shape of (T_eps)^{m1 m2 m3}_{j 0 j} with the scalar prefactor and heat
// factor stripped: d_j * 3j(j, 0, j; m1, 0, m3)
SqrtRational t_shape(int tj, int tm1, int tm3) {
    return SqrtRational::of_rational(Rational(tj + 1)) * wigner_3j(Spin(tj), Spin(0), Spin(tj), tm1, 0, tm3);
}

} // namespace

ARReport ar_coefficients(Spin jmax, double eps, double mu, double lambda,
                         const std::vector<double>& eps_sweep) {
    ARReport rep;
    if (eps <= 0) throw std::invalid_argument("ar_coefficients: eps must be positive");
    (void)mu;
    (void)lambda;

    // cubic condition: d_j 3j(j,0,j;-m1,0,-m3) = c3 (-1)^{-m3} delta_{m1,-m3}
    // with c3 = (-1)^j sqrt(d_j); the scalar in front of the classical
    // solution multiplies both sides and drops out of the relation.
    bool cubic_ok = true;
    for (int tj = 0; tj <= jmax.twice; tj += 2) {
        int j_int = tj / 2;
        SqrtRational c3 = SqrtRational::sqrt_of(Rational(tj + 1));
        if (j_int % 2) c3 = -c3;
        for (int tm1 = -tj; tm1 <= tj; tm1 += 2)
            for (int tm3 = -tj; tm3 <= tj; tm3 += 2) {
                SqrtRational lhs = t_shape(tj, -tm1, -tm3);
                SqrtRational rhs = SqrtRational::zero();
                if (tm1 == -tm3) {
                    rhs = c3;
                    if ((tm3 / 2) % 2) rhs = -rhs; // (-1)^{-m3}
                }
                if (lhs != rhs) cubic_ok = false;
            }
    }
    rep.cubic_condition_exact = cubic_ok;

    // square relation: sum_{m3} (-1)^{-m3-m4} T^{-m1 0 -m3} T^{m3 0 -m4}
    // must equal (c3)^2 delta_{m1,-m4}; (c3)^2 = d_j.
    bool square_ok = true;
    for (int tj = 0; tj <= jmax.twice; tj += 2) {
        Rational c1 = Rational(tj + 1);
        for (int tm1 = -tj; tm1 <= tj; tm1 += 2)
            for (int tm4 = -tj; tm4 <= tj; tm4 += 2) {
                RadicalSum lhs;
                for (int tm3 = -tj; tm3 <= tj; tm3 += 2) {
                    SqrtRational prod = t_shape(tj, -tm1, -tm3) * t_shape(tj, tm3, -tm4);
                    if (prod.is_zero()) continue;
                    if (((-tm3 - tm4) / 2) % 2) prod = -prod;
                    lhs.add(prod);
                }
                RadicalSum rhs;
                if (tm1 == -tm4) rhs.add(SqrtRational::of_rational(c1));
                if (!(lhs - rhs).is_zero()) square_ok = false;
            }
    }
    rep.square_relation_exact = square_ok;

    // N_eps^{-2} = sum_{j <= jmax} d_j^2 e^{-2 eps C_j} over integer and
    // half-integer spins, with the geometric tail bound of the cutoff
    double inv2 = 0;
    for (int tj = 0; tj <= jmax.twice; ++tj) {
        double dj = tj + 1;
        double cas = 0.25 * tj * (tj + 2); // j(j+1)
        inv2 += dj * dj * std::exp(-2 * eps * cas);
    }
    rep.n_eps = 1.0 / std::sqrt(inv2);
    {
        double djm = jmax.twice + 1;
        double cas = 0.25 * jmax.twice * (jmax.twice + 2);
        double step = 2 * eps * (jmax.twice + 2); // 2 eps (2 jmax + 2)
        rep.tail_bound = djm * djm * std::exp(-2 * eps * cas) / (1.0 - std::exp(-step));
        rep.tail_ok = rep.tail_bound <= 1e-6 * inv2;
        if (!rep.tail_ok) {
            std::ostringstream os;
            os << "cutoff jmax too small for eps=" << eps << ": tail bound " << rep.tail_bound;
            rep.notes.push_back(os.str());
        }
    }

    // Completeness defect D(eps) on the spin window j1, j2 <= 1, plus the
    // rigorous first-order envelope L = max 2 sum d_j C_j |3j 3j|, which
    // bounds D(eps) <= L eps since 1 - e^{-x} <= x.
    double envelope = 0;
    auto deviation = [&](double e, bool collect_envelope) {
        double worst = 0;
        for (int tj1 = 0; tj1 <= 2; ++tj1)
            for (int tj2 = 0; tj2 <= 2; ++tj2)
                for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
                    for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2)
                        for (int tm1p = -tj1; tm1p <= tj1; tm1p += 2)
                            for (int tm2p = -tj2; tm2p <= tj2; tm2p += 2) {
                                if (tm1 + tm2 != tm1p + tm2p) continue;
                                int tm = -(tm1 + tm2);
                                double acc = 0, env = 0;
                                for (int tj = std::abs(tj1 - tj2); tj <= std::min(tj1 + tj2, jmax.twice);
                                     tj += 2) {
                                    if (std::abs(tm) > tj) continue;
                                    double cas = 0.25 * tj * (tj + 2);
                                    double a =
                                        wigner_3j(Spin(tj1), Spin(tj2), Spin(tj), tm1, tm2, tm).to_double();
                                    double b =
                                        wigner_3j(Spin(tj1), Spin(tj2), Spin(tj), tm1p, tm2p, tm).to_double();
                                    acc += (tj + 1) * std::exp(-2 * e * cas) * a * b;
                                    env += (tj + 1) * 2 * cas * std::abs(a * b);
                                }
                                double expect = (tm1 == tm1p && tm2 == tm2p) ? 1.0 : 0.0;
                                worst = std::max(worst, std::abs(acc - expect));
                                if (collect_envelope) envelope = std::max(envelope, env);
                            }
        return worst;
    };
    rep.eps_values = eps_sweep;
    for (size_t i = 0; i < eps_sweep.size(); ++i)
        rep.deviation.push_back(deviation(eps_sweep[i], i == 0));
    rep.linear_decay = true;
    for (size_t i = 0; i < rep.deviation.size(); ++i) {
        if (rep.deviation[i] > envelope * rep.eps_values[i]) rep.linear_decay = false;
        if (i > 0 && rep.deviation[i] > 0.75 * rep.deviation[i - 1]) rep.linear_decay = false;
    }
    return rep;
}

} // namespace wb
