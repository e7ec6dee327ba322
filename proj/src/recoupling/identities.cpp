#include "recoupling/identities.hpp"

#include <map>
#include <mutex>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wb {

namespace {

// dense memo for 3j values; arguments stay tiny in the suite
struct Key3j {
    int j1, j2, j3, m1, m2;
    bool operator<(const Key3j& o) const {
        return std::tie(j1, j2, j3, m1, m2) < std::tie(o.j1, o.j2, o.j3, o.m1, o.m2);
    }
};

class ThreeJCache {
public:
    SqrtRational get(Spin j1, Spin j2, Spin j3, int tm1, int tm2, int tm3) {
        if (tm1 + tm2 + tm3 != 0) return SqrtRational::zero();
        // formal sums hit (j, m) slots that carry no state; those terms vanish
        if (std::abs(tm1) > j1.twice || std::abs(tm2) > j2.twice || std::abs(tm3) > j3.twice)
            return SqrtRational::zero();
        if ((j1.twice - tm1) % 2 || (j2.twice - tm2) % 2 || (j3.twice - tm3) % 2)
            return SqrtRational::zero();
        Key3j k{j1.twice, j2.twice, j3.twice, tm1, tm2};
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(k);
            if (it != memo_.end()) return it->second;
        }
        SqrtRational v = wigner_3j(j1, j2, j3, tm1, tm2, tm3);
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(k, v);
        return v;
    }

private:
    std::map<Key3j, SqrtRational> memo_;
    std::mutex mu_;
};

ThreeJCache g_cache;

std::string spins_str(std::initializer_list<int> twice) {
    std::ostringstream os;
    bool first = true;
    for (int t : twice) {
        if (!first) os << " ";
        first = false;
        if (t % 2 == 0)
            os << t / 2;
        else
            os << t << "/2";
    }
    return os.str();
}

void record(IdentityReport& rep, const std::string& id, const std::string& inst, const RadicalSum& lhs,
            const RadicalSum& rhs, double tol) {
    RadicalSum diff = lhs - rhs;
    IdentityInstance ii;
    ii.identity = id;
    ii.instance = inst;
    ii.exact = true;
    ii.residual = diff.to_double();
    ii.pass = diff.is_zero() || std::abs(ii.residual) <= tol;
    if (!diff.is_zero()) ii.exact = false;
    rep.instances.push_back(std::move(ii));
}

} // namespace

IdentityReport identity_suite(Spin jmax, double tol) {
    IdentityReport rep;
    const int J = jmax.twice;

    // orthonormality, fixed (j1, j2): (2j3+1) sum_{m1,m2} 3j 3j = delta delta
    for (int j1 = 0; j1 <= J; ++j1)
        for (int j2 = 0; j2 <= J; ++j2)
            for (int j3 = std::abs(j1 - j2); j3 <= std::min(J, j1 + j2); j3 += 2)
                for (int j3p = std::abs(j1 - j2); j3p <= std::min(J, j1 + j2); j3p += 2) {
                    if ((j1 + j2 + j3) % 2 || (j1 + j2 + j3p) % 2) continue;
                    for (int m3 = -j3; m3 <= j3; m3 += 2)
                        for (int m3p = -j3p; m3p <= j3p; m3p += 2) {
                            RadicalSum lhs;
                            for (int m1 = -j1; m1 <= j1; m1 += 2) {
                                int m2 = -m3 - m1;
                                if (std::abs(m2) > j2) continue;
                                SqrtRational a = g_cache.get(Spin(j1), Spin(j2), Spin(j3), m1, m2, m3);
                                SqrtRational b = g_cache.get(Spin(j1), Spin(j2), Spin(j3p), m1, m2, m3p);
                                lhs.add_scaled(Rational(j3 + 1), a * b);
                            }
                            RadicalSum rhs;
                            if (j3 == j3p && m3 == m3p) rhs.add(SqrtRational::of_rational(Rational(1)));
                            record(rep, "3j orthonormality (sum over m)",
                                   "j=(" + spins_str({j1, j2, j3, j3p}) + ") m3=" + spins_str({m3, m3p}),
                                   lhs, rhs, tol);
                        }
                }

    // completeness: sum_{j3, m3} (2j3+1) 3j 3j = delta_{m1 m1'} delta_{m2 m2'}
    for (int j1 = 0; j1 <= J; ++j1)
        for (int j2 = 0; j2 <= J; ++j2)
            for (int m1 = -j1; m1 <= j1; m1 += 2)
                for (int m2 = -j2; m2 <= j2; m2 += 2)
                    for (int m1p = -j1; m1p <= j1; m1p += 2)
                        for (int m2p = -j2; m2p <= j2; m2p += 2) {
                            if (m1 + m2 != m1p + m2p) continue; // both sides vanish termwise
                            RadicalSum lhs;
                            int m3 = -m1 - m2;
                            for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; j3 += 2) {
                                if ((j1 + j2 + j3) % 2 || std::abs(m3) > j3) continue;
                                SqrtRational a = g_cache.get(Spin(j1), Spin(j2), Spin(j3), m1, m2, m3);
                                SqrtRational b = g_cache.get(Spin(j1), Spin(j2), Spin(j3), m1p, m2p, m3);
                                lhs.add_scaled(Rational(j3 + 1), a * b);
                            }
                            RadicalSum rhs;
                            if (m1 == m1p && m2 == m2p) rhs.add(SqrtRational::of_rational(Rational(1)));
                            record(rep, "3j completeness (sum over j3)",
                                   "j=(" + spins_str({j1, j2}) + ") m=(" + spins_str({m1, m2, m1p, m2p}) + ")",
                                   lhs, rhs, tol);
                        }

    // sum_m (-1)^{j-m} 3j(j,j,k; m,-m,0) = sqrt(2j+1) delta_{k,0}
    for (int j = 0; j <= J; ++j)
        for (int k = 0; k <= std::min(J, 2 * j); k += 2) {
            RadicalSum lhs;
            for (int m = -j; m <= j; m += 2) {
                SqrtRational v = g_cache.get(Spin(j), Spin(j), Spin(k), m, -m, 0);
                if ((j - m) / 2 % 2) v = -v;
                lhs.add(v);
            }
            RadicalSum rhs;
            if (k == 0) rhs.add(SqrtRational::sqrt_of(Rational(j + 1)));
            record(rep, "3j alternating sum (m3=0)", "j k=(" + spins_str({j, k}) + ")", lhs, rhs, tol);
        }

    // 3j with middle spin 0
    for (int j1 = 0; j1 <= J; ++j1)
        for (int j3 = 0; j3 <= J; ++j3)
            for (int m1 = -j1; m1 <= j1; m1 += 2) {
                int m3 = -m1;
                if (std::abs(m3) > j3) continue;
                RadicalSum lhs(g_cache.get(Spin(j1), Spin(0), Spin(j3), m1, 0, m3));
                RadicalSum rhs;
                if (j1 == j3) {
                    SqrtRational v = SqrtRational::sqrt_of(Rational(1) / Rational(j1 + 1));
                    if ((j1 + m1) / 2 % 2) v = -v;
                    rhs.add(v);
                }
                record(rep, "3j with vanishing middle spin", "j=(" + spins_str({j1, j3}) + ") m1=" + spins_str({m1}),
                       lhs, rhs, tol);
            }

    // contraction of three 3j onto 6j times 3j
    {
        std::vector<std::array<int, 6>> configs;
        for (int j1 = 0; j1 <= J; ++j1)
            for (int j2 = 0; j2 <= J; ++j2)
                for (int j3 = 0; j3 <= J; ++j3)
                    for (int k1 = 0; k1 <= J; ++k1)
                        for (int k2 = 0; k2 <= J; ++k2)
                            for (int k3 = 0; k3 <= J; ++k3) {
                                if (!triangle_ok(Spin(j1), Spin(j2), Spin(j3))) continue;
                                if (!triangle_ok(Spin(j1), Spin(k2), Spin(k3))) continue;
                                if (!triangle_ok(Spin(k1), Spin(j2), Spin(k3))) continue;
                                if (!triangle_ok(Spin(k1), Spin(k2), Spin(j3))) continue;
                                configs.push_back({j1, j2, j3, k1, k2, k3});
                            }
        std::vector<IdentityReport> partial((size_t)std::max(1, (int)configs.size()));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long ci = 0; ci < (long)configs.size(); ++ci) {
            auto [j1, j2, j3, k1, k2, k3] = configs[ci];
            IdentityReport& local = partial[ci];
            SqrtRational sixj = wigner_6j(Spin(j1), Spin(j2), Spin(j3), Spin(k1), Spin(k2), Spin(k3));
            for (int m1 = -j1; m1 <= j1; m1 += 2)
                for (int m2 = -j2; m2 <= j2; m2 += 2) {
                    int m3 = -m1 - m2;
                    if (std::abs(m3) > j3) continue;
                    RadicalSum lhs;
                    for (int n1 = -k1; n1 <= k1; n1 += 2)
                        for (int n2 = -k2; n2 <= k2; n2 += 2) {
                            // third 3j fixes n3 via -n1 + n2 + m3 ... each 3j
                            // has its own closure; solve from the first one
                            int n3 = -(m1 - n2); // m1 - n2 + n3 = 0
                            if (std::abs(n3) > k3) continue;
                            if (n1 + m2 - n3 != 0) continue;
                            if (-n1 + n2 + m3 != 0) continue;
                            SqrtRational p = g_cache.get(Spin(j1), Spin(k2), Spin(k3), m1, -n2, n3) *
                                             g_cache.get(Spin(k1), Spin(j2), Spin(k3), n1, m2, -n3) *
                                             g_cache.get(Spin(k1), Spin(k2), Spin(j3), -n1, n2, m3);
                            if (p.is_zero()) continue;
                            int tsum = (k1 - n1) + (k2 - n2) + (k3 - n3);
                            if (tsum % 2) throw std::logic_error("3jsum6j: non-integer phase");
                            if ((tsum / 2) % 2) p = -p;
                            lhs.add(p);
                        }
                    RadicalSum rhs(sixj * g_cache.get(Spin(j1), Spin(j2), Spin(j3), m1, m2, m3));
                    record(local, "3j contraction onto 6j",
                           "(j|k)=(" + spins_str({j1, j2, j3, k1, k2, k3}) + ") m=(" + spins_str({m1, m2, m3}) + ")",
                           lhs, rhs, tol);
                }
        }
        for (auto& p : partial)
            rep.instances.insert(rep.instances.end(), p.instances.begin(), p.instances.end());
    }

    // 6j with one vanishing argument
    for (int j1 = 0; j1 <= J; ++j1)
        for (int j2 = 0; j2 <= J; ++j2)
            for (int j3 = 0; j3 <= J; ++j3) {
                RadicalSum lhs(wigner_6j(Spin(j1), Spin(j2), Spin(j3), Spin(j2), Spin(j1), Spin(0)));
                RadicalSum rhs;
                if (triangle_ok(Spin(j1), Spin(j2), Spin(j3))) {
                    SqrtRational v = SqrtRational::sqrt_of(Rational(1) / (Rational(j1 + 1) * Rational(j2 + 1)));
                    if ((j1 + j2 + j3) / 2 % 2) v = -v;
                    rhs.add(v);
                }
                record(rep, "6j with vanishing spin", "j=(" + spins_str({j1, j2, j3}) + ")", lhs, rhs, tol);
            }

    // odd permutation phase and global sign flip of magnetic indices
    for (int j1 = 0; j1 <= J; ++j1)
        for (int j2 = 0; j2 <= J; ++j2)
            for (int j3 = std::abs(j1 - j2); j3 <= std::min(J, j1 + j2); j3 += 2) {
                if ((j1 + j2 + j3) % 2) continue;
                for (int m1 = -j1; m1 <= j1; m1 += 2)
                    for (int m2 = -j2; m2 <= j2; m2 += 2) {
                        int m3 = -m1 - m2;
                        if (std::abs(m3) > j3) continue;
                        SqrtRational base = g_cache.get(Spin(j1), Spin(j2), Spin(j3), m1, m2, m3);
                        SqrtRational swapped = g_cache.get(Spin(j2), Spin(j1), Spin(j3), m2, m1, m3);
                        SqrtRational flipped = wigner_3j(Spin(j1), Spin(j2), Spin(j3), -m1, -m2, -m3);
                        SqrtRational phased = ((j1 + j2 + j3) / 2 % 2) ? -base : base;
                        record(rep, "3j odd permutation phase",
                               "j=(" + spins_str({j1, j2, j3}) + ") m=(" + spins_str({m1, m2}) + ")",
                               RadicalSum(swapped), RadicalSum(phased), tol);
                        record(rep, "3j magnetic sign flip",
                               "j=(" + spins_str({j1, j2, j3}) + ") m=(" + spins_str({m1, m2}) + ")",
                               RadicalSum(flipped), RadicalSum(phased), tol);
                    }
            }

    // definition-sum vs closed form for the 6j, spins <= 3/2
    {
        int cap = std::min(J, 3);
        for (int j1 = 0; j1 <= cap; ++j1)
            for (int j2 = 0; j2 <= cap; ++j2)
                for (int j3 = 0; j3 <= cap; ++j3)
                    for (int j4 = 0; j4 <= cap; ++j4)
                        for (int j5 = 0; j5 <= cap; ++j5)
                            for (int j6 = 0; j6 <= cap; ++j6) {
                                SqrtRational closed =
                                    wigner_6j(Spin(j1), Spin(j2), Spin(j3), Spin(j4), Spin(j5), Spin(j6));
                                SqrtRational def =
                                    wigner_6j_definition(Spin(j1), Spin(j2), Spin(j3), Spin(j4), Spin(j5), Spin(j6));
                                record(rep, "6j definition vs closed form",
                                       "j=(" + spins_str({j1, j2, j3, j4, j5, j6}) + ")", RadicalSum(def),
                                       RadicalSum(closed), tol);
                            }
    }

    // 6j column exchange symmetry (sampled: all tuples <= 1)
    for (int j1 = 0; j1 <= std::min(J, 2); ++j1)
        for (int j2 = 0; j2 <= std::min(J, 2); ++j2)
            for (int j3 = 0; j3 <= std::min(J, 2); ++j3)
                for (int j4 = 0; j4 <= std::min(J, 2); ++j4)
                    for (int j5 = 0; j5 <= std::min(J, 2); ++j5)
                        for (int j6 = 0; j6 <= std::min(J, 2); ++j6) {
                            SqrtRational a = wigner_6j(Spin(j1), Spin(j2), Spin(j3), Spin(j4), Spin(j5), Spin(j6));
                            SqrtRational b = wigner_6j(Spin(j2), Spin(j1), Spin(j3), Spin(j5), Spin(j4), Spin(j6));
                            record(rep, "6j column exchange", "j=(" + spins_str({j1, j2, j3, j4, j5, j6}) + ")",
                                   RadicalSum(a), RadicalSum(b), tol);
                        }

    return rep;
}

} // namespace wb
