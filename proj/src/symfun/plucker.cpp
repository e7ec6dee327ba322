#include "symfun/plucker.hpp"

#include "symfun/characters.hpp"

namespace wb {

TBPoly content_product_coeff(const Partition& lam, bool deformed) {
    TBPoly prod{BPoly(1)};
    for (unsigned r = 0; r < lam.length(); ++r)
        for (unsigned c = 0; c < lam.parts()[r]; ++c) {
            BPoly content;
            if (deformed) {
                // (1+b)(j-1) - (i-1), reducing to j - i at b = 0
                content = (BPoly::var() + BPoly(1)) * BPoly((int)c) - BPoly((int)r);
            } else {
                content = BPoly((int)c - (int)r);
            }
            prod *= TBPoly(BPoly(1)) + TBPoly::term(1, content);
        }
    return prod;
}

TBPoly content_product_coordinate(const Partition& lam, bool deformed) {
    Rational dim_over_fact = Rational(dimension_sym(lam)) / Rational(factorial(lam.size()));
    return content_product_coeff(lam, deformed) * BPoly(dim_over_fact);
}

} // namespace wb
