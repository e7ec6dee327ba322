#pragma once

#include "core/poly1.hpp"

#include <vector>

namespace wb {

// m_n = 2 * 3^n * Cat_n / (n+2), the number of rooted planar maps with n edges.
Integer tutte_closed_form(unsigned n);

using XPoly1 = Poly1<Rational>;

// Order-by-order solution of the root-edge-deletion equation
//   M(t,x) = 1 + t x^2 M(t,x)^2 + t x (x M(t,x) - M(t,1)) / (x - 1).
// Returns P_0 .. P_nmax with m_n = P_n(1); the division by (x-1) is exact at
// every order.
std::vector<XPoly1> tutte_catalytic(unsigned nmax);

} // namespace wb
