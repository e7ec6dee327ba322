#pragma once

#include "symfun/partition.hpp"

#include <vector>

namespace wb {

// Number of labeled k-constellations of size n with vertex profiles
// lambda_0 .. lambda_k and face profile nu (all partitions of the same n):
//   (n!)^{k+1} / (z_{l0} ... z_nu) * sum_mu chi^mu_{l0} ... chi^mu_nu / d_mu^k.
// Always a nonnegative integer.
Rational frobenius_count(unsigned k, const std::vector<Partition>& vertex_profiles,
                         const Partition& face_profile);

// Labeled maps with vertex profile lambda and face profile nu, both
// partitions of 2E: the k = 1 case with middle class [2^E].
Rational labeled_map_count(const Partition& lam, const Partition& nu);

// Connected labeled maps with the given profiles, extracted by the
// component-of-a-marked-half-edge recursion.
Rational connected_labeled_map_count(const Partition& lam, const Partition& nu);

// Rooted planar maps with E edges obtained from the character formula:
// connected counts restricted by Euler's relation, divided by (2E-1)!.
Integer frobenius_rooted_planar_maps(unsigned edges);

} // namespace wb
