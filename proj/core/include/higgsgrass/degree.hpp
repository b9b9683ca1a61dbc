#pragma once

#include "higgsgrass/ideal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace higgsgrass {

struct DegreeOptions {
    std::uint64_t seed = 0;
    int retries = 5;
    long coeff_bound = 100; // dehomogenization coefficients drawn from +-[1..bound]
};

/// Vector-space dimension of the quotient by a zero-dimensional affine ideal
/// (count of standard monomials of its reduced Groebner basis). Throws
/// DomainError when the quotient is infinite-dimensional.
std::uint64_t affine_colength(const Ideal& I);

/// Length of the zero-dimensional projective (or multi-projective) scheme cut
/// out by I, which must be homogeneous in each variable group. Computed by
/// generic dehomogenization: a random rational linear form in each group is
/// set to 1 and the affine colength taken; two independent draws must agree,
/// with up to `retries` retries before a disagreement error.
std::uint64_t projective_degree(const Ideal& I,
                                const std::vector<std::vector<std::string>>& groups,
                                const DegreeOptions& options = {});

} // namespace higgsgrass
