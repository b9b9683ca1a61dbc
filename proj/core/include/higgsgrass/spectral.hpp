#pragma once

#include "higgsgrass/higgs.hpp"
#include "higgsgrass/ideal.hpp"

#include <cstdint>
#include <vector>

namespace higgsgrass {

/// Spectral-cover ideal over base_vars + l1..ln, the l_i being the
/// tautological coefficients of lambda = sum l_i dx_i. One generator per
/// degree-r monomial in the formal dx's, indexed by its exponent vector (in
/// descending lexicographic order); identically zero coefficients stay in
/// `indexed_generators` but not in `ideal`.
struct SpectralIdeal {
    Ideal ideal;
    std::vector<std::pair<std::vector<std::uint32_t>, Poly>> indexed_generators;
    int r = 0;
    int n = 0;
};

/// Coefficients of det((sum l_i d_i) I - sum phi^(i) d_i) by d-monomial; the
/// scaffolding d's never appear in the output.
SpectralIdeal spectral_ideal(const HiggsField& H);

/// Affine colength of the fiber of the spectral cover over a rational base
/// point (count of standard monomials in the l's).
std::uint64_t spectral_fiber_degree(const SpectralIdeal& S, const std::vector<Rat>& point);

/// Certifies sqrt(I) = P for P generated by polynomials of degree <= 1
/// (prime by construction): checks I subset P and that every generator of P
/// has a power <= max_power lying in I.
bool certify_radical(const Ideal& I, const Ideal& P, int max_power);

} // namespace higgsgrass
