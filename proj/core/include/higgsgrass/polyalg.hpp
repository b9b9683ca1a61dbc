#pragma once

#include "higgsgrass/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace higgsgrass {

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor, computed by recursive content/primitive-part
/// splitting with a subresultant PRS on the main variable (the last variable,
/// in VarSet order, used by either input). Result is grevlex-monic; gcd(0,0)
/// is 0.
Poly gcd_multivariate(const Poly& a, const Poly& b);

/// Exact square root: returns s with s*s == p and positive grevlex-leading
/// coefficient, or nullopt when no such polynomial exists.
std::optional<Poly> poly_square_root(const Poly& p);

// -- univariate views ---------------------------------------------------

/// Dense coefficient list c0..cd of p viewed as univariate in `var`; the
/// entries are polynomials free of `var`.
std::vector<Poly> coefficients_in(const Poly& p, std::size_t var);

/// Coefficient of var^k.
Poly coefficient_of_power(const Poly& p, std::size_t var, std::uint32_t k);

/// Quotient and remainder of a by b as univariate polynomials in `var` whose
/// other coefficients are rational (both inputs must use only `var`).
std::pair<Poly, Poly> divmod_univariate(const Poly& a, const Poly& b, std::size_t var);

/// Value of a univariate polynomial at a rational point.
Rat evaluate_univariate(const Poly& p, std::size_t var, const Rat& x);

struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots; // (root, multiplicity)
    std::uint32_t residual_degree = 0;      // degree left after dividing roots out
    Poly residual;                          // the rootless cofactor
};

/// All rational roots of a nonzero univariate polynomial, by the rational
/// root theorem on the integer-cleared coefficients.
RationalRoots rational_roots(const Poly& p, std::size_t var);

} // namespace higgsgrass
