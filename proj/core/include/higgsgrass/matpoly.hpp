#pragma once

#include "higgsgrass/poly.hpp"

#include <string>
#include <vector>

namespace higgsgrass {

/// Row-major square or rectangular matrix of polynomials.
using PolyMat = std::vector<std::vector<Poly>>;

PolyMat mat_identity(const VarSetPtr& vars, std::size_t r);
PolyMat mat_zero(const VarSetPtr& vars, std::size_t rows, std::size_t cols);
PolyMat mat_add(const PolyMat& a, const PolyMat& b);
PolyMat mat_sub(const PolyMat& a, const PolyMat& b);
PolyMat mat_mul(const PolyMat& a, const PolyMat& b);
PolyMat mat_scale(const PolyMat& a, const Poly& c);
PolyMat mat_transpose(const PolyMat& a);
PolyMat mat_pow(const PolyMat& a, std::uint32_t e);
bool mat_is_zero(const PolyMat& a);
bool mat_equal(const PolyMat& a, const PolyMat& b);
PolyMat commutator(const PolyMat& a, const PolyMat& b);

/// Re-expresses every entry over `target` (see Poly::embedded).
PolyMat mat_embedded(const PolyMat& a, const VarSetPtr& target);

/// Exact determinant by Laplace expansion with column-subset memoization.
Poly det(const PolyMat& m);

/// det(var*I - M), expanded exactly over M's variables extended by `var`.
/// `var` must not already be one of M's variables.
Poly char_poly(const PolyMat& m, const std::string& var);

} // namespace higgsgrass
