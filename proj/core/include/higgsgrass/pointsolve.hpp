#pragma once

#include "higgsgrass/ideal.hpp"

#include <optional>
#include <vector>

namespace higgsgrass {

/// All rational solutions of a zero-dimensional affine ideal, found by
/// recursive lex elimination and the rational root theorem. Points are
/// coordinate vectors in VarSet order. Returns nullopt when the solution set
/// cannot be certified rational (a univariate eliminant keeps a rootless
/// factor) or is not finite.
std::optional<std::vector<std::vector<Rat>>> affine_rational_points(const Ideal& I);

/// Rational points of a subscheme of a product of projective spaces, one
/// group of homogeneous coordinates per factor. Each point is reported on the
/// full VarSet with its leading nonzero coordinate in every group set to 1.
std::optional<std::vector<std::vector<Rat>>>
product_projective_points(const Ideal& I, const std::vector<std::vector<std::string>>& groups);

} // namespace higgsgrass
