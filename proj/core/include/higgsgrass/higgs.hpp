#pragma once

#include "higgsgrass/matpoly.hpp"

#include <utility>
#include <vector>

namespace higgsgrass {

/// A Higgs bundle in coordinates: n pairwise-commuting r x r matrices of
/// polynomials over the base variables. Construct through validate_higgs.
struct HiggsField {
    int n = 0;
    int r = 0;
    VarSetPtr base_vars;
    std::vector<PolyMat> matrices; // indexed h = 0..n-1
};

/// Checks shapes and that all pairwise commutators vanish identically; the
/// error names the offending pair (1-based) and a nonzero entry.
HiggsField validate_higgs(std::vector<PolyMat> matrices, VarSetPtr base_vars);

/// Shifts each matrix by -eta_h * I. Diagonal shifts define the same
/// subschemes of the Grassmann bundles.
HiggsField normalize_trace(const HiggsField& H, const std::vector<Poly>& eta);

/// The field acting on the dual bundle: every matrix transposed.
HiggsField transpose_field(const HiggsField& H);

/// Witness that a matrix commuting with a single Jordan block is a polynomial
/// in it: T = sum mu[k] * A^k with p(t) = sum mu[k] t^k.
struct ToeplitzWitness {
    std::vector<Poly> mu;
    Poly lambda;
    bool mu1_is_zero = false; // mu[1] = p'(lambda)
};

/// A must be lambda*I + N with N the nilpotent Jordan block; T must commute
/// with A. Returns the coefficients of the interpolating polynomial and
/// reports whether p'(lambda) vanishes identically.
ToeplitzWitness toeplitz_decompose(const PolyMat& A, const PolyMat& T);

struct JordanBlock {
    Rat eigenvalue;
    int size = 0;
    int multiplicity = 0;
};
using JordanType = std::vector<JordanBlock>;

/// Jordan type of the h-th matrix (0-based) evaluated at a rational base
/// point. The characteristic polynomial must split over Q; otherwise the
/// error names the rootless residual factor.
JordanType jordan_type_at_point(const HiggsField& H, int which, const std::vector<Rat>& point);

/// For commuting nonzero 2x2 matrices with zero (1,1) entries, produces
/// nonzero (u, v) with v*U == u*V exactly.
std::pair<Poly, Poly> proportionality_2x2(const PolyMat& U, const PolyMat& V);

} // namespace higgsgrass
