#pragma once

#include "higgsgrass/degree.hpp"
#include "higgsgrass/grass.hpp"
#include "higgsgrass/higgs.hpp"

#include <optional>

namespace higgsgrass {

/// The Simpson system of affine n-space: rank n+1, phi^(h) has a single 1 in
/// entry (1, h+1).
HiggsField simpson_system(int n);

/// Certificate that the radical of the d-th Higgs Grassmannian ideal of the
/// Simpson system is the Schubert ideal (p_K | K in {2..n+1}, |K| = d), plus
/// Pluecker relations when d >= 2.
struct SimpsonGrassReport {
    GrassIdeal grass;
    Ideal schubert;
    bool ideal_in_schubert = false;
    bool schubert_in_radical = false;
    int max_power = 0;
    bool certified() const { return ideal_in_schubert && schubert_in_radical; }
};

SimpsonGrassReport simpson_grass_check(int n, int d, int max_power = 4);

/// Flag scheme ideal for a rank-3 field on the affine line: the rank-1 ideal
/// in z's, the dual rank-1 ideal in y's, and the incidence form sum y_i z_i.
struct FlagIdeal {
    Ideal total;
    Ideal i1;
    Ideal i2;
    Poly incidence;
};

FlagIdeal flag_ideal(const HiggsField& H);

/// Bihomogeneous fiber length over a base point, plus a certificate-based
/// count of support points (nullopt when no linear-generated radical
/// certificate could be assembled).
struct FlagFiberReport {
    std::uint64_t length = 0;
    std::optional<std::uint64_t> point_count;
};

FlagFiberReport flag_fiber_report(const FlagIdeal& F, const Rat& point,
                                  const DegreeOptions& options = {});

/// Canonical generators (p1 e1, p2 e1 + q e2) of a full-rank submodule of
/// R^2 over the univariate ring, p1 and q monic, deg p2 < deg p1.
struct QuotPoint {
    Poly p1, p2, q;
};

struct QuotReport {
    QuotPoint point;
    bool invariant = false; // q in (p1): the submodule is Simpson-invariant
    int colength = 0;       // deg p1 + deg q = deg det
    Ideal i1, i2;           // ((p1), (q)), the nested Hilbert-scheme pair
};

/// Hermite-style column reduction of a nonsingular 2x2 matrix of univariate
/// polynomials whose columns generate the submodule.
QuotReport quot_canonicalize(const PolyMat& M);

} // namespace higgsgrass
