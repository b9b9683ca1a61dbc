#pragma once

#include "higgsgrass/grass.hpp"
#include "higgsgrass/higgs.hpp"

#include <optional>
#include <string>
#include <utility>

namespace higgsgrass {

enum class Rank2Tag {
    center,           // every matrix is scalar
    vertical,         // gcd of the normalized entries is not a unit
    split_degenerate, // det psi = 0 with two distinct linear factors
    nonreduced,       // discriminant 0
    reducible_square, // discriminant a nonzero square
    irreducible,      // otherwise
};

std::string to_string(Rank2Tag tag);

struct Rank2Class {
    Rank2Tag tag = Rank2Tag::center;
    int which_h = -1;                            // 0-based index of the keyed matrix
    Poly delta;                                  // shift-invariant discriminant
    std::optional<Poly> sqrt_delta;              // when delta is a nonzero square
    std::optional<std::pair<Poly, Poly>> factors; // linear factors of the fiber quadric
    std::optional<Poly> gcd_witness;             // the nonunit gcd in the vertical case
};

/// (phi22 - phi11)^2 + 4 phi12 phi21 of the h-th matrix (0-based); the
/// normalization-invariant form of the discriminant.
Poly discriminant(const HiggsField& H, int which);

/// The trichotomy of the rank-2 classification, keyed on the first nonzero
/// non-central matrix, with exact witnesses.
Rank2Class classify_rank2(const HiggsField& H);

/// Singular locus data for the irreducible case on a curve. `chart` lives in
/// (base, t) with t = z1/z2; `homogeneous` carries the same generators
/// re-homogenized to (z1, z2).
struct SingularLocus {
    Ideal chart;
    Ideal homogeneous;
};

SingularLocus singular_locus_rank2(const HiggsField& H, int which);

} // namespace higgsgrass
