#pragma once

#include "higgsgrass/higgs.hpp"
#include "higgsgrass/ideal.hpp"

#include <utility>
#include <vector>

namespace higgsgrass {

struct JordanBlockSpec {
    Poly lambda; // eigenvalue, a polynomial over the base variables
    int size = 1;
    int mult = 1;
};

/// The symbol ((lambda_v, i_v)^{m_v}): a Jordan type prescribed over the
/// base. (lambda, size) pairs must be pairwise distinct.
struct JordanSpec {
    VarSetPtr base_vars;
    std::vector<JordanBlockSpec> blocks;

    int rank() const;
};

JordanSpec make_jordan_spec(VarSetPtr base_vars, std::vector<JordanBlockSpec> blocks);

/// The index family of the one-eigenvalue proposition.
struct IndexSets {
    std::vector<std::vector<int>> A; // disjoint runs of {1..r}
    std::vector<int> B;              // union of A minus min A
    std::vector<int> C;              // maxima of the A's
};

struct LevelSets {
    std::vector<std::vector<int>> A; // size-i_v prefixes of every larger block
    std::vector<int> L;              // complement of the union of A
    std::vector<int> B;
    std::vector<int> C;
};

struct JordanSetsReport {
    IndexSets global;
    std::vector<LevelSets> level; // indexed v = 1..s (0-based storage)
    int r = 0;
};

/// Computes the global and per-level index sets. Requires block sizes to be
/// strictly decreasing in the stored order.
JordanSetsReport jordan_spec_sets(const JordanSpec& spec);

/// Ideal of 2x2 minors of the concatenated matrix M_A over z1..zr; size-1
/// blocks contribute the empty matrix.
Ideal sv_ideal(const std::vector<std::vector<int>>& A, int r);

/// Substitutes the cone-over-Segre-Veronese parametrization into every
/// generator of sv_ideal and reports whether all of them vanish. Requires all
/// blocks of equal size.
bool sv_parametrization_check(const std::vector<std::vector<int>>& A, int r);

/// Single-Jordan-block ideal over z1..zr: the rational-normal-curve minors
/// plus (z_i z_r | i = 2..r).
Ideal single_block_ideal(int r);

/// The displayed one-eigenvalue ideal: (z_b z_c | b in B, c in C) + sv_ideal.
/// All blocks must share one eigenvalue polynomial.
Ideal predicted_full_ideal(const JordanSpec& spec);

struct ComponentIdeal {
    int v = 0; // stratum index, 1-based
    Ideal ideal;
    int dimension = 0;    // d_v = -1 + sum_{t<=v} m_t
    int fiber_degree = 0; // curvilinear degree i_v
};

/// The embedded component I_{V_v} = (z_j | j in L_v) + (z_b z_c) + sv(A_v).
ComponentIdeal predicted_component_ideal(const JordanSpec& spec, int v);

/// One component per eigenvalue: its one-eigenvalue ideal with the
/// complementary variables adjoined as linear generators. Eigenvalue
/// polynomials must be pairwise distinct.
std::vector<std::pair<Poly, Ideal>> decompose_by_eigenvalue(const JordanSpec& spec);

struct MorphismClassification {
    bool finite = false;  // no eigenvalue repeats across Jordan blocks
    bool reduced = false; // all block sizes equal 1
};

MorphismClassification classify_morphism(const JordanSpec& spec);

/// Explicit block matrix over the base variables: blocks concatenated in spec
/// order, upper triangular with 1 on the superdiagonal.
PolyMat jordan_matrix(const JordanSpec& spec);

/// The n=1 Higgs field carrying jordan_matrix (base must be one variable).
HiggsField jordan_field(const JordanSpec& spec);

} // namespace higgsgrass
