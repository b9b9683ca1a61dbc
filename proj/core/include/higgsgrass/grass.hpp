#pragma once

#include "higgsgrass/higgs.hpp"
#include "higgsgrass/ideal.hpp"

#include <string>
#include <vector>

namespace higgsgrass {

/// Signed resolution of p_{T,i}: zero when i already lies in T, otherwise
/// (-1)^{e(T,i)} p_{T u {i}} with e(T,i) the number of elements of T smaller
/// than i.
struct PlueckerSign {
    int sign = 0;                 // +1, -1, or 0 (absorbed)
    std::vector<int> sorted_set;  // T u {i}, ascending; empty when absorbed
};

PlueckerSign pluecker_sign(const std::vector<int>& T, int i);

/// All k-subsets of {1..r}, ascending lexicographic.
std::vector<std::vector<int>> index_subsets(int r, int k);

/// Canonical Pluecker variable name for a sorted index set, e.g. "p_134".
std::string pluecker_var_name(const std::vector<int>& K);

enum class FiberCoords { vertical, pluecker };

/// Defining ideal of a Higgs Grassmannian inside the Grassmann bundle, in
/// vertical homogeneous coordinates (d = 1) or Pluecker coordinates.
struct GrassIdeal {
    Ideal ideal;
    int d = 1;
    FiberCoords kind = FiberCoords::vertical;
    bool pluecker_relations = false;
    int raw_generator_count = 0;           // before zero generators are dropped
    std::vector<std::string> fiber_vars;   // names, in variable order
};

/// Rank-1 equations of a single matrix: for each i < j the generator
/// sum_k z_k (M_jk z_i - M_ik z_j). The matrix must already live over `vars`,
/// which carries the fiber variables named in `fiber`. Zero generators are
/// kept (the caller decides).
std::vector<Poly> matrix_rank1_equations(const PolyMat& M, const VarSetPtr& vars,
                                         const std::vector<std::string>& fiber);

/// Rank-1 equations: for each h and i < j the generator
/// sum_k z_k (phi_jk z_i - phi_ik z_j). Fiber variables are prefix1..prefixr
/// appended after the base variables.
GrassIdeal rank1_ideal(const HiggsField& H, const std::string& fiber_prefix = "z");

/// Rank-d equations g_{K,T}^(h) in Pluecker coordinates; optionally appends
/// the quadratic Pluecker relations of the Grassmannian (off by default).
GrassIdeal rankd_ideal(const HiggsField& H, int d, bool include_pluecker_relations = false);

/// The quadratic Pluecker relations of Gr(d, r) over `vars` (deduplicated,
/// zero relations dropped).
std::vector<Poly> pluecker_relations(const VarSetPtr& vars, int r, int d);

/// Evaluates the base variables at a rational point; the result is an ideal
/// over the fiber variables only.
Ideal restrict_fiber(const GrassIdeal& G, const std::vector<Rat>& point);

} // namespace higgsgrass
