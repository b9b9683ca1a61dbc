#pragma once

#include "higgsgrass/ideal.hpp"

#include <string>
#include <vector>

namespace higgsgrass {

/// Reduced Groebner basis with run statistics.
GBReport groebner_basis(const Ideal& I);

/// Unique remainder of p modulo the reduced Groebner basis of I.
Poly normal_form(const Poly& p, const Ideal& I);

bool ideal_member(const Poly& p, const Ideal& I);

/// True iff the reduced Groebner bases coincide under a common order (the
/// left ideal's order).
bool ideal_equal(const Ideal& I, const Ideal& J);

/// Intersection via elimination of one fresh auxiliary variable from
/// w*I + (1-w)*J under an elimination-block order.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

/// Rabinowitsch test: p lies in the radical of I iff 1 lies in
/// I + (1 - w*p) for a fresh variable w.
bool radical_member(const Poly& p, const Ideal& I);

bool is_unit_ideal(const Ideal& I);

/// Minimal primes of a squarefree monomial ideal, each generated by
/// variables, by recursive splitting on a generator's variables.
std::vector<Ideal> monomial_minimal_primes(const Ideal& I);

/// Full reduction against an explicit basis (test hook; the basis need not
/// be a Groebner basis).
Poly reduce_against(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& order);

/// A variable name not present in `vars`, of the form prefix, prefix0, ...
std::string fresh_var_name(const VarSet& vars, const std::string& prefix);

} // namespace higgsgrass
