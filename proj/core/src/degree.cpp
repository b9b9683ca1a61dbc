#include "higgsgrass/degree.hpp"

#include "higgsgrass/errors.hpp"

#include <algorithm>
#include <random>

namespace higgsgrass {

namespace {

/// Count monomials not divisible by any of `lms`, by DFS over the exponent
/// box bounded by the minimal pure powers; subtrees already divisible are
/// pruned.
std::uint64_t count_standard(const std::vector<Mono>& lms, const std::vector<std::uint32_t>& bound,
                             Mono& cur, std::size_t var) {
    for (const auto& lm : lms)
        if (lm.divides(cur)) return 0;
    if (var == bound.size()) return 1;
    std::uint64_t total = 0;
    for (std::uint32_t e = 0; e < bound[var]; ++e) {
        cur.set_exp(var, e);
        total += count_standard(lms, bound, cur, var + 1);
    }
    cur.set_exp(var, 0);
    return total;
}

} // namespace

std::uint64_t affine_colength(const Ideal& I) {
    const auto& basis = I.groebner().basis;
    if (basis.size() == 1 && basis[0].is_constant()) return 0;
    const std::size_t n = I.vars()->size();
    std::vector<Mono> lms;
    lms.reserve(basis.size());
    for (const auto& g : basis) lms.push_back(g.leading_term(I.order()).mono);

    // Finite quotient iff every variable has a pure power among the leading
    // monomials.
    std::vector<std::uint32_t> bound(n, 0);
    for (const auto& lm : lms) {
        std::size_t nz = 0, which = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lm.exp(i) != 0) {
                ++nz;
                which = i;
            }
        if (nz == 1) {
            std::uint32_t e = lm.exp(which);
            if (bound[which] == 0 || e < bound[which]) bound[which] = e;
        }
        if (nz == 0) return 0; // constant leading monomial: unit ideal
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] == 0)
            throw DomainError("affine_colength: quotient is not zero-dimensional (variable '" +
                              I.vars()->name(i) + "' has no pure-power leading monomial)");

    Mono cur(n);
    return count_standard(lms, bound, cur, 0);
}

std::uint64_t projective_degree(const Ideal& I,
                                const std::vector<std::vector<std::string>>& groups,
                                const DegreeOptions& options) {
    const VarSetPtr& vars = I.vars();
    if (groups.empty()) throw DomainError("projective_degree: no variable groups");
    std::vector<std::vector<std::size_t>> group_idx;
    std::vector<bool> covered(vars->size(), false);
    for (const auto& g : groups) {
        std::vector<std::size_t> idx;
        for (const auto& name : g) {
            auto i = vars->index_of(name);
            if (!i) throw DomainError("projective_degree: unknown variable '" + name + "'");
            if (covered[*i]) throw DomainError("projective_degree: overlapping variable groups");
            covered[*i] = true;
            idx.push_back(*i);
        }
        if (idx.empty()) throw DomainError("projective_degree: empty variable group");
        group_idx.push_back(std::move(idx));
    }
    for (const auto& gen : I.generators()) {
        for (std::size_t i = 0; i < vars->size(); ++i)
            if (!covered[i] && gen.uses_var(i))
                throw DomainError("projective_degree: generator uses ungrouped variable '" +
                                  vars->name(i) + "'");
        for (const auto& idx : group_idx) {
            std::uint64_t d0 = 0;
            bool first = true;
            for (const auto& t : gen.terms()) {
                std::uint64_t d = 0;
                for (auto i : idx) d += t.mono.exp(i);
                if (first) {
                    d0 = d;
                    first = false;
                } else if (d != d0) {
                    throw DomainError("projective_degree: generator not homogeneous in a group: " +
                                      gen.to_string());
                }
            }
        }
    }

    std::mt19937_64 rng(options.seed);
    auto draw_colength = [&]() {
        std::vector<Poly> gens = I.generators();
        for (const auto& idx : group_idx) {
            Poly form = Poly::constant(vars, Rat(-1));
            for (auto i : idx) {
                long c = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(options.coeff_bound));
                if (rng() & 1u) c = -c;
                form += Poly::variable(vars, i).scaled(Rat(c));
            }
            gens.push_back(std::move(form));
        }
        return affine_colength(Ideal(vars, std::move(gens), MonomialOrder::grevlex()));
    };

    for (int attempt = 0; attempt <= options.retries; ++attempt) {
        std::uint64_t a = draw_colength();
        std::uint64_t b = draw_colength();
        if (a == b) return a;
    }
    throw DomainError("projective_degree: independent dehomogenizations keep disagreeing "
                      "(support may meet the random hyperplanes)");
}

} // namespace higgsgrass
