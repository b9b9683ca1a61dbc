#include "higgsgrass/pointsolve.hpp"

#include "higgsgrass/errors.hpp"
#include "higgsgrass/groebner.hpp"
#include "higgsgrass/polyalg.hpp"

#include <algorithm>
#include <map>

namespace higgsgrass {

namespace {

std::optional<std::vector<std::vector<Rat>>> solve_rec(const VarSetPtr& vars,
                                                       const std::vector<Poly>& gens) {
    const std::size_t m = vars->size();
    if (m == 0) {
        for (const auto& g : gens)
            if (!g.is_zero()) return std::vector<std::vector<Rat>>{};
        return std::vector<std::vector<Rat>>{{}};
    }

    Ideal I(vars, gens, MonomialOrder::lex());
    const auto& basis = I.groebner().basis;
    if (basis.empty()) return std::nullopt; // zero ideal: not zero-dimensional
    if (basis.size() == 1 && basis[0].is_constant()) return std::vector<std::vector<Rat>>{};

    // Under lex (x0 > ... > x_{m-1}) the eliminant in the last variable is the
    // basis element using that variable alone.
    const std::size_t last = m - 1;
    const Poly* eliminant = nullptr;
    for (const auto& g : basis) {
        bool only_last = true;
        for (std::size_t v = 0; v + 1 < m && only_last; ++v)
            if (g.uses_var(v)) only_last = false;
        if (only_last && g.uses_var(last)) {
            eliminant = &g;
            break;
        }
    }
    if (!eliminant) return std::nullopt; // positive-dimensional in the last variable

    auto roots = rational_roots(*eliminant, last);
    if (roots.residual_degree > 0) return std::nullopt; // irrational coordinates

    std::vector<std::vector<Rat>> points;
    for (const auto& [root, mult] : roots.roots) {
        (void)mult;
        std::map<std::string, Rat> binding{{vars->name(last), root}};
        std::vector<Poly> sub;
        for (const auto& g : basis) {
            Poly e = g.evaluate(binding);
            if (!e.is_zero()) sub.push_back(std::move(e));
        }
        std::vector<std::string> rest_names(vars->names().begin(), vars->names().end() - 1);
        VarSetPtr rest = VarSet::make(rest_names);
        for (auto& g : sub) g = g.embedded(rest);
        auto inner = solve_rec(rest, sub);
        if (!inner) return std::nullopt;
        for (auto& p : *inner) {
            p.push_back(root);
            points.push_back(std::move(p));
        }
    }
    return points;
}

} // namespace

std::optional<std::vector<std::vector<Rat>>> affine_rational_points(const Ideal& I) {
    return solve_rec(I.vars(), I.generators());
}

std::optional<std::vector<std::vector<Rat>>>
product_projective_points(const Ideal& I, const std::vector<std::vector<std::string>>& groups) {
    const VarSetPtr& vars = I.vars();
    std::vector<std::vector<std::size_t>> gidx;
    for (const auto& g : groups) {
        std::vector<std::size_t> idx;
        for (const auto& name : g) {
            auto i = vars->index_of(name);
            if (!i) throw DomainError("product_projective_points: unknown variable '" + name + "'");
            idx.push_back(*i);
        }
        gidx.push_back(std::move(idx));
    }

    // One cell per choice of leading coordinate in each factor: the leader is
    // set to 1 and everything before it in the group to 0, so every projective
    // point lands in exactly one cell.
    std::vector<std::vector<Rat>> points;
    std::vector<std::size_t> leader(gidx.size(), 0);
    for (;;) {
        std::map<std::string, Rat> binding;
        for (std::size_t g = 0; g < gidx.size(); ++g) {
            for (std::size_t k = 0; k < leader[g]; ++k) binding[vars->name(gidx[g][k])] = Rat(0);
            binding[vars->name(gidx[g][leader[g]])] = Rat(1);
        }
        std::vector<std::string> rest_names;
        for (const auto& name : vars->names())
            if (!binding.count(name)) rest_names.push_back(name);
        VarSetPtr rest = VarSet::make(rest_names);
        std::vector<Poly> sub;
        bool inconsistent = false;
        for (const auto& gen : I.generators()) {
            Poly e = gen.evaluate(binding).embedded(rest);
            if (e.is_zero()) continue;
            if (e.is_constant()) {
                inconsistent = true;
                break;
            }
            sub.push_back(std::move(e));
        }
        if (!inconsistent) {
            auto cell = solve_rec(rest, sub);
            if (!cell) return std::nullopt;
            for (const auto& sol : *cell) {
                std::vector<Rat> full(vars->size(), Rat(0));
                for (std::size_t k = 0; k < rest->size(); ++k)
                    full[*vars->index_of(rest->name(k))] = sol[k];
                for (const auto& [name, val] : binding) full[*vars->index_of(name)] = val;
                points.push_back(std::move(full));
            }
        }
        // next cell
        bool done = true;
        std::size_t g = gidx.size();
        while (g-- > 0) {
            if (++leader[g] < gidx[g].size()) {
                done = false;
                break;
            }
            leader[g] = 0;
        }
        if (done) break;
    }
    return points;
}

} // namespace higgsgrass
