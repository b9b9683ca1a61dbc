#include "higgsgrass/grass.hpp"

#include "higgsgrass/errors.hpp"

#include <algorithm>
#include <map>

namespace higgsgrass {

PlueckerSign pluecker_sign(const std::vector<int>& T, int i) {
    PlueckerSign out;
    int below = 0;
    for (int t : T) {
        if (t == i) return out; // absorbed: repeated index
        if (t < i) ++below;
    }
    out.sign = (below % 2 == 0) ? 1 : -1;
    out.sorted_set = T;
    out.sorted_set.push_back(i);
    std::sort(out.sorted_set.begin(), out.sorted_set.end());
    return out;
}

std::vector<std::vector<int>> index_subsets(int r, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > r) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == r - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int q = pos + 1; q < k; ++q) cur[q] = cur[q - 1] + 1;
    }
    return out;
}

std::string pluecker_var_name(const std::vector<int>& K) {
    std::string name = "p_";
    for (int k : K) name += std::to_string(k);
    return name;
}

std::vector<Poly> matrix_rank1_equations(const PolyMat& M, const VarSetPtr& vars,
                                         const std::vector<std::string>& fiber) {
    const std::size_t r = M.size();
    if (fiber.size() != r)
        throw DomainError("matrix_rank1_equations: one fiber variable per matrix row expected");
    std::vector<Poly> z;
    for (const auto& name : fiber) z.push_back(Poly::variable(vars, name));
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            Poly g = Poly::zero(vars);
            for (std::size_t k = 0; k < r; ++k)
                g += z[k] * (M[j][k] * z[i] - M[i][k] * z[j]);
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

GrassIdeal rank1_ideal(const HiggsField& H, const std::string& fiber_prefix) {
    const int r = H.r;
    std::vector<std::string> fiber;
    for (int i = 1; i <= r; ++i) fiber.push_back(fiber_prefix + std::to_string(i));
    VarSetPtr vars = VarSet::extend(H.base_vars, fiber);

    std::vector<Poly> gens;
    int raw = 0;
    for (int h = 0; h < H.n; ++h) {
        for (auto& g : matrix_rank1_equations(mat_embedded(H.matrices[h], vars), vars, fiber)) {
            ++raw;
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
    }

    GrassIdeal out{Ideal(vars, std::move(gens)), 1, FiberCoords::vertical, false, raw, fiber};
    return out;
}

std::vector<Poly> pluecker_relations(const VarSetPtr& vars, int r, int d) {
    std::vector<Poly> rels;
    for (const auto& S : index_subsets(r, d - 1)) {
        for (const auto& U : index_subsets(r, d + 1)) {
            Poly rel = Poly::zero(vars);
            int sign = 1;
            for (int j = 0; j < d + 1; ++j, sign = -sign) {
                PlueckerSign ps = pluecker_sign(S, U[j]);
                if (ps.sign == 0) continue;
                std::vector<int> rest;
                for (int q = 0; q < d + 1; ++q)
                    if (q != j) rest.push_back(U[q]);
                Poly term = Poly::variable(vars, pluecker_var_name(ps.sorted_set)) *
                            Poly::variable(vars, pluecker_var_name(rest));
                rel += term.scaled(Rat(sign * ps.sign));
            }
            if (rel.is_zero()) continue;
            if (rel.leading_term().coeff.sign() < 0) rel = -rel;
            rels.push_back(std::move(rel));
        }
    }
    std::sort(rels.begin(), rels.end(),
              [](const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; });
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    return rels;
}

GrassIdeal rankd_ideal(const HiggsField& H, int d, bool include_pluecker_relations) {
    const int r = H.r;
    if (d < 1 || d > r - 1) throw DomainError("rankd_ideal: d must satisfy 1 <= d <= r-1");
    if (d == 1) {
        GrassIdeal out = rank1_ideal(H);
        // Nothing to append: P E carries no Pluecker relations.
        out.pluecker_relations = include_pluecker_relations;
        return out;
    }
    if (r > 9) throw DomainError("rankd_ideal: Pluecker index names support r <= 9");

    auto coords = index_subsets(r, d);
    std::vector<std::string> fiber;
    for (const auto& K : coords) fiber.push_back(pluecker_var_name(K));
    VarSetPtr vars = VarSet::extend(H.base_vars, fiber);

    std::vector<PolyMat> phi;
    for (const auto& m : H.matrices) phi.push_back(mat_embedded(m, vars));

    std::vector<Poly> gens;
    int raw = 0;
    auto Ks = index_subsets(r, d + 1);
    auto Ts = index_subsets(r, d - 1);
    for (int h = 0; h < H.n; ++h) {
        for (const auto& K : Ks) {
            for (const auto& T : Ts) {
                Poly g = Poly::zero(vars);
                int usign = -1; // (-1)^u for u = 1..d+1
                for (int u = 0; u < d + 1; ++u, usign = -usign) {
                    std::vector<int> rest;
                    for (int q = 0; q < d + 1; ++q)
                        if (q != u) rest.push_back(K[q]);
                    Poly outer = Poly::variable(vars, pluecker_var_name(rest));
                    Poly inner = Poly::zero(vars);
                    for (int i = 1; i <= r; ++i) {
                        PlueckerSign ps = pluecker_sign(T, i);
                        if (ps.sign == 0) continue;
                        inner += phi[h][K[u] - 1][i - 1]
                                     .scaled(Rat(ps.sign)) *
                                 Poly::variable(vars, pluecker_var_name(ps.sorted_set));
                    }
                    g += outer.scaled(Rat(usign)) * inner;
                }
                ++raw;
                if (!g.is_zero()) gens.push_back(std::move(g));
            }
        }
    }
    if (include_pluecker_relations) {
        for (auto& rel : pluecker_relations(vars, r, d)) gens.push_back(std::move(rel));
    }

    GrassIdeal out{Ideal(vars, std::move(gens)), d, FiberCoords::pluecker,
                   include_pluecker_relations, raw, fiber};
    return out;
}

Ideal restrict_fiber(const GrassIdeal& G, const std::vector<Rat>& point) {
    const VarSetPtr& vars = G.ideal.vars();
    const std::size_t n = vars->size() - G.fiber_vars.size();
    if (point.size() != n)
        throw DomainError("restrict_fiber: point length must equal the base dimension");
    std::map<std::string, Rat> bindings;
    for (std::size_t i = 0; i < n; ++i) bindings[vars->name(i)] = point[i];
    std::vector<Poly> gens;
    for (const auto& g : G.ideal.generators()) {
        Poly e = g.evaluate(bindings);
        if (!e.is_zero()) gens.push_back(std::move(e));
    }
    VarSetPtr fiber = VarSet::make(G.fiber_vars);
    for (auto& g : gens) g = g.embedded(fiber);
    return Ideal(fiber, std::move(gens), G.ideal.order());
}

} // namespace higgsgrass
