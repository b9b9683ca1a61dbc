#include "higgsgrass/spectral.hpp"

#include "higgsgrass/degree.hpp"
#include "higgsgrass/errors.hpp"
#include "higgsgrass/groebner.hpp"

#include <algorithm>
#include <map>

namespace higgsgrass {

namespace {

void compositions(int total, int parts, std::vector<std::uint32_t>& cur,
                  std::vector<std::vector<std::uint32_t>>& out) {
    if (parts == 1) {
        cur.push_back(static_cast<std::uint32_t>(total));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int head = total; head >= 0; --head) { // descending lex
        cur.push_back(static_cast<std::uint32_t>(head));
        compositions(total - head, parts - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

SpectralIdeal spectral_ideal(const HiggsField& H) {
    const int n = H.n, r = H.r;
    std::vector<std::string> lnames, dnames;
    {
        std::vector<std::string> taken = H.base_vars->names();
        auto grab = [&taken](const std::string& want) {
            std::string name = want;
            int suffix = 0;
            while (std::find(taken.begin(), taken.end(), name) != taken.end())
                name = want + "_" + std::to_string(suffix++);
            taken.push_back(name);
            return name;
        };
        for (int i = 1; i <= n; ++i) lnames.push_back(grab("l" + std::to_string(i)));
        for (int i = 1; i <= n; ++i) dnames.push_back(grab("d" + std::to_string(i)));
    }
    VarSetPtr out_vars = VarSet::extend(H.base_vars, lnames);
    VarSetPtr work = VarSet::extend(out_vars, dnames);

    // (sum l_i d_i) I - sum phi^(i) d_i, determinant homogeneous of degree r
    // in the d's.
    Poly tautological = Poly::zero(work);
    for (int i = 0; i < n; ++i)
        tautological += Poly::variable(work, lnames[i]) * Poly::variable(work, dnames[i]);
    PolyMat M = mat_scale(mat_identity(work, r), tautological);
    for (int i = 0; i < n; ++i) {
        PolyMat scaled = mat_scale(mat_embedded(H.matrices[i], work), Poly::variable(work, dnames[i]));
        M = mat_sub(M, scaled);
    }
    Poly D = det(M);

    std::vector<std::size_t> dpos;
    for (const auto& name : dnames) dpos.push_back(*work->index_of(name));

    std::vector<std::vector<std::uint32_t>> exps;
    std::vector<std::uint32_t> cur;
    compositions(r, n, cur, exps);

    std::map<std::vector<std::uint32_t>, std::vector<Term>> buckets;
    for (const auto& t : D.terms()) {
        std::vector<std::uint32_t> key;
        key.reserve(n);
        Mono m = t.mono;
        for (auto p : dpos) {
            key.push_back(m.exp(p));
            m.set_exp(p, 0);
        }
        buckets[key].push_back({std::move(m), t.coeff});
    }

    SpectralIdeal out{Ideal(out_vars, {}), {}, r, n};
    std::vector<Poly> gens;
    for (const auto& e : exps) {
        Poly g = Poly::zero(work);
        auto it = buckets.find(e);
        if (it != buckets.end()) g = Poly::from_terms(work, std::move(it->second));
        Poly reduced = g.embedded(out_vars);
        if (!reduced.is_zero()) gens.push_back(reduced);
        out.indexed_generators.push_back({e, std::move(reduced)});
    }
    out.ideal = Ideal(out_vars, std::move(gens));
    return out;
}

std::uint64_t spectral_fiber_degree(const SpectralIdeal& S, const std::vector<Rat>& point) {
    const VarSetPtr& vars = S.ideal.vars();
    if (static_cast<int>(point.size()) != S.n)
        throw DomainError("spectral_fiber_degree: point length must equal the base dimension");
    const std::size_t base = vars->size() - static_cast<std::size_t>(S.n);
    std::map<std::string, Rat> bindings;
    for (std::size_t i = 0; i < base; ++i) bindings[vars->name(i)] = point[i];
    std::vector<std::string> lnames;
    for (std::size_t i = base; i < vars->size(); ++i) lnames.push_back(vars->name(i));
    VarSetPtr lv = VarSet::make(lnames);
    std::vector<Poly> gens;
    for (const auto& g : S.ideal.generators()) {
        Poly e = g.evaluate(bindings).embedded(lv);
        if (!e.is_zero()) gens.push_back(std::move(e));
    }
    return affine_colength(Ideal(lv, std::move(gens)));
}

bool certify_radical(const Ideal& I, const Ideal& P, int max_power) {
    if (!same_vars(I.vars(), P.vars()))
        throw DomainError("certify_radical: different variable sets");
    for (const auto& g : P.generators())
        if (g.total_degree() > 1)
            throw DomainError("certify_radical: non-linear candidate generator '" +
                              g.to_string() + "'");
    for (const auto& g : I.generators())
        if (!ideal_member(g, P)) return false;
    for (const auto& g : P.generators()) {
        bool has_power = false;
        Poly pw = g;
        for (int k = 1; k <= max_power; ++k) {
            if (ideal_member(pw, I)) {
                has_power = true;
                break;
            }
            pw *= g;
        }
        if (!has_power) return false;
    }
    return true;
}

} // namespace higgsgrass
