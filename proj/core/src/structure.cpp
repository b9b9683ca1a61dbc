#include "higgsgrass/structure.hpp"

#include "higgsgrass/errors.hpp"

#include <algorithm>
#include <set>

namespace higgsgrass {

int JordanSpec::rank() const {
    int r = 0;
    for (const auto& b : blocks) r += b.size * b.mult;
    return r;
}

JordanSpec make_jordan_spec(VarSetPtr base_vars, std::vector<JordanBlockSpec> blocks) {
    if (blocks.empty()) throw DomainError("a Jordan specification needs at least one block");
    for (const auto& b : blocks) {
        if (b.size < 1 || b.mult < 1)
            throw DomainError("Jordan block sizes and multiplicities must be positive");
        if (!same_vars(b.lambda.vars(), base_vars))
            throw DomainError("eigenvalue over the wrong variable set");
    }
    for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b)
            if (blocks[a].size == blocks[b].size && blocks[a].lambda == blocks[b].lambda)
                throw DomainError("(eigenvalue, size) pairs must be pairwise distinct");
    return JordanSpec{std::move(base_vars), std::move(blocks)};
}

namespace {

VarSetPtr fiber_vars(int r) {
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) names.push_back("z" + std::to_string(i));
    return VarSet::make(std::move(names));
}

void require_sorted_sizes(const JordanSpec& spec) {
    for (std::size_t v = 1; v < spec.blocks.size(); ++v)
        if (spec.blocks[v - 1].size <= spec.blocks[v].size)
            throw DomainError("block sizes must be strictly decreasing in the stored order");
}

std::vector<int> block_offsets(const JordanSpec& spec) {
    std::vector<int> off;
    int acc = 0;
    for (const auto& b : spec.blocks) {
        off.push_back(acc);
        acc += b.size * b.mult;
    }
    return off;
}

std::vector<int> union_minus_min(const std::vector<std::vector<int>>& A) {
    std::set<int> s;
    for (const auto& a : A)
        for (std::size_t k = 1; k < a.size(); ++k) s.insert(a[k]);
    return {s.begin(), s.end()};
}

std::vector<int> maxima(const std::vector<std::vector<int>>& A) {
    std::set<int> s;
    for (const auto& a : A) s.insert(a.back());
    return {s.begin(), s.end()};
}

} // namespace

JordanSetsReport jordan_spec_sets(const JordanSpec& spec) {
    require_sorted_sizes(spec);
    const int r = spec.rank();
    const auto off = block_offsets(spec);
    const int s = static_cast<int>(spec.blocks.size());

    JordanSetsReport report;
    report.r = r;
    for (int v = 0; v < s; ++v) {
        const auto& bl = spec.blocks[v];
        for (int k = 0; k < bl.mult; ++k) {
            std::vector<int> run;
            for (int j = 1; j <= bl.size; ++j) run.push_back(k * bl.size + j + off[v]);
            report.global.A.push_back(std::move(run));
        }
    }
    report.global.B = union_minus_min(report.global.A);
    report.global.C = maxima(report.global.A);

    for (int v = 0; v < s; ++v) {
        LevelSets lv;
        const int iv = spec.blocks[v].size;
        for (int alpha = 0; alpha <= v; ++alpha) {
            const auto& bl = spec.blocks[alpha];
            for (int k = 0; k < bl.mult; ++k) {
                std::vector<int> run;
                for (int j = 1; j <= iv; ++j) run.push_back(k * bl.size + j + off[alpha]);
                lv.A.push_back(std::move(run));
            }
        }
        std::set<int> covered;
        for (const auto& a : lv.A) covered.insert(a.begin(), a.end());
        for (int i = 1; i <= r; ++i)
            if (!covered.count(i)) lv.L.push_back(i);
        lv.B = union_minus_min(lv.A);
        lv.C = maxima(lv.A);
        report.level.push_back(std::move(lv));
    }
    return report;
}

Ideal sv_ideal(const std::vector<std::vector<int>>& A, int r) {
    VarSetPtr vars = fiber_vars(r);
    std::set<int> seen;
    for (const auto& a : A) {
        for (int i : a) {
            if (i < 1 || i > r) throw DomainError("sv_ideal: index out of range");
            if (!seen.insert(i).second) throw DomainError("sv_ideal: overlapping blocks");
        }
    }
    // Concatenated 2 x (d_i - 1) matrices over consecutive block variables.
    std::vector<std::pair<int, int>> cols; // (top index, bottom index), 1-based
    for (const auto& a : A) {
        std::vector<int> sorted = a;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
            cols.push_back({sorted[k], sorted[k + 1]});
    }
    std::vector<Poly> gens;
    for (std::size_t a = 0; a < cols.size(); ++a) {
        for (std::size_t b = a + 1; b < cols.size(); ++b) {
            Poly m = Poly::variable(vars, "z" + std::to_string(cols[a].first)) *
                         Poly::variable(vars, "z" + std::to_string(cols[b].second)) -
                     Poly::variable(vars, "z" + std::to_string(cols[b].first)) *
                         Poly::variable(vars, "z" + std::to_string(cols[a].second));
            if (!m.is_zero()) gens.push_back(std::move(m));
        }
    }
    return Ideal(vars, std::move(gens));
}

bool sv_parametrization_check(const std::vector<std::vector<int>>& A, int r) {
    if (A.empty()) throw DomainError("sv_parametrization_check: empty family");
    const std::size_t d = A[0].size();
    for (const auto& a : A)
        if (a.size() != d) throw DomainError("sv_parametrization_check: unequal block sizes");
    Ideal I = sv_ideal(A, r);
    if (d == 1) return true; // zero ideal, vacuous

    std::vector<std::string> pnames{"u0", "u1"};
    for (std::size_t i = 1; i <= A.size(); ++i) pnames.push_back("v" + std::to_string(i));
    VarSetPtr P = VarSet::make(std::move(pnames));
    Poly u0 = Poly::variable(P, "u0"), u1 = Poly::variable(P, "u1");

    std::map<std::string, Poly> images;
    for (int z = 1; z <= r; ++z) images["z" + std::to_string(z)] = Poly::zero(P);
    for (std::size_t i = 0; i < A.size(); ++i) {
        std::vector<int> sorted = A[i];
        std::sort(sorted.begin(), sorted.end());
        Poly vi = Poly::variable(P, "v" + std::to_string(i + 1));
        for (std::size_t k = 0; k < d; ++k) {
            images["z" + std::to_string(sorted[k])] =
                vi * u0.pow(static_cast<std::uint32_t>(d - 1 - k)) *
                u1.pow(static_cast<std::uint32_t>(k));
        }
    }
    for (const auto& g : I.generators())
        if (!g.substitute(P, images).is_zero()) return false;
    return true;
}

Ideal single_block_ideal(int r) {
    if (r < 1) throw DomainError("single_block_ideal: rank must be positive");
    VarSetPtr vars = fiber_vars(r);
    std::vector<Poly> gens;
    Ideal minors = sv_ideal({[&] {
                                 std::vector<int> all;
                                 for (int i = 1; i <= r; ++i) all.push_back(i);
                                 return all;
                             }()},
                            r);
    for (const auto& g : minors.generators()) gens.push_back(g);
    Poly zr = Poly::variable(vars, "z" + std::to_string(r));
    for (int i = 2; i <= r; ++i)
        gens.push_back(Poly::variable(vars, "z" + std::to_string(i)) * zr);
    return Ideal(vars, std::move(gens));
}

namespace {

Ideal assemble_monomials_plus_sv(const std::vector<std::vector<int>>& A,
                                 const std::vector<int>& B, const std::vector<int>& C,
                                 const std::vector<int>& linear, int r) {
    VarSetPtr vars = fiber_vars(r);
    std::vector<Poly> gens;
    for (int j : linear) gens.push_back(Poly::variable(vars, "z" + std::to_string(j)));
    std::set<std::pair<int, int>> emitted;
    for (int b : B)
        for (int c : C) {
            auto key = std::minmax(b, c);
            if (!emitted.insert(key).second) continue;
            gens.push_back(Poly::variable(vars, "z" + std::to_string(b)) *
                           Poly::variable(vars, "z" + std::to_string(c)));
        }
    Ideal minors = sv_ideal(A, r);
    for (const auto& g : minors.generators()) gens.push_back(g);
    return Ideal(vars, std::move(gens));
}

void require_one_eigenvalue(const JordanSpec& spec) {
    for (std::size_t v = 1; v < spec.blocks.size(); ++v)
        if (spec.blocks[v].lambda != spec.blocks[0].lambda)
            throw DomainError("all blocks must share one eigenvalue polynomial");
}

JordanSpec sorted_by_size(const JordanSpec& spec) {
    JordanSpec out = spec;
    std::stable_sort(out.blocks.begin(), out.blocks.end(),
                     [](const JordanBlockSpec& a, const JordanBlockSpec& b) {
                         return a.size > b.size;
                     });
    return out;
}

} // namespace

Ideal predicted_full_ideal(const JordanSpec& spec) {
    require_one_eigenvalue(spec);
    JordanSpec sorted = sorted_by_size(spec);
    auto sets = jordan_spec_sets(sorted);
    return assemble_monomials_plus_sv(sets.global.A, sets.global.B, sets.global.C, {}, sets.r);
}

ComponentIdeal predicted_component_ideal(const JordanSpec& spec, int v) {
    require_one_eigenvalue(spec);
    JordanSpec sorted = sorted_by_size(spec);
    auto sets = jordan_spec_sets(sorted);
    if (v < 1 || v > static_cast<int>(sets.level.size()))
        throw DomainError("predicted_component_ideal: stratum index out of range");
    const LevelSets& lv = sets.level[v - 1];
    ComponentIdeal out{v, assemble_monomials_plus_sv(lv.A, lv.B, lv.C, lv.L, sets.r), 0, 0};
    int dsum = 0;
    for (int t = 0; t < v; ++t) dsum += sorted.blocks[t].mult;
    out.dimension = dsum - 1;
    out.fiber_degree = sorted.blocks[v - 1].size;
    return out;
}

std::vector<std::pair<Poly, Ideal>> decompose_by_eigenvalue(const JordanSpec& spec) {
    for (std::size_t a = 0; a < spec.blocks.size(); ++a)
        for (std::size_t b = a + 1; b < spec.blocks.size(); ++b)
            if (spec.blocks[a].lambda == spec.blocks[b].lambda)
                throw DomainError("decompose_by_eigenvalue: repeated eigenvalue polynomial");
    const int r = spec.rank();
    const auto off = block_offsets(spec);

    std::vector<std::pair<Poly, Ideal>> out;
    for (std::size_t v = 0; v < spec.blocks.size(); ++v) {
        const auto& bl = spec.blocks[v];
        const int lo = off[v] + 1, hi = off[v] + bl.size * bl.mult;
        std::vector<std::vector<int>> A;
        for (int k = 0; k < bl.mult; ++k) {
            std::vector<int> run;
            for (int j = 1; j <= bl.size; ++j) run.push_back(off[v] + k * bl.size + j);
            A.push_back(std::move(run));
        }
        std::vector<int> linear;
        for (int i = 1; i <= r; ++i)
            if (i < lo || i > hi) linear.push_back(i);
        out.push_back({bl.lambda, assemble_monomials_plus_sv(A, union_minus_min(A), maxima(A),
                                                             linear, r)});
    }
    return out;
}

MorphismClassification classify_morphism(const JordanSpec& spec) {
    MorphismClassification out;
    out.finite = true;
    out.reduced = true;
    for (const auto& b : spec.blocks) {
        if (b.mult > 1) out.finite = false;
        if (b.size > 1) out.reduced = false;
    }
    for (std::size_t a = 0; a < spec.blocks.size() && out.finite; ++a)
        for (std::size_t b = a + 1; b < spec.blocks.size(); ++b)
            if (spec.blocks[a].lambda == spec.blocks[b].lambda) {
                out.finite = false;
                break;
            }
    return out;
}

PolyMat jordan_matrix(const JordanSpec& spec) {
    const int r = spec.rank();
    PolyMat m = mat_zero(spec.base_vars, r, r);
    Poly one = Poly::constant(spec.base_vars, Rat(1));
    int pos = 0;
    for (const auto& b : spec.blocks) {
        for (int k = 0; k < b.mult; ++k) {
            for (int j = 0; j < b.size; ++j) {
                m[pos + j][pos + j] = b.lambda;
                if (j + 1 < b.size) m[pos + j][pos + j + 1] = one;
            }
            pos += b.size;
        }
    }
    return m;
}

HiggsField jordan_field(const JordanSpec& spec) {
    if (spec.base_vars->size() != 1)
        throw DomainError("jordan_field: the base must be one-dimensional");
    return validate_higgs({jordan_matrix(spec)}, spec.base_vars);
}

} // namespace higgsgrass
