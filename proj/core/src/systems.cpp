#include "higgsgrass/systems.hpp"

#include "higgsgrass/errors.hpp"
#include "higgsgrass/groebner.hpp"
#include "higgsgrass/pointsolve.hpp"
#include "higgsgrass/polyalg.hpp"

#include <algorithm>
#include <map>

namespace higgsgrass {

HiggsField simpson_system(int n) {
    if (n < 1) throw DomainError("simpson_system: n must be at least 1");
    std::vector<std::string> base;
    for (int i = 1; i <= n; ++i) base.push_back("x" + std::to_string(i));
    VarSetPtr vars = VarSet::make(std::move(base));
    const int r = n + 1;
    std::vector<PolyMat> mats;
    for (int h = 1; h <= n; ++h) {
        PolyMat m = mat_zero(vars, r, r);
        m[0][h] = Poly::constant(vars, Rat(1));
        mats.push_back(std::move(m));
    }
    return validate_higgs(std::move(mats), vars);
}

SimpsonGrassReport simpson_grass_check(int n, int d, int max_power) {
    if (d < 1 || d > n) throw DomainError("simpson_grass_check: need 1 <= d <= n");
    HiggsField S = simpson_system(n);
    GrassIdeal grass = rankd_ideal(S, d, /*include_pluecker_relations=*/d >= 2);
    const VarSetPtr& vars = grass.ideal.vars();

    // Schubert ideal: the Pluecker coordinates indexed inside {2..n+1}.
    std::vector<Poly> schubert_gens;
    std::vector<int> tail;
    for (int i = 2; i <= n + 1; ++i) tail.push_back(i);
    for (const auto& K : index_subsets(n + 1, d)) {
        if (std::includes(tail.begin(), tail.end(), K.begin(), K.end())) {
            std::string name = d == 1 ? "z" + std::to_string(K[0]) : pluecker_var_name(K);
            schubert_gens.push_back(Poly::variable(vars, name));
        }
    }
    if (d >= 2)
        for (auto& rel : pluecker_relations(vars, n + 1, d)) schubert_gens.push_back(rel);
    Ideal schubert(vars, schubert_gens);

    SimpsonGrassReport report{std::move(grass), std::move(schubert), true, true, max_power};
    for (const auto& g : report.grass.ideal.generators())
        if (!ideal_member(g, report.schubert)) {
            report.ideal_in_schubert = false;
            break;
        }
    for (const auto& g : report.schubert.generators()) {
        bool ok = false;
        Poly pw = g;
        for (int k = 1; k <= max_power && !ok; ++k) {
            if (ideal_member(pw, report.grass.ideal)) ok = true;
            pw *= g;
        }
        if (!ok) {
            report.schubert_in_radical = false;
            break;
        }
    }
    return report;
}

FlagIdeal flag_ideal(const HiggsField& H) {
    if (H.r != 3 || H.n != 1)
        throw DomainError("flag_ideal: expects a rank-3 Higgs field on the affine line");
    GrassIdeal g1 = rank1_ideal(H, "z");
    GrassIdeal g2 = rank1_ideal(transpose_field(H), "y");

    std::vector<std::string> fiber{"z1", "z2", "z3", "y1", "y2", "y3"};
    VarSetPtr vars = VarSet::extend(H.base_vars, fiber);
    Ideal i1 = g1.ideal.embedded(vars);
    Ideal i2 = g2.ideal.embedded(vars);
    Poly f = Poly::zero(vars);
    for (int i = 1; i <= 3; ++i)
        f += Poly::variable(vars, "y" + std::to_string(i)) *
             Poly::variable(vars, "z" + std::to_string(i));

    std::vector<Poly> total = i1.generators();
    for (const auto& g : i2.generators()) total.push_back(g);
    total.push_back(f);
    return FlagIdeal{Ideal(vars, std::move(total)), std::move(i1), std::move(i2), std::move(f)};
}

namespace {

/// Ideal of a single reduced point of a product of projective spaces: for
/// each group, the 2x2 minors of the coordinate row against the point row.
Ideal point_ideal(const VarSetPtr& vars, const std::vector<Rat>& point,
                  const std::vector<std::vector<std::string>>& groups) {
    std::vector<Poly> gens;
    for (const auto& group : groups) {
        for (std::size_t a = 0; a < group.size(); ++a) {
            for (std::size_t b = a + 1; b < group.size(); ++b) {
                std::size_t ia = *vars->index_of(group[a]), ib = *vars->index_of(group[b]);
                Poly m = Poly::variable(vars, ia).scaled(point[ib]) -
                         Poly::variable(vars, ib).scaled(point[ia]);
                if (!m.is_zero()) gens.push_back(std::move(m));
            }
        }
    }
    return Ideal(vars, std::move(gens));
}

} // namespace

FlagFiberReport flag_fiber_report(const FlagIdeal& F, const Rat& point,
                                  const DegreeOptions& options) {
    const VarSetPtr& vars = F.total.vars();
    std::map<std::string, Rat> binding{{vars->name(0), point}};
    std::vector<std::string> znames{"z1", "z2", "z3"}, ynames{"y1", "y2", "y3"};
    VarSetPtr fiber_vars = VarSet::make({"z1", "z2", "z3", "y1", "y2", "y3"});
    std::vector<Poly> gens;
    for (const auto& g : F.total.generators()) {
        Poly e = g.evaluate(binding).embedded(fiber_vars);
        if (!e.is_zero()) gens.push_back(std::move(e));
    }
    Ideal fiber(fiber_vars, std::move(gens));
    std::vector<std::vector<std::string>> groups{znames, ynames};

    FlagFiberReport report;
    report.length = projective_degree(fiber, groups, options);

    auto points = product_projective_points(fiber, groups);
    if (!points) return report;
    if (points->empty()) {
        if (report.length == 0) report.point_count = 0;
        return report;
    }

    // Certificate: the fiber lies in each candidate point ideal, and every
    // generator of their intersection lies in the radical of the fiber.
    std::optional<Ideal> radical;
    for (const auto& pt : *points) {
        Ideal P = point_ideal(fiber_vars, pt, groups);
        for (const auto& g : fiber.generators())
            if (!ideal_member(g, P)) return report;
        radical = radical ? ideal_intersect(*radical, P) : P;
    }
    for (const auto& g : radical->generators())
        if (!radical_member(g, fiber)) return report;
    report.point_count = points->size();
    return report;
}

QuotReport quot_canonicalize(const PolyMat& M) {
    if (M.size() != 2 || M[0].size() != 2 || M[1].size() != 2)
        throw DomainError("quot_canonicalize: expects a 2x2 matrix");
    const VarSetPtr& vars = M[0][0].vars();
    if (vars->size() != 1)
        throw DomainError("quot_canonicalize: entries must be univariate");
    Poly determinant = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    if (determinant.is_zero()) throw DomainError("quot_canonicalize: singular matrix");

    struct Col {
        Poly top, bot;
    };
    Col c1{M[0][0], M[1][0]}, c2{M[0][1], M[1][1]};

    // Euclid on the e2-coordinates until the first column has none.
    while (!c1.bot.is_zero()) {
        auto [q, r] = divmod_univariate(c2.bot, c1.bot, 0);
        c2.top -= q * c1.top;
        c2.bot = r;
        std::swap(c1, c2);
    }

    Poly p1 = c1.top, qpoly = c2.bot;
    // Nonsingular, so neither can vanish.
    Rat lc1 = coefficient_of_power(p1, 0, p1.degree_in(0)).constant_value();
    c1.top = c1.top.scaled(lc1.reciprocal());
    p1 = c1.top;
    Rat lcq = coefficient_of_power(qpoly, 0, qpoly.degree_in(0)).constant_value();
    c2.top = c2.top.scaled(lcq.reciprocal());
    c2.bot = c2.bot.scaled(lcq.reciprocal());
    qpoly = c2.bot;

    auto [qq, p2] = divmod_univariate(c2.top, p1, 0);
    (void)qq;

    QuotReport report{QuotPoint{p1, p2, qpoly}, divide_exact(qpoly, p1).has_value(),
                      static_cast<int>(p1.degree_in(0) + qpoly.degree_in(0)),
                      Ideal(vars, {p1}), Ideal(vars, {qpoly})};
    if (report.colength != static_cast<int>(determinant.degree_in(0)))
        throw DomainError("quot_canonicalize: degree bookkeeping failed");
    return report;
}

} // namespace higgsgrass
