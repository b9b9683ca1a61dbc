#include "higgsgrass/rank2.hpp"

#include "higgsgrass/errors.hpp"
#include "higgsgrass/groebner.hpp"
#include "higgsgrass/polyalg.hpp"

namespace higgsgrass {

std::string to_string(Rank2Tag tag) {
    switch (tag) {
    case Rank2Tag::center: return "center";
    case Rank2Tag::vertical: return "vertical";
    case Rank2Tag::split_degenerate: return "split-degenerate";
    case Rank2Tag::nonreduced: return "nonreduced";
    case Rank2Tag::reducible_square: return "reducible-square";
    case Rank2Tag::irreducible: return "irreducible";
    }
    return "?";
}

namespace {

void require_rank2(const HiggsField& H) {
    if (H.r != 2) throw DomainError("rank-2 analysis requires a rank-2 Higgs field");
}

bool is_scalar(const PolyMat& m) {
    return m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1];
}

/// psi = phi - phi11*I, so psi11 = 0.
PolyMat normalized(const PolyMat& m) {
    PolyMat psi = m;
    Poly shift = m[0][0];
    psi[0][0] -= shift;
    psi[1][1] -= shift;
    return psi;
}

} // namespace

Poly discriminant(const HiggsField& H, int which) {
    require_rank2(H);
    if (which < 0 || which >= H.n) throw DomainError("discriminant: matrix index out of range");
    const PolyMat& m = H.matrices[which];
    Poly d = m[1][1] - m[0][0];
    return d * d + (m[0][1] * m[1][0]).scaled(Rat(4));
}

namespace {

/// Primitive part of a z1/z2-linear form a*z1 + b*z2 with polynomial
/// coefficients: divides out gcd(a, b).
Poly strip_content(const Poly& form, std::size_t z1, std::size_t z2) {
    Poly a = coefficient_of_power(coefficient_of_power(form, z2, 0), z1, 1);
    Poly b = coefficient_of_power(coefficient_of_power(form, z1, 0), z2, 1);
    Poly g = gcd_multivariate(a, b);
    if (g.is_zero() || g.is_constant()) return form;
    auto q = divide_exact(form, g.embedded(form.vars()));
    return q ? *q : form;
}

} // namespace

Rank2Class classify_rank2(const HiggsField& H) {
    require_rank2(H);
    Rank2Class out;

    int h = -1;
    for (int i = 0; i < H.n; ++i) {
        if (!is_scalar(H.matrices[i])) {
            h = i;
            break;
        }
    }
    if (h < 0) {
        out.tag = Rank2Tag::center;
        out.delta = Poly::zero(H.base_vars);
        return out;
    }
    out.which_h = h;
    out.delta = discriminant(H, h);

    PolyMat psi = normalized(H.matrices[h]);
    const Poly& p12 = psi[0][1];
    const Poly& p21 = psi[1][0];
    const Poly& p22 = psi[1][1];

    Poly g = gcd_multivariate(gcd_multivariate(p12, p21), p22);
    if (!g.is_constant()) {
        out.tag = Rank2Tag::vertical;
        out.gcd_witness = g;
        return out;
    }

    // The fiber quadric from the rank-1 equations: psi21 z1^2 + psi22 z1 z2 -
    // psi12 z2^2, over (base, z1, z2).
    std::vector<std::string> fiber{"z1", "z2"};
    VarSetPtr qv = VarSet::extend(H.base_vars, fiber);
    std::size_t iz1 = *qv->index_of("z1"), iz2 = *qv->index_of("z2");
    Poly z1 = Poly::variable(qv, iz1), z2 = Poly::variable(qv, iz2);
    Poly a = p21.embedded(qv), b = p22.embedded(qv), c = p12.embedded(qv);
    Poly quadric = a * z1 * z1 + b * z1 * z2 - c * z2 * z2;

    Poly det_psi = -(p12 * p21);
    bool delta_zero = out.delta.is_zero();

    if (det_psi.is_zero() && !delta_zero) {
        // Exactly one off-diagonal entry vanishes; the quadric splits by
        // inspection into two distinct factors.
        out.tag = Rank2Tag::split_degenerate;
        out.sqrt_delta = poly_square_root(out.delta);
        if (p21.is_zero())
            out.factors = {z2, strip_content(b * z1 - c * z2, iz1, iz2)};
        else
            out.factors = {z1, strip_content(a * z1 + b * z2, iz1, iz2)};
        return out;
    }
    if (delta_zero) {
        out.tag = Rank2Tag::nonreduced;
        Poly doubled = p21.is_zero() ? z2 : strip_content(a.scaled(Rat(2)) * z1 + b * z2, iz1, iz2);
        out.factors = {doubled, doubled};
        return out;
    }
    auto root = poly_square_root(out.delta);
    if (root) {
        out.tag = Rank2Tag::reducible_square;
        out.sqrt_delta = root;
        Poly s = root->embedded(qv);
        out.factors = {strip_content(a.scaled(Rat(2)) * z1 + (b - s) * z2, iz1, iz2),
                       strip_content(a.scaled(Rat(2)) * z1 + (b + s) * z2, iz1, iz2)};
        return out;
    }
    out.tag = Rank2Tag::irreducible;
    return out;
}

SingularLocus singular_locus_rank2(const HiggsField& H, int which) {
    require_rank2(H);
    if (H.n != 1) throw DomainError("singular_locus_rank2: the base must be a curve");
    if (which < 0 || which >= H.n)
        throw DomainError("singular_locus_rank2: matrix index out of range");
    Rank2Class cls = classify_rank2(H);
    if (cls.tag != Rank2Tag::irreducible)
        throw DomainError("singular_locus_rank2: classification tag is " + to_string(cls.tag) +
                          ", not irreducible");
    if (is_scalar(H.matrices[which]))
        throw DomainError("singular_locus_rank2: the chosen matrix is central");

    PolyMat psi = normalized(H.matrices[which]);
    const std::string& x = H.base_vars->name(0);

    std::string tname = fresh_var_name(*H.base_vars, "t");
    VarSetPtr cv = VarSet::extend(H.base_vars, {tname});
    Poly t = Poly::variable(cv, tname);
    Poly a = psi[1][0].embedded(cv), b = psi[1][1].embedded(cv), c = psi[0][1].embedded(cv);
    Poly f = a * t * t + b * t - c;
    Poly fx = f.derivative(x);
    Poly ft = a.scaled(Rat(2)) * t + b;

    VarSetPtr hv = VarSet::extend(H.base_vars, {"z1", "z2"});
    Poly z1 = Poly::variable(hv, "z1"), z2 = Poly::variable(hv, "z2");
    Poly ah = psi[1][0].embedded(hv), bh = psi[1][1].embedded(hv), ch = psi[0][1].embedded(hv);
    Poly q = ah * z1 * z1 + bh * z1 * z2 - ch * z2 * z2;
    Poly qx = q.derivative(x);
    Poly qt = ah.scaled(Rat(2)) * z1 + bh * z2;

    SingularLocus out{Ideal(cv, {f, fx, ft}), Ideal(hv, {q, qx, qt})};
    return out;
}

} // namespace higgsgrass
