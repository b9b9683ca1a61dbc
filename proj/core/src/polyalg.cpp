#include "higgsgrass/polyalg.hpp"

#include "higgsgrass/errors.hpp"

#include <algorithm>

namespace higgsgrass {

namespace {
const MonomialOrder kGrevlex = MonomialOrder::grevlex();
} // namespace

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    Poly q = Poly::zero(a.vars());
    Poly r = a;
    const Term& lb = b.leading_term();
    while (!r.is_zero()) {
        const Term& lr = r.leading_term();
        if (!lb.mono.divides(lr.mono)) return std::nullopt;
        Mono m = lb.mono.divide_into(lr.mono);
        Rat c = lr.coeff / lb.coeff;
        q += Poly::monomial(a.vars(), m, c);
        r -= b.mul_term(m, c);
    }
    return q;
}

std::vector<Poly> coefficients_in(const Poly& p, std::size_t var) {
    std::uint32_t d = p.degree_in(var);
    std::vector<std::vector<Term>> buckets(d + 1);
    for (const auto& t : p.terms()) {
        std::uint32_t e = t.mono.exp(var);
        Mono m = t.mono;
        m.set_exp(var, 0);
        buckets[e].push_back({std::move(m), t.coeff});
    }
    std::vector<Poly> out;
    out.reserve(d + 1);
    for (auto& bucket : buckets) out.push_back(Poly::from_terms(p.vars(), std::move(bucket)));
    return out;
}

Poly coefficient_of_power(const Poly& p, std::size_t var, std::uint32_t k) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        if (t.mono.exp(var) != k) continue;
        Mono m = t.mono;
        m.set_exp(var, 0);
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(p.vars(), std::move(terms));
}

namespace {

Poly times_power(const Poly& p, std::size_t var, std::uint32_t e) {
    Mono m(p.vars()->size());
    m.set_exp(var, e);
    return p.mul_term(m, Rat(1));
}

/// Pseudo-remainder of a by b in `var`: lc(b)^(da-db+1) * a = q*b + prem.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
    std::uint32_t db = b.degree_in(var);
    Poly lb = coefficient_of_power(b, var, db);
    Poly r = a;
    std::int64_t e = static_cast<std::int64_t>(a.degree_in(var)) - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        std::uint32_t dr = r.degree_in(var);
        Poly lr = coefficient_of_power(r, var, dr);
        r = lb * r - times_power(lr, var, dr - db) * b;
        --e;
    }
    for (; e > 0; --e) r = lb * r;
    return r;
}

Poly gcd_rec(const Poly& a, const Poly& b);

/// Content of p as a univariate polynomial in `var` (gcd of the coefficient
/// polynomials); monic.
Poly content_in(const Poly& p, std::size_t var) {
    Poly g = Poly::zero(p.vars());
    for (const auto& c : coefficients_in(p, var)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_rec(g, c);
        if (g.is_constant()) break;
    }
    return g.is_constant() ? Poly::constant(p.vars(), Rat(1)) : g;
}

/// Subresultant polynomial remainder sequence; inputs primitive in `var`.
Poly prs_gcd(Poly f, Poly g, std::size_t var) {
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
    Poly h = Poly::constant(f.vars(), Rat(1));
    Poly s = h;
    for (;;) {
        std::uint32_t df = f.degree_in(var), dg = g.degree_in(var);
        std::uint32_t delta = df - dg;
        Poly rem = pseudo_remainder(f, g, var);
        if (rem.is_zero()) break;
        Poly divisor = s * h.pow(delta);
        auto next = divide_exact(rem, divisor);
        if (!next) throw DomainError("subresultant PRS: inexact division");
        f = g;
        g = *next;
        s = coefficient_of_power(f, var, f.degree_in(var));
        if (delta > 0) {
            auto hn = divide_exact(s.pow(delta), h.pow(delta - 1));
            if (!hn) throw DomainError("subresultant PRS: inexact division");
            h = *hn;
        }
        if (g.degree_in(var) == 0) break;
    }
    if (g.degree_in(var) == 0) return Poly::constant(f.vars(), Rat(1));
    auto pp = divide_exact(g, content_in(g, var));
    if (!pp) throw DomainError("subresultant PRS: inexact content division");
    return pp->monic();
}

Poly gcd_rec(const Poly& a, const Poly& b) {
    if (a.is_constant() && b.is_constant()) return Poly::constant(a.vars(), Rat(1));
    std::size_t var = a.vars()->size();
    while (var-- > 0) {
        if (a.uses_var(var) || b.uses_var(var)) break;
    }
    Poly cont_a = a.uses_var(var) ? content_in(a, var) : a.monic();
    Poly cont_b = b.uses_var(var) ? content_in(b, var) : b.monic();
    Poly c = gcd_rec(cont_a, cont_b);
    if (!a.uses_var(var) || !b.uses_var(var)) return c;
    auto pa = divide_exact(a, cont_a);
    auto pb = divide_exact(b, cont_b);
    if (!pa || !pb) throw DomainError("gcd: inexact content division");
    return (c * prs_gcd(*pa, *pb, var)).monic();
}

} // namespace

Poly gcd_multivariate(const Poly& a, const Poly& b) {
    if (!same_vars(a.vars(), b.vars()))
        throw DomainError("gcd of polynomials over different variable sets");
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    return gcd_rec(a, b).monic();
}

std::optional<Poly> poly_square_root(const Poly& p) {
    if (p.is_zero()) return p;
    const Term& lt = p.leading_term();
    for (std::size_t i = 0; i < lt.mono.size(); ++i)
        if (lt.mono.exp(i) % 2 != 0) return std::nullopt;
    Rat lc_root(0);
    if (!lt.coeff.square_root(lc_root)) return std::nullopt;
    Mono half(lt.mono.size());
    for (std::size_t i = 0; i < lt.mono.size(); ++i) half.set_exp(i, lt.mono.exp(i) / 2);

    Poly s = Poly::monomial(p.vars(), half, lc_root);
    Rat twice_lc = lc_root + lc_root;
    Mono last = half;
    for (;;) {
        Poly r = p - s * s;
        if (r.is_zero()) return s;
        const Term& lr = r.leading_term();
        if (!half.divides(lr.mono)) return std::nullopt;
        Mono m = half.divide_into(lr.mono);
        // Each solved term must be strictly below the previous one, otherwise
        // the coefficient triangularization has no solution.
        if (!kGrevlex.less(m, last)) return std::nullopt;
        s += Poly::monomial(p.vars(), m, lr.coeff / twice_lc);
        last = std::move(m);
    }
}

std::pair<Poly, Poly> divmod_univariate(const Poly& a, const Poly& b, std::size_t var) {
    if (b.is_zero()) throw DomainError("univariate division by zero");
    std::uint32_t db = b.degree_in(var);
    Rat lb = coefficient_of_power(b, var, db).constant_value();
    if (lb.is_zero()) throw DomainError("divmod_univariate: divisor not univariate");
    if (db == 0) return {a.scaled(lb.reciprocal()), Poly::zero(a.vars())};
    Poly q = Poly::zero(a.vars());
    Poly r = a;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        std::uint32_t dr = r.degree_in(var);
        Rat lr = coefficient_of_power(r, var, dr).constant_value();
        Mono m(a.vars()->size());
        m.set_exp(var, dr - db);
        Poly t = Poly::monomial(a.vars(), m, lr / lb);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

Rat evaluate_univariate(const Poly& p, std::size_t var, const Rat& x) {
    auto coeffs = coefficients_in(p, var);
    Rat acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * x + coeffs[i].constant_value();
    }
    return acc;
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    if (n == 0) throw DomainError("divisors of zero");
    if (n > mpz_class("1000000000000"))
        throw DomainError("rational root search: constant too large to factor");
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

RationalRoots rational_roots(const Poly& p, std::size_t var) {
    if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
    RationalRoots result;
    Poly cur = p;

    // Factor out x^k first.
    auto coeffs = coefficients_in(cur, var);
    std::size_t k = 0;
    while (k < coeffs.size() && coeffs[k].is_zero()) ++k;
    if (k > 0) {
        result.roots.push_back({Rat(0), static_cast<int>(k)});
        Mono m(p.vars()->size());
        m.set_exp(var, static_cast<std::uint32_t>(k));
        cur = *divide_exact(cur, Poly::monomial(p.vars(), m, Rat(1)));
    }

    while (cur.degree_in(var) > 0) {
        auto cs = coefficients_in(cur, var);
        // Clear denominators for the rational root theorem.
        mpz_class scale = 1;
        for (const auto& c : cs) {
            if (c.is_zero()) continue;
            mpz_class den = c.constant_value().denominator();
            scale = scale / gcd(scale, den) * den;
        }
        mpz_class lead = (cs.back().constant_value() * Rat(scale, 1)).numerator();
        mpz_class tail = (cs.front().constant_value() * Rat(scale, 1)).numerator();
        bool found = false;
        for (const auto& q : positive_divisors(lead)) {
            for (const auto& pnum : positive_divisors(tail)) {
                for (int sign : {1, -1}) {
                    Rat cand(sign < 0 ? mpz_class(-pnum) : pnum, q);
                    if (!evaluate_univariate(cur, var, cand).is_zero()) continue;
                    int mult = 0;
                    Poly lin = Poly::variable(p.vars(), var) -
                               Poly::constant(p.vars(), cand);
                    while (true) {
                        auto [qq, rr] = divmod_univariate(cur, lin, var);
                        if (!rr.is_zero()) break;
                        cur = qq;
                        ++mult;
                    }
                    result.roots.push_back({cand, mult});
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    result.residual = cur;
    result.residual_degree = cur.degree_in(var);
    return result;
}

} // namespace higgsgrass
