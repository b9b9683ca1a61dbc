#pragma once

#include "higgsgrass/groebner.hpp"
#include "higgsgrass/higgs.hpp"
#include "higgsgrass/parse.hpp"

#include <random>
#include <string>
#include <vector>

namespace tu {

using namespace higgsgrass;

inline VarSetPtr vars(std::vector<std::string> names) { return VarSet::make(std::move(names)); }

inline Poly P(const std::string& text, const VarSetPtr& v) { return parse_poly(text, v); }

inline std::vector<Poly> polys(const VarSetPtr& v, const std::vector<std::string>& texts) {
    std::vector<Poly> out;
    for (const auto& t : texts) out.push_back(parse_poly(t, v));
    return out;
}

inline Ideal ideal(const VarSetPtr& v, const std::vector<std::string>& texts,
                   MonomialOrder order = MonomialOrder::grevlex()) {
    return Ideal(v, polys(v, texts), order);
}

inline PolyMat mat(const VarSetPtr& v, const std::vector<std::vector<std::string>>& rows) {
    PolyMat m;
    for (const auto& row : rows) {
        std::vector<Poly> r;
        for (const auto& e : row) r.push_back(parse_poly(e, v));
        m.push_back(std::move(r));
    }
    return m;
}

/// One-matrix Higgs field on the affine line.
inline HiggsField curve_field(const std::vector<std::vector<std::string>>& rows) {
    VarSetPtr v = vars({"x"});
    return validate_higgs({mat(v, rows)}, v);
}

inline Rat rand_rat(std::mt19937_64& rng, long bound = 9) {
    long n = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
    return Rat(n);
}

inline Rat rand_nonzero_rat(std::mt19937_64& rng, long bound = 9) {
    Rat r(0);
    while (r.is_zero()) r = rand_rat(rng, bound);
    return r;
}

inline Poly rand_poly(std::mt19937_64& rng, const VarSetPtr& v, std::uint32_t max_deg,
                      int terms) {
    Poly p = Poly::zero(v);
    for (int t = 0; t < terms; ++t) {
        Mono m(v->size());
        std::uint32_t budget = max_deg;
        for (std::size_t i = 0; i < v->size(); ++i) {
            std::uint32_t e = rng() % (budget + 1);
            m.set_exp(i, e);
            budget -= e;
        }
        p += Poly::monomial(v, m, rand_rat(rng));
    }
    return p;
}

} // namespace tu
