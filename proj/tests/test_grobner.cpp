#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "higgsgrass/degree.hpp"
#include "higgsgrass/errors.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <set>
#include <thread>

using namespace tu;

TEST_CASE("reduced groebner bases") {
    auto Z = vars({"z1", "z2", "z3"});
    Ideal I = ideal(Z, {"z2^2", "z2*z3", "z3^2"});
    CHECK(I.groebner().basis == polys(Z, {"z2^2", "z2*z3", "z3^2"}));

    Ideal empty(Z, {});
    CHECK(empty.groebner().basis.empty());

    auto XY = vars({"x", "y"});
    Ideal J = ideal(XY, {"x-1", "x*y"});
    auto basis = J.groebner().basis;
    std::vector<Poly> expect = polys(XY, {"x - 1", "y"});
    std::sort(basis.begin(), basis.end(),
              [](const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; });
    std::sort(expect.begin(), expect.end(),
              [](const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; });
    CHECK(basis == expect);
}

TEST_CASE("normal forms") {
    auto Z = vars({"z1", "z2", "z3"});
    CHECK(normal_form(P("z2^2", Z), ideal(Z, {"z2"})).is_zero());
    Ideal I = ideal(Z, {"z2^2", "z2*z3", "z3^2"});
    CHECK(normal_form(P("z2", Z), I) == P("z2", Z));
    auto X = vars({"x"});
    CHECK(normal_form(P("1", X), ideal(X, {"x-1", "x"})).is_zero());
}

TEST_CASE("membership") {
    auto Z = vars({"z1", "z2", "z3"});
    CHECK(ideal_member(P("z2*z3", Z), ideal(Z, {"z2", "z3"})));
    Ideal I = ideal(Z, {"z2^2", "z2*z3", "z3^2"});
    CHECK(!ideal_member(P("z2", Z), I));
    for (const auto& g : I.generators()) CHECK(ideal_member(g, I));
}

TEST_CASE("ideal equality") {
    auto Z = vars({"z1", "z2", "z3"});
    Ideal a = ideal(Z, {"z1*z3 - z2^2", "z2*z3", "z3^2"});
    Ideal b = ideal(Z, {"z3^2", "-z2^2 + z1*z3", "5*z2*z3"});
    CHECK(ideal_equal(a, b));
    auto V = vars({"x", "z1", "z2"});
    CHECK(!ideal_equal(ideal(V, {"z1^2 - x*z2^2"}), ideal(V, {"x*z1^2 - z2^2"})));
    // equality across orders
    Ideal c = ideal(Z, {"z1*z3 - z2^2", "z2*z3", "z3^2"}, MonomialOrder::lex());
    CHECK(ideal_equal(a, c));
}

TEST_CASE("equivalence relation on rescaled shuffles") {
    std::mt19937_64 rng(23);
    auto V = vars({"x", "y", "z"});
    for (int k = 0; k < 8; ++k) {
        std::vector<Poly> gens;
        for (int i = 0; i < 3; ++i) {
            Poly p = rand_poly(rng, V, 2, 3);
            if (!p.is_zero()) gens.push_back(p);
        }
        Ideal I(V, gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        for (auto& g : gens) g = g.scaled(rand_nonzero_rat(rng));
        Ideal J(V, gens);
        CHECK(ideal_equal(I, I));
        CHECK(ideal_equal(I, J));
        CHECK(ideal_equal(J, I));
    }
}

TEST_CASE("intersection") {
    auto Z = vars({"z1", "z2", "z3"});
    Ideal a = ideal(Z, {"z1"}), b = ideal(Z, {"z2"});
    Ideal c = ideal_intersect(a, b);
    CHECK(ideal_equal(c, ideal(Z, {"z1*z2"})));

    std::mt19937_64 rng(29);
    auto V = vars({"x", "y"});
    for (int k = 0; k < 6; ++k) {
        Ideal I(V, {rand_poly(rng, V, 2, 2), rand_poly(rng, V, 2, 2)});
        Ideal J(V, {rand_poly(rng, V, 2, 2)});
        Ideal meet = ideal_intersect(I, J);
        for (const auto& g : meet.generators()) {
            CHECK(ideal_member(g, I));
            CHECK(ideal_member(g, J));
        }
        // I*J is contained in the intersection
        for (const auto& f : I.generators())
            for (const auto& g : J.generators()) CHECK(ideal_member(f * g, meet));
    }
}

TEST_CASE("radical membership") {
    auto Z = vars({"z1", "z2", "z3"});
    Ideal I = ideal(Z, {"z2^2", "z2*z3", "z3^2"});
    CHECK(radical_member(P("z2", Z), I));
    CHECK(!radical_member(P("z1", Z), I));
    CHECK(radical_member(P("0", Z), I));
}

TEST_CASE("projective degree") {
    auto Z = vars({"z1", "z2", "z3"});
    CHECK(projective_degree(ideal(Z, {"z2", "z3"}), {{"z1", "z2", "z3"}}) == 1);
    // a positive-dimensional input must be rejected
    CHECK_THROWS_AS(projective_degree(ideal(Z, {"z3"}), {{"z1", "z2", "z3"}}), DomainError);
    // non-homogeneous input must be rejected
    CHECK_THROWS_AS(projective_degree(ideal(Z, {"z2^2 - z3"}), {{"z1", "z2", "z3"}}),
                    DomainError);
}

namespace {

// Independent oracle: minimal covers by brute force over all variable subsets.
std::set<std::set<std::size_t>> brute_minimal_covers(const Ideal& I) {
    std::vector<std::set<std::size_t>> supports;
    for (const auto& g : I.generators()) {
        std::set<std::size_t> s;
        for (std::size_t v = 0; v < I.vars()->size(); ++v)
            if (g.terms()[0].mono.exp(v) == 1) s.insert(v);
        supports.push_back(s);
    }
    const std::size_t n = I.vars()->size();
    std::set<std::set<std::size_t>> covers;
    for (std::size_t mask = 0; mask < (1ull << n); ++mask) {
        std::set<std::size_t> cand;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (1ull << v)) cand.insert(v);
        bool covers_all = true;
        for (const auto& s : supports) {
            bool hit = false;
            for (auto v : s) hit = hit || cand.count(v);
            if (!hit) covers_all = false;
        }
        if (covers_all) covers.insert(cand);
    }
    std::set<std::set<std::size_t>> minimal;
    for (const auto& c : covers) {
        bool is_min = true;
        for (const auto& d : covers)
            if (d != c && std::includes(c.begin(), c.end(), d.begin(), d.end())) is_min = false;
        if (is_min) minimal.insert(c);
    }
    return minimal;
}

std::set<std::set<std::size_t>> primes_as_sets(const std::vector<Ideal>& primes) {
    std::set<std::set<std::size_t>> out;
    for (const auto& p : primes) {
        std::set<std::size_t> s;
        for (const auto& g : p.generators())
            for (std::size_t v = 0; v < p.vars()->size(); ++v)
                if (g.uses_var(v)) s.insert(v);
        out.insert(s);
    }
    return out;
}

} // namespace

TEST_CASE("monomial minimal primes") {
    auto W = vars({"x1", "x2", "z1", "z2"});
    Ideal I = ideal(W, {"z1*z2*x1", "z1*z2*x2"});
    auto primes = monomial_minimal_primes(I);
    REQUIRE(primes.size() == 3);
    CHECK(primes_as_sets(primes) == brute_minimal_covers(I));
    // the intersection of the minimal primes recovers the (radical) ideal
    Ideal meet = primes[0];
    for (std::size_t k = 1; k < primes.size(); ++k) meet = ideal_intersect(meet, primes[k]);
    CHECK(ideal_equal(meet, I));

    Ideal J = ideal(W, {"z1*z2"});
    CHECK(primes_as_sets(monomial_minimal_primes(J)) == brute_minimal_covers(J));

    auto T = vars({"x", "y", "w"});
    Ideal K = ideal(T, {"x*y", "y*w", "x*w"});
    auto pk = monomial_minimal_primes(K);
    CHECK(pk.size() == 3);
    CHECK(primes_as_sets(pk) == brute_minimal_covers(K));
    // the radical property for squarefree monomial ideals
    Ideal meet_k = pk[0];
    for (std::size_t k = 1; k < pk.size(); ++k) meet_k = ideal_intersect(meet_k, pk[k]);
    CHECK(ideal_equal(meet_k, K));

    CHECK_THROWS_AS(monomial_minimal_primes(ideal(T, {"x^2"})), DomainError);
    CHECK_THROWS_AS(monomial_minimal_primes(ideal(T, {"x + y"})), DomainError);
}

TEST_CASE("buchberger self-check and budget") {
    auto V = vars({"a", "b", "c"});
    Ideal I = ideal(V, {"a+b+c", "a*b+b*c+c*a", "a*b*c-1"});
    const auto& rep = I.groebner();
    // every S-polynomial of basis pairs reduces to zero
    for (std::size_t i = 0; i < rep.basis.size(); ++i) {
        for (std::size_t j = i + 1; j < rep.basis.size(); ++j) {
            const Term& ti = rep.basis[i].leading_term(I.order());
            const Term& tj = rep.basis[j].leading_term(I.order());
            Mono l = Mono::lcm(ti.mono, tj.mono);
            Poly s = rep.basis[i].mul_term(ti.mono.divide_into(l), ti.coeff.reciprocal()) -
                     rep.basis[j].mul_term(tj.mono.divide_into(l), tj.coeff.reciprocal());
            CHECK(reduce_against(s, rep.basis, I.order()).is_zero());
        }
    }

    std::uint64_t saved = spair_budget();
    set_spair_budget(1);
    Ideal J = ideal(V, {"a^2*b - c^2", "b^2*c - a", "c^3 - a*b"});
    CHECK_THROWS_AS(J.groebner(), BudgetError);
    set_spair_budget(saved);
    CHECK(!Ideal(V, J.generators()).groebner().basis.empty());
}

TEST_CASE("normal form idempotence and linearity") {
    std::mt19937_64 rng(31);
    auto V = vars({"x", "y", "z"});
    for (int k = 0; k < 10; ++k) {
        Ideal I(V, {rand_poly(rng, V, 2, 3), rand_poly(rng, V, 2, 3)});
        Poly p = rand_poly(rng, V, 3, 4), q = rand_poly(rng, V, 3, 4);
        Poly np = normal_form(p, I);
        CHECK(normal_form(np, I) == np);
        CHECK(normal_form(p + q, I) == normal_form(normal_form(p, I) + normal_form(q, I), I));
    }
}

TEST_CASE("shared ideals may be used from several threads") {
    auto V = vars({"a", "b", "c"});
    Ideal I = ideal(V, {"a+b+c", "a*b+b*c+c*a", "a*b*c-1"});
    std::vector<std::vector<Poly>> results(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            Ideal copy = I; // shares the cache cell
            results[t] = copy.groebner().basis;
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("fresh variable names") {
    auto V = vars({"w", "w0", "x"});
    CHECK(fresh_var_name(*V, "w") == "w1");
    CHECK(fresh_var_name(*V, "t") == "t");
}
