#pragma once

#include "higgsgrass/monomial.hpp"
#include "higgsgrass/rat.hpp"
#include "higgsgrass/varset.hpp"

#include <map>
#include <string>
#include <vector>

namespace higgsgrass {

struct Term {
    Mono mono;
    Rat coeff;
};

/// Sparse multivariate polynomial with rational coefficients over a shared
/// VarSet. Terms are kept in canonical form: sorted descending under grevlex,
/// no zero coefficients. Immutable in practice; all operations return new
/// values.
class Poly {
public:
    Poly() : vars_(VarSet::make({})) {}
    explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static Poly zero(VarSetPtr vars) { return Poly(std::move(vars)); }
    static Poly constant(VarSetPtr vars, Rat c);
    static Poly variable(const VarSetPtr& vars, std::string_view name);
    static Poly variable(VarSetPtr vars, std::size_t index);
    static Poly monomial(VarSetPtr vars, Mono m, Rat c);
    /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
    static Poly from_terms(VarSetPtr vars, std::vector<Term> terms);

    const VarSetPtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_constant(); }
    /// Coefficient of the constant monomial (the whole value when constant).
    Rat constant_value() const;

    std::uint64_t total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;
    bool uses_var(std::size_t var) const;

    /// Leading term under grevlex (canonical storage order).
    const Term& leading_term() const;
    /// Leading term under an arbitrary order (linear scan).
    const Term& leading_term(const MonomialOrder& order) const;

    Rat coefficient_of(const Mono& m) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rat& c) const;
    Poly mul_term(const Mono& m, const Rat& c) const;
    Poly pow(std::uint32_t e) const;

    /// Formal partial derivative.
    Poly derivative(std::string_view var) const;

    /// Exact substitution of rational values for a subset of the variables.
    /// The result lives over the unbound variables, in their original order.
    Poly evaluate(const std::map<std::string, Rat>& bindings) const;

    /// Substitutes polynomials (all over `target`) for named variables;
    /// unmapped variables must exist in `target` and pass through.
    Poly substitute(const VarSetPtr& target, const std::map<std::string, Poly>& images) const;

    /// Re-expresses the polynomial over another VarSet containing (by name)
    /// every variable it uses.
    Poly embedded(const VarSetPtr& target) const;

    /// Monic under grevlex (divides by the leading coefficient).
    Poly monic() const;

    bool is_homogeneous() const;

    /// Canonical printing: descending grevlex, "a/b" coefficients, '*' and '^'.
    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Deterministic three-way comparison (grevlex term lists, then coeffs).
    static int compare(const Poly& a, const Poly& b);

private:
    void normalize();
    void check_same_vars(const Poly& o) const;

    VarSetPtr vars_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace higgsgrass
