#include "higgsgrass/poly.hpp"

#include "higgsgrass/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace higgsgrass {

namespace {
const MonomialOrder kGrevlex = MonomialOrder::grevlex();
} // namespace

Poly Poly::constant(VarSetPtr vars, Rat c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.push_back({Mono(p.vars_->size()), std::move(c)});
    return p;
}

Poly Poly::variable(const VarSetPtr& vars, std::string_view name) {
    auto idx = vars->index_of(name);
    if (!idx) throw DomainError("unknown variable: '" + std::string(name) + "'");
    return variable(vars, *idx);
}

Poly Poly::variable(VarSetPtr vars, std::size_t index) {
    Mono m(vars->size());
    m.set_exp(index, 1);
    return monomial(std::move(vars), std::move(m), Rat(1));
}

Poly Poly::monomial(VarSetPtr vars, Mono m, Rat c) {
    Poly p(std::move(vars));
    if (m.size() != p.vars_->size()) throw DomainError("monomial arity mismatch");
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(VarSetPtr vars, std::vector<Term> terms) {
    Poly p(std::move(vars));
    p.terms_ = std::move(terms);
    for (const auto& t : p.terms_)
        if (t.mono.size() != p.vars_->size()) throw DomainError("monomial arity mismatch");
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return kGrevlex.greater(a.mono, b.mono);
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

void Poly::check_same_vars(const Poly& o) const {
    if (!same_vars(vars_, o.vars_)) throw DomainError("polynomials over different variable sets");
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!terms_.back().mono.is_constant()) return Rat(0);
    return terms_.back().coeff;
}

std::uint64_t Poly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

std::uint32_t Poly::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
    return d;
}

bool Poly::uses_var(std::size_t var) const {
    for (const auto& t : terms_)
        if (t.mono.exp(var) != 0) return true;
    return false;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.front();
}

const Term& Poly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Rat Poly::coefficient_of(const Mono& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rat(0);
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_vars(o);
    Poly out(vars_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = kGrevlex.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rat s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same_vars(o);
    if (is_zero() || o.is_zero()) return Poly(vars_);
    auto greater = [](const Mono& a, const Mono& b) { return kGrevlex.greater(a, b); };
    std::map<Mono, Rat, decltype(greater)> acc(greater);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Mono m = a.mono * b.mono;
            Rat c = a.coeff * b.coeff;
            auto [it, inserted] = acc.try_emplace(std::move(m), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    Poly out(vars_);
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) out.terms_.push_back({m, c});
    return out;
}

Poly Poly::scaled(const Rat& c) const {
    if (c.is_zero()) return Poly(vars_);
    Poly out(*this);
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

Poly Poly::mul_term(const Mono& m, const Rat& c) const {
    if (c.is_zero()) return Poly(vars_);
    Poly out(vars_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
    // Multiplying by a fixed monomial preserves the grevlex sorting.
    return out;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly result = Poly::constant(vars_, Rat(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Poly Poly::derivative(std::string_view var) const {
    auto idx = vars_->index_of(var);
    if (!idx) throw DomainError("unknown variable: '" + std::string(var) + "'");
    Poly out(vars_);
    for (const auto& t : terms_) {
        std::uint32_t e = t.mono.exp(*idx);
        if (e == 0) continue;
        Mono m = t.mono;
        m.set_exp(*idx, e - 1);
        out.terms_.push_back({std::move(m), t.coeff * Rat(static_cast<long>(e))});
    }
    out.normalize();
    return out;
}

Poly Poly::evaluate(const std::map<std::string, Rat>& bindings) const {
    std::vector<std::optional<Rat>> value(vars_->size());
    for (const auto& [name, v] : bindings) {
        auto idx = vars_->index_of(name);
        if (!idx) throw DomainError("unknown variable: '" + name + "'");
        value[*idx] = v;
    }
    std::vector<std::string> kept;
    std::vector<std::size_t> kept_index(vars_->size(), 0);
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        if (!value[i]) {
            kept_index[i] = kept.size();
            kept.push_back(vars_->name(i));
        }
    }
    VarSetPtr target = VarSet::make(std::move(kept));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        Mono m(target->size());
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            std::uint32_t e = t.mono.exp(i);
            if (e == 0) continue;
            if (value[i]) {
                Rat pw(1);
                for (std::uint32_t k = 0; k < e; ++k) pw *= *value[i];
                c *= pw;
            } else {
                m.set_exp(kept_index[i], e);
            }
        }
        if (!c.is_zero()) out.push_back({std::move(m), std::move(c)});
    }
    return from_terms(std::move(target), std::move(out));
}

Poly Poly::substitute(const VarSetPtr& target, const std::map<std::string, Poly>& images) const {
    std::vector<const Poly*> image(vars_->size(), nullptr);
    for (const auto& [name, img] : images) {
        auto idx = vars_->index_of(name);
        if (!idx) throw DomainError("unknown variable: '" + name + "'");
        if (!same_vars(img.vars(), target))
            throw DomainError("substitution image over the wrong variable set");
        image[*idx] = &img;
    }
    Poly result = Poly::zero(target);
    for (const auto& t : terms_) {
        Poly factor = Poly::constant(target, t.coeff);
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            std::uint32_t e = t.mono.exp(i);
            if (e == 0) continue;
            Poly base = image[i] ? *image[i] : Poly::variable(target, vars_->name(i));
            factor = factor * base.pow(e);
        }
        result += factor;
    }
    return result;
}

Poly Poly::embedded(const VarSetPtr& target) const {
    if (same_vars(vars_, target)) return *this;
    std::vector<std::optional<std::size_t>> remap(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) remap[i] = target->index_of(vars_->name(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Mono m(target->size());
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            std::uint32_t e = t.mono.exp(i);
            if (e == 0) continue;
            if (!remap[i])
                throw DomainError("variable '" + vars_->name(i) +
                                  "' is not present in the target variable set");
            m.set_exp(*remap[i], e);
        }
        out.push_back({std::move(m), t.coeff});
    }
    return from_terms(target, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_term().coeff.reciprocal());
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            c = c.abs();
        }
        bool printed_coeff = false;
        if (!c.is_one() || t.mono.is_constant()) {
            os << c.to_string();
            printed_coeff = true;
        }
        bool first_var = true;
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            std::uint32_t e = t.mono.exp(i);
            if (e == 0) continue;
            if (printed_coeff || !first_var) os << "*";
            os << vars_->name(i);
            if (e > 1) os << "^" << e;
            first_var = false;
            printed_coeff = true;
        }
    }
    return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
    if (!same_vars(a.vars_, b.vars_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono) return false;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

int Poly::compare(const Poly& a, const Poly& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = kGrevlex.compare(a.terms_[i].mono, b.terms_[i].mono);
        if (c != 0) return c;
        if (a.terms_[i].coeff != b.terms_[i].coeff)
            return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

} // namespace higgsgrass
