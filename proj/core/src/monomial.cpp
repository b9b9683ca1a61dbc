#include "higgsgrass/monomial.hpp"

#include "higgsgrass/errors.hpp"

#include <algorithm>

namespace higgsgrass {

std::uint64_t Mono::degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Mono::is_constant() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Mono::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e <= 1; });
}

Mono Mono::operator*(const Mono& o) const {
    Mono out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += o.exps_[i];
    return out;
}

bool Mono::divides(const Mono& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Mono Mono::divide_into(const Mono& o) const {
    Mono out(o);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= exps_[i];
    return out;
}

Mono Mono::lcm(const Mono& a, const Mono& b) {
    Mono out(a);
    for (std::size_t i = 0; i < out.exps_.size(); ++i)
        out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return out;
}

bool Mono::coprime(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
}

namespace {

int cmp_lex(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    }
    return 0;
}

int cmp_grevlex(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exp(i);
        db += b.exp(i);
    }
    if (da != db) return da > db ? 1 : -1;
    // Equal degree: the one with the smaller exponent on the last differing
    // variable is the larger monomial.
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Mono& a, const Mono& b) const {
    if (a.size() != b.size()) throw DomainError("monomial order: arity mismatch");
    const std::size_t n = a.size();
    switch (kind_) {
    case Kind::lex:
        return cmp_lex(a, b, 0, n);
    case Kind::grevlex:
        return cmp_grevlex(a, b, 0, n);
    case Kind::elimination_block: {
        const std::size_t k = std::min(block_, n);
        if (int c = cmp_grevlex(a, b, 0, k)) return c;
        return cmp_grevlex(a, b, k, n);
    }
    }
    return 0;
}

} // namespace higgsgrass
