#pragma once

#include <cstdint>
#include <vector>

namespace higgsgrass {

/// Exponent vector indexed by VarSet position. Length always equals the
/// size of the owning VarSet.
class Mono {
public:
    Mono() = default;
    explicit Mono(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Mono(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    std::size_t size() const { return exps_.size(); }
    std::uint32_t exp(std::size_t i) const { return exps_[i]; }
    void set_exp(std::size_t i, std::uint32_t e) { exps_[i] = e; }
    const std::vector<std::uint32_t>& exps() const { return exps_; }

    std::uint64_t degree() const;
    bool is_constant() const;
    bool is_squarefree() const;

    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;
    /// Quotient o / *this; caller guarantees divisibility.
    Mono divide_into(const Mono& o) const;
    static Mono lcm(const Mono& a, const Mono& b);
    static bool coprime(const Mono& a, const Mono& b);

    friend bool operator==(const Mono& a, const Mono& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }

private:
    std::vector<std::uint32_t> exps_;
};

/// Total order on monomials compatible with multiplication.
/// elimination_block(k) eliminates the first k variables: it is the product
/// order grevlex(first k) x grevlex(rest).
class MonomialOrder {
public:
    enum class Kind { lex, grevlex, elimination_block };

    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder elimination_block(std::size_t k) {
        return MonomialOrder(Kind::elimination_block, k);
    }

    Kind kind() const { return kind_; }
    std::size_t block() const { return block_; }

    /// +1 if a > b, 0 if equal, -1 if a < b.
    int compare(const Mono& a, const Mono& b) const;
    bool greater(const Mono& a, const Mono& b) const { return compare(a, b) > 0; }
    bool less(const Mono& a, const Mono& b) const { return compare(a, b) < 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.block_ == b.block_;
    }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

private:
    MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
    Kind kind_;
    std::size_t block_;
};

} // namespace higgsgrass
