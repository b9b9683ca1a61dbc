#include "higgsgrass/matpoly.hpp"

#include "higgsgrass/errors.hpp"

#include <unordered_map>

namespace higgsgrass {

namespace {

void check_rect(const PolyMat& a) {
    if (a.empty()) throw DomainError("empty matrix");
    for (const auto& row : a)
        if (row.size() != a[0].size()) throw DomainError("ragged matrix");
}

void check_square(const PolyMat& a) {
    check_rect(a);
    if (a.size() != a[0].size()) throw DomainError("non-square matrix");
}

} // namespace

PolyMat mat_identity(const VarSetPtr& vars, std::size_t r) {
    PolyMat m(r, std::vector<Poly>(r, Poly::zero(vars)));
    for (std::size_t i = 0; i < r; ++i) m[i][i] = Poly::constant(vars, Rat(1));
    return m;
}

PolyMat mat_zero(const VarSetPtr& vars, std::size_t rows, std::size_t cols) {
    return PolyMat(rows, std::vector<Poly>(cols, Poly::zero(vars)));
}

PolyMat mat_add(const PolyMat& a, const PolyMat& b) {
    check_rect(a);
    if (a.size() != b.size() || a[0].size() != b[0].size())
        throw DomainError("matrix shape mismatch");
    PolyMat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) out[i][j] += b[i][j];
    return out;
}

PolyMat mat_sub(const PolyMat& a, const PolyMat& b) {
    check_rect(a);
    if (a.size() != b.size() || a[0].size() != b[0].size())
        throw DomainError("matrix shape mismatch");
    PolyMat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
    check_rect(a);
    check_rect(b);
    if (a[0].size() != b.size()) throw DomainError("matrix shape mismatch");
    PolyMat out = mat_zero(a[0][0].vars(), a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

PolyMat mat_scale(const PolyMat& a, const Poly& c) {
    PolyMat out = a;
    for (auto& row : out)
        for (auto& e : row) e *= c;
    return out;
}

PolyMat mat_transpose(const PolyMat& a) {
    check_rect(a);
    PolyMat out(a[0].size(), std::vector<Poly>(a.size(), Poly::zero(a[0][0].vars())));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

PolyMat mat_pow(const PolyMat& a, std::uint32_t e) {
    check_square(a);
    PolyMat result = mat_identity(a[0][0].vars(), a.size());
    PolyMat base = a;
    while (e > 0) {
        if (e & 1u) result = mat_mul(result, base);
        e >>= 1u;
        if (e > 0) base = mat_mul(base, base);
    }
    return result;
}

bool mat_is_zero(const PolyMat& a) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

bool mat_equal(const PolyMat& a, const PolyMat& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

PolyMat commutator(const PolyMat& a, const PolyMat& b) {
    return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

PolyMat mat_embedded(const PolyMat& a, const VarSetPtr& target) {
    PolyMat out = a;
    for (auto& row : out)
        for (auto& e : row) e = e.embedded(target);
    return out;
}

namespace {

// Minor expansion over column subsets: det of rows [popcount(mask)..r) on the
// columns NOT in mask.
Poly det_rec(const PolyMat& m, std::uint32_t mask, std::size_t row,
             std::unordered_map<std::uint32_t, Poly>& memo) {
    const std::size_t r = m.size();
    if (row == r) return Poly::constant(m[0][0].vars(), Rat(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Poly acc = Poly::zero(m[0][0].vars());
    int sign = 1;
    for (std::size_t col = 0; col < r; ++col) {
        if (mask & (1u << col)) continue;
        if (!m[row][col].is_zero()) {
            Poly sub = det_rec(m, mask | (1u << col), row + 1, memo);
            Poly contrib = m[row][col] * sub;
            acc = sign > 0 ? acc + contrib : acc - contrib;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace

Poly det(const PolyMat& m) {
    check_square(m);
    if (m.size() > 16) throw DomainError("determinant: matrix too large");
    std::unordered_map<std::uint32_t, Poly> memo;
    return det_rec(m, 0, 0, memo);
}

Poly char_poly(const PolyMat& m, const std::string& var) {
    check_square(m);
    const VarSetPtr& base = m[0][0].vars();
    if (base->contains(var))
        throw DomainError("char_poly: variable '" + var + "' collides with a matrix variable");
    VarSetPtr ext = VarSet::extend(base, {var});
    Poly t = Poly::variable(ext, var);
    PolyMat shifted = mat_sub(mat_scale(mat_identity(ext, m.size()), t), mat_embedded(m, ext));
    return det(shifted);
}

} // namespace higgsgrass
