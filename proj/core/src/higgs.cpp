#include "higgsgrass/higgs.hpp"

#include "higgsgrass/errors.hpp"
#include "higgsgrass/polyalg.hpp"

#include <algorithm>
#include <map>

namespace higgsgrass {

HiggsField validate_higgs(std::vector<PolyMat> matrices, VarSetPtr base_vars) {
    if (matrices.empty()) throw DomainError("a Higgs field needs at least one matrix");
    if (matrices.size() != base_vars->size())
        throw DomainError("a Higgs field needs one matrix per base variable");
    const std::size_t r = matrices[0].size();
    if (r == 0) throw DomainError("empty Higgs matrix");
    for (const auto& m : matrices) {
        if (m.size() != r) throw DomainError("Higgs matrices must share one size");
        for (const auto& row : m) {
            if (row.size() != r) throw DomainError("non-square Higgs matrix");
            for (const auto& e : row)
                if (!same_vars(e.vars(), base_vars))
                    throw DomainError("Higgs entry over the wrong variable set");
        }
    }
    for (std::size_t a = 0; a < matrices.size(); ++a) {
        for (std::size_t b = a + 1; b < matrices.size(); ++b) {
            PolyMat c = commutator(matrices[a], matrices[b]);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (!c[i][j].is_zero())
                        throw DomainError(
                            "matrices " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                            " do not commute: commutator entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") = " + c[i][j].to_string());
        }
    }
    HiggsField H;
    H.n = static_cast<int>(matrices.size());
    H.r = static_cast<int>(r);
    H.base_vars = std::move(base_vars);
    H.matrices = std::move(matrices);
    return H;
}

HiggsField normalize_trace(const HiggsField& H, const std::vector<Poly>& eta) {
    if (static_cast<int>(eta.size()) != H.n)
        throw DomainError("normalize_trace: eta must have one entry per matrix");
    HiggsField out = H;
    for (int h = 0; h < H.n; ++h) {
        for (int i = 0; i < H.r; ++i) out.matrices[h][i][i] -= eta[h];
    }
    return out;
}

HiggsField transpose_field(const HiggsField& H) {
    HiggsField out = H;
    for (auto& m : out.matrices) m = mat_transpose(m);
    return out;
}

namespace {

// Binomial coefficients as rationals, small arguments only.
Rat binom(std::uint32_t n, std::uint32_t k) {
    Rat acc(1);
    for (std::uint32_t i = 0; i < k; ++i)
        acc = acc * Rat(static_cast<long>(n - i)) / Rat(static_cast<long>(i + 1));
    return acc;
}

} // namespace

ToeplitzWitness toeplitz_decompose(const PolyMat& A, const PolyMat& T) {
    const std::size_t r = A.size();
    if (r == 0 || T.size() != r) throw DomainError("toeplitz_decompose: shape mismatch");
    const VarSetPtr& vars = A[0][0].vars();
    const Poly& lambda = A[0][0];
    // A = lambda*I + N, N the nilpotent single Jordan block.
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            const Poly& e = A[i][j];
            if (i == j) {
                if (e != lambda) throw DomainError("toeplitz_decompose: A is not lambda*I + N");
            } else if (j == i + 1) {
                if (e != Poly::constant(vars, Rat(1)))
                    throw DomainError("toeplitz_decompose: A is not a single Jordan block");
            } else if (!e.is_zero()) {
                throw DomainError("toeplitz_decompose: A is not a single Jordan block");
            }
        }
    }
    if (!mat_is_zero(commutator(A, T)))
        throw DomainError("toeplitz_decompose: T does not commute with A");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            bool toeplitz_ok = (j >= i) ? (T[i][j] == T[0][j - i]) : T[i][j].is_zero();
            if (!toeplitz_ok)
                throw DomainError("toeplitz_decompose: T is not upper-triangular Toeplitz");
        }

    // T = sum b_k N^k with b_k = T[0][k]; rewrite p(t) = sum b_k (t-lambda)^k
    // in powers of t.
    std::vector<Poly> mu(r, Poly::zero(vars));
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = j; k < r; ++k) {
            Poly c = T[0][k].scaled(binom(static_cast<std::uint32_t>(k),
                                          static_cast<std::uint32_t>(j)));
            mu[j] += c * (-lambda).pow(static_cast<std::uint32_t>(k - j));
        }
    }

    // Reconstruction check: sum mu_k A^k must reproduce T exactly.
    PolyMat rec = mat_zero(vars, r, r);
    PolyMat power = mat_identity(vars, r);
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) rec[i][j] += mu[k] * power[i][j];
        if (k + 1 < r) power = mat_mul(power, A);
    }
    if (!mat_equal(rec, T)) throw DomainError("toeplitz_decompose: reconstruction failed");

    ToeplitzWitness w;
    w.mu = std::move(mu);
    w.lambda = lambda;
    w.mu1_is_zero = r < 2 || w.mu[1].is_zero();
    return w;
}

namespace {

using RatMat = std::vector<std::vector<Rat>>;

RatMat rat_identity(std::size_t r) {
    RatMat m(r, std::vector<Rat>(r, Rat(0)));
    for (std::size_t i = 0; i < r; ++i) m[i][i] = Rat(1);
    return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    const std::size_t r = a.size();
    RatMat out(r, std::vector<Rat>(r, Rat(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < r; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

std::size_t rat_rank(RatMat m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        Rat inv = m[rank][col].reciprocal();
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

JordanType jordan_type_at_point(const HiggsField& H, int which, const std::vector<Rat>& point) {
    if (which < 0 || which >= H.n) throw DomainError("jordan_type_at_point: bad matrix index");
    if (static_cast<int>(point.size()) != H.n)
        throw DomainError("jordan_type_at_point: point length must equal the base dimension");
    std::map<std::string, Rat> bindings;
    for (int i = 0; i < H.n; ++i) bindings[H.base_vars->name(i)] = point[i];

    const std::size_t r = H.r;
    RatMat M(r, std::vector<Rat>(r, Rat(0)));
    PolyMat constant(r, std::vector<Poly>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Poly e = H.matrices[which][i][j].evaluate(bindings);
            M[i][j] = e.constant_value();
            constant[i][j] = e;
        }

    Poly chi = char_poly(constant, "t");
    auto roots = rational_roots(chi, chi.vars()->size() - 1);
    if (roots.residual_degree > 0)
        throw DomainError("jordan_type_at_point: characteristic polynomial does not split over Q; "
                          "rootless factor " + roots.residual.to_string());

    JordanType type;
    for (const auto& [lambda, alg_mult] : roots.roots) {
        RatMat shifted = M;
        for (std::size_t i = 0; i < r; ++i) shifted[i][i] -= lambda;
        // blocks of size >= k: rank((M-lambda)^{k-1}) - rank((M-lambda)^k)
        std::vector<std::size_t> ranks{r};
        RatMat power = rat_identity(r);
        for (int k = 1; k <= alg_mult + 1 && k <= static_cast<int>(r) + 1; ++k) {
            power = rat_mul(power, shifted);
            ranks.push_back(rat_rank(power));
        }
        for (std::size_t k = 1; k + 1 <= ranks.size(); ++k) {
            std::size_t at_least_k = ranks[k - 1] - ranks[k];
            std::size_t at_least_k1 =
                (k + 1 < ranks.size()) ? ranks[k] - ranks[k + 1] : 0;
            if (at_least_k > at_least_k1)
                type.push_back({lambda, static_cast<int>(k),
                                static_cast<int>(at_least_k - at_least_k1)});
        }
    }
    std::sort(type.begin(), type.end(), [](const JordanBlock& a, const JordanBlock& b) {
        if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
        return a.size > b.size;
    });
    int total = 0;
    for (const auto& b : type) total += b.size * b.multiplicity;
    if (total != H.r) throw DomainError("jordan_type_at_point: internal bookkeeping error");
    return type;
}

std::pair<Poly, Poly> proportionality_2x2(const PolyMat& U, const PolyMat& V) {
    if (U.size() != 2 || V.size() != 2 || U[0].size() != 2 || V[0].size() != 2)
        throw DomainError("proportionality_2x2: matrices must be 2x2");
    if (!U[0][0].is_zero() || !V[0][0].is_zero())
        throw DomainError("proportionality_2x2: (1,1) entries must vanish");
    if (mat_is_zero(U) || mat_is_zero(V))
        throw DomainError("proportionality_2x2: matrices must be nonzero");
    if (!mat_is_zero(commutator(U, V)))
        throw DomainError("proportionality_2x2: matrices do not commute");

    const std::pair<std::size_t, std::size_t> slots[] = {{1, 0}, {0, 1}, {1, 1}};
    for (auto [i, j] : slots) {
        const Poly& u = U[i][j];
        const Poly& v = V[i][j];
        if (u.is_zero() || v.is_zero()) continue;
        PolyMat lhs = mat_sub(mat_scale(U, v), mat_scale(V, u));
        if (mat_is_zero(lhs)) return {u, v};
    }
    throw DomainError("proportionality_2x2: no proportionality witness exists");
}

} // namespace higgsgrass
