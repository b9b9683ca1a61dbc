#include "higgsgrass/groebner.hpp"

#include "higgsgrass/errors.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <set>

namespace higgsgrass {

namespace detail {
struct GBCache {
    std::mutex mutex;
    std::optional<GBReport> report;
};
} // namespace detail

namespace {

std::atomic<std::uint64_t> g_spair_budget{200000};

/// Term list sorted descending under the active order.
using OPoly = std::vector<Term>;

OPoly to_ordered(const Poly& p, const MonomialOrder& order) {
    OPoly t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    return t;
}

Poly to_poly(const VarSetPtr& vars, OPoly terms) {
    return Poly::from_terms(vars, std::move(terms));
}

/// a - c * x^m * b, both sorted descending; result sorted descending.
OPoly sub_mul(const OPoly& a, const Rat& c, const Mono& m, const OPoly& b,
              const MonomialOrder& order) {
    OPoly out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Mono bm = b[j].mono * m;
        int cmp = order.compare(a[i].mono, bm);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({std::move(bm), -(c * b[j].coeff)});
            ++j;
        } else {
            Rat s = a[i].coeff - c * b[j].coeff;
            if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono * m, -(c * b[j].coeff)});
    return out;
}

void make_monic(OPoly& p) {
    if (p.empty() || p.front().coeff.is_one()) return;
    Rat inv = p.front().coeff.reciprocal();
    for (auto& t : p) t.coeff *= inv;
}

/// Full reduction of p against `basis` (monic, sorted descending each).
/// Deterministic: the first basis element whose leading monomial divides the
/// current term wins.
OPoly reduce_full(OPoly p, const std::vector<OPoly>& basis, const MonomialOrder& order) {
    OPoly remainder;
    while (!p.empty()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            if (g.front().mono.divides(p.front().mono)) {
                Mono m = g.front().mono.divide_into(p.front().mono);
                Rat c = p.front().coeff / g.front().coeff;
                p = sub_mul(p, c, m, g, order);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(p.front());
            p.erase(p.begin());
        }
    }
    return remainder;
}

struct PairKey {
    Mono lcm;
    std::size_t i, j;
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const PairKey& a, const PairKey& b) const {
        int c = order->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

GBReport buchberger(const VarSetPtr& vars, const std::vector<Poly>& gens,
                    const MonomialOrder& order) {
    GBReport report;
    std::vector<OPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        OPoly og = to_ordered(g, order);
        make_monic(og);
        basis.push_back(std::move(og));
    }

    std::set<PairKey, PairLess> queue{PairLess{&order}};
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Mono l = Mono::lcm(basis[i].front().mono, basis[j].front().mono);
        queue.insert({std::move(l), i, j});
        pending.insert({i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    const std::uint64_t budget = spair_budget();
    while (!queue.empty()) {
        PairKey top = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({top.i, top.j});

        if (++report.s_pairs_processed > budget)
            throw BudgetError("S-pair budget exhausted (" + std::to_string(budget) +
                              " pairs); raise HIGGSGRASS_SPAIR_BUDGET for larger inputs");

        const Mono& lm_i = basis[top.i].front().mono;
        const Mono& lm_j = basis[top.j].front().mono;
        // Buchberger's first criterion: coprime leading terms.
        if (Mono::coprime(lm_i, lm_j)) continue;
        // Chain criterion: a third element divides the lcm and both side
        // pairs were already treated.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == top.i || k == top.j) continue;
            if (!basis[k].front().mono.divides(top.lcm)) continue;
            auto mm = std::minmax(top.i, k);
            auto nn = std::minmax(top.j, k);
            if (!pending.count({mm.first, mm.second}) && !pending.count({nn.first, nn.second}))
                skip = true;
        }
        if (skip) continue;

        // S-polynomial of two monic elements.
        OPoly s = sub_mul(OPoly{}, Rat(-1), lm_i.divide_into(top.lcm), basis[top.i], order);
        s = sub_mul(s, Rat(1), lm_j.divide_into(top.lcm), basis[top.j], order);
        OPoly h = reduce_full(std::move(s), basis, order);
        if (h.empty()) {
            ++report.reductions_to_zero;
            continue;
        }
        make_monic(h);
        basis.push_back(std::move(h));
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) push_pair(i, basis.size() - 1);
    }

    // Minimalize: keep only elements whose leading monomial is not divisible
    // by another kept one.
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = order.compare(basis[a].front().mono, basis[b].front().mono);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<OPoly> minimal;
    for (std::size_t id : idx) {
        bool dominated = false;
        for (const auto& kept : minimal)
            if (kept.front().mono.divides(basis[id].front().mono)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(basis[id]);
    }

    // Tail-reduce each element against the others.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OPoly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = reduce_full(std::move(minimal[i]), others, order);
        make_monic(minimal[i]);
    }

    std::sort(minimal.begin(), minimal.end(), [&](const OPoly& a, const OPoly& b) {
        return order.greater(a.front().mono, b.front().mono);
    });
    for (auto& g : minimal) report.basis.push_back(to_poly(vars, std::move(g)));
    return report;
}

} // namespace

std::uint64_t spair_budget() { return g_spair_budget.load(); }
void set_spair_budget(std::uint64_t budget) { g_spair_budget.store(budget); }

Ideal::Ideal(VarSetPtr vars, std::vector<Poly> gens, MonomialOrder order)
    : vars_(std::move(vars)), order_(order), cache_(std::make_shared<detail::GBCache>()) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_vars(g.vars(), vars_))
            throw DomainError("ideal generator over the wrong variable set");
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::with_order(MonomialOrder order) const { return Ideal(vars_, gens_, order); }

Ideal Ideal::with_extra_generators(std::vector<Poly> extra) const {
    std::vector<Poly> gens = gens_;
    for (auto& g : extra) gens.push_back(std::move(g));
    return Ideal(vars_, std::move(gens), order_);
}

Ideal Ideal::embedded(const VarSetPtr& target) const {
    std::vector<Poly> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(g.embedded(target));
    return Ideal(target, std::move(gens), order_);
}

const GBReport& Ideal::groebner() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->report) cache_->report = buchberger(vars_, gens_, order_);
    return *cache_->report;
}

GBReport groebner_basis(const Ideal& I) { return I.groebner(); }

Poly reduce_against(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& order) {
    std::vector<OPoly> ob;
    ob.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero()) ob.push_back(to_ordered(g, order));
    return to_poly(p.vars(), reduce_full(to_ordered(p, order), ob, order));
}

Poly normal_form(const Poly& p, const Ideal& I) {
    if (!same_vars(p.vars(), I.vars()))
        throw DomainError("normal_form: polynomial over the wrong variable set");
    return reduce_against(p, I.groebner().basis, I.order());
}

bool ideal_member(const Poly& p, const Ideal& I) { return normal_form(p, I).is_zero(); }

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (!same_vars(I.vars(), J.vars()))
        throw DomainError("ideal_equal: different variable sets");
    const auto& bi = I.groebner().basis;
    Ideal j_common = (J.order() == I.order()) ? J : J.with_order(I.order());
    const auto& bj = j_common.groebner().basis;
    if (bi.size() != bj.size()) return false;
    for (std::size_t k = 0; k < bi.size(); ++k)
        if (bi[k] != bj[k]) return false;
    return true;
}

std::string fresh_var_name(const VarSet& vars, const std::string& prefix) {
    if (!vars.contains(prefix)) return prefix;
    for (std::size_t k = 0;; ++k) {
        std::string name = prefix + std::to_string(k);
        if (!vars.contains(name)) return name;
    }
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    if (!same_vars(I.vars(), J.vars()))
        throw DomainError("ideal_intersect: different variable sets");
    const VarSetPtr& vars = I.vars();
    std::string aux = fresh_var_name(*vars, "w");
    std::vector<std::string> names{aux};
    for (const auto& n : vars->names()) names.push_back(n);
    VarSetPtr ext = VarSet::make(std::move(names));

    Poly w = Poly::variable(ext, aux);
    Poly one_minus_w = Poly::constant(ext, Rat(1)) - w;
    std::vector<Poly> gens;
    for (const auto& f : I.generators()) gens.push_back(w * f.embedded(ext));
    for (const auto& g : J.generators()) gens.push_back(one_minus_w * g.embedded(ext));

    Ideal elim(ext, std::move(gens), MonomialOrder::elimination_block(1));
    std::vector<Poly> kept;
    for (const auto& g : elim.groebner().basis)
        if (!g.uses_var(0)) kept.push_back(g.embedded(vars));
    return Ideal(vars, std::move(kept), I.order());
}

bool radical_member(const Poly& p, const Ideal& I) {
    if (!same_vars(p.vars(), I.vars()))
        throw DomainError("radical_member: polynomial over the wrong variable set");
    if (p.is_zero()) return true;
    std::string aux = fresh_var_name(*I.vars(), "w");
    VarSetPtr ext = VarSet::extend(I.vars(), {aux});
    std::vector<Poly> gens;
    for (const auto& g : I.generators()) gens.push_back(g.embedded(ext));
    gens.push_back(Poly::constant(ext, Rat(1)) - Poly::variable(ext, aux) * p.embedded(ext));
    return is_unit_ideal(Ideal(ext, std::move(gens)));
}

bool is_unit_ideal(const Ideal& I) {
    const auto& basis = I.groebner().basis;
    return basis.size() == 1 && basis[0].is_constant();
}

namespace {

using Support = std::vector<std::size_t>; // sorted variable indices

void minimal_covers(const std::vector<Support>& gens, std::size_t from, std::set<std::size_t>& cur,
                    std::vector<std::set<std::size_t>>& out) {
    // Find the first generator not met by the current cover.
    std::size_t g = from;
    for (; g < gens.size(); ++g) {
        bool hit = false;
        for (auto v : gens[g])
            if (cur.count(v)) {
                hit = true;
                break;
            }
        if (!hit) break;
    }
    if (g == gens.size()) {
        out.push_back(cur);
        return;
    }
    for (auto v : gens[g]) {
        cur.insert(v);
        minimal_covers(gens, g + 1, cur, out);
        cur.erase(v);
    }
}

} // namespace

std::vector<Ideal> monomial_minimal_primes(const Ideal& I) {
    std::vector<Support> supports;
    for (const auto& g : I.generators()) {
        if (g.term_count() != 1)
            throw DomainError("monomial_minimal_primes: non-monomial generator '" +
                              g.to_string() + "'");
        const Mono& m = g.terms()[0].mono;
        if (!m.is_squarefree())
            throw DomainError("monomial_minimal_primes: non-squarefree generator '" +
                              g.to_string() + "'");
        Support s;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m.exp(i) == 1) s.push_back(i);
        if (s.empty()) return {}; // unit ideal
        supports.push_back(std::move(s));
    }

    std::vector<std::set<std::size_t>> covers;
    std::set<std::size_t> cur;
    minimal_covers(supports, 0, cur, covers);

    // Drop non-minimal covers and duplicates.
    std::vector<std::vector<std::size_t>> primes;
    for (const auto& c : covers) {
        bool minimal = true;
        for (const auto& d : covers) {
            if (d.size() < c.size() && std::includes(c.begin(), c.end(), d.begin(), d.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) primes.emplace_back(c.begin(), c.end());
    }
    std::sort(primes.begin(), primes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    std::vector<Ideal> out;
    for (const auto& p : primes) {
        std::vector<Poly> gens;
        for (auto v : p) gens.push_back(Poly::variable(I.vars(), v));
        out.emplace_back(I.vars(), std::move(gens), I.order());
    }
    return out;
}

} // namespace higgsgrass
