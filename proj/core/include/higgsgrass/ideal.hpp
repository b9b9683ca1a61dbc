#pragma once

#include "higgsgrass/poly.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace higgsgrass {

/// Result of a Buchberger run. `basis` is the unique reduced Groebner basis
/// for the ideal's order, sorted by decreasing leading monomial; every
/// S-polynomial of basis pairs reduces to zero against it.
struct GBReport {
    std::vector<Poly> basis;
    std::uint64_t s_pairs_processed = 0;
    std::uint64_t reductions_to_zero = 0;
};

namespace detail {
struct GBCache;
}

/// Ideal presented by an ordered list of nonzero generators over a named
/// variable set, together with a monomial order. The reduced Groebner basis
/// is computed on demand and cached; copies share the cache.
class Ideal {
public:
    Ideal(VarSetPtr vars, std::vector<Poly> gens,
          MonomialOrder order = MonomialOrder::grevlex());

    const VarSetPtr& vars() const { return vars_; }
    const std::vector<Poly>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }

    /// Same generators under another order (fresh cache).
    Ideal with_order(MonomialOrder order) const;
    Ideal with_extra_generators(std::vector<Poly> extra) const;
    /// Generators re-expressed over a larger variable set.
    Ideal embedded(const VarSetPtr& target) const;

    /// Reduced Groebner basis (cached; thread-safe).
    const GBReport& groebner() const;

private:
    VarSetPtr vars_;
    std::vector<Poly> gens_;
    MonomialOrder order_;
    std::shared_ptr<detail::GBCache> cache_;
};

/// Process-wide S-pair budget for Buchberger runs (default 200000). The CLI
/// maps HIGGSGRASS_SPAIR_BUDGET onto this.
std::uint64_t spair_budget();
void set_spair_budget(std::uint64_t budget);

} // namespace higgsgrass
