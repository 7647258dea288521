#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "loopblocks/drinfeld.hpp"

namespace loopblocks {

/// Root of a twisted Drinfeld polynomial, stored as the coordinate it came from.
/// At a fixed node the stored root is a^m, so its zeta power is always 0.
using TwistedRoot = Coordinate;

/// Element of P^sigma: for each folded node (0-based folded index), a multiset of roots.
class TwistedPoly {
public:
    using roots_type = std::map<TwistedRoot, std::int64_t>;
    using map_type = std::map<std::size_t, roots_type>;

    const map_type &comps() const noexcept { return comps_; }
    bool empty() const noexcept { return comps_.empty(); }

    /// Adds mult copies of root at node. mult must be nonnegative; zero is a no-op.
    void add(std::size_t node, const TwistedRoot &root, std::int64_t mult);

    friend bool operator==(const TwistedPoly &, const TwistedPoly &) = default;
    friend bool operator<(const TwistedPoly &a, const TwistedPoly &b) { return a.comps_ < b.comps_; }

private:
    map_type comps_;
};

/// Throws MalformedTwisted unless every node index, zeta power and multiplicity
/// is one that the constructors of this module can produce.
void validate_twisted(const FoldedSystem &fs, const TwistedPoly &p);

/// pi^sigma_{lam_s, a}.
TwistedPoly twisted_pi_lambda_a(const FoldedSystem &fs, const Weight &lam_s, const Coordinate &a);

TwistedPoly twisted_multiply(const TwistedPoly &p, const TwistedPoly &q);

Weight lambda_of_twisted(const FoldedSystem &fs, const TwistedPoly &p);

/// The folding map r: P -> P^sigma.
TwistedPoly fold(const FoldedSystem &fs, const DrinfeldPoly &p);

/// The preimage of p supported on the points (a, 0), one per symbol.
DrinfeldPoly canonical_preimage(const FoldedSystem &fs, const TwistedPoly &p);

/// Merges, for each symbol, every factor into the one at the smallest zeta power
/// present. Preserves fold and leaves asymmetric inputs untouched.
DrinfeldPoly asym_collapse(const FoldedSystem &fs, const DrinfeldPoly &p);

/// Every Drinfeld polynomial q with fold(q) = p, in ascending order.
std::vector<DrinfeldPoly> fiber(const FoldedSystem &fs, const TwistedPoly &p);

/// |fiber(p)| without materializing it.
std::uint64_t fiber_size(const FoldedSystem &fs, const TwistedPoly &p);

} // namespace loopblocks
