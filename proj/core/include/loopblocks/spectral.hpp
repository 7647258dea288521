#pragma once

#include <map>
#include <optional>
#include <utility>

#include "loopblocks/twisted.hpp"

namespace loopblocks {

/// A finitely supported function C^x -> P/Q. Zero values are never stored.
class SpectralCharacter {
public:
    using map_type = std::map<Coordinate, FundGroupElt>;

    const map_type &support() const noexcept { return support_; }
    bool empty() const noexcept { return support_.empty(); }

    /// Adds x at c, dropping the entry if the sum is zero.
    void add(const RootSystem &rs, const Coordinate &c, const FundGroupElt &x);

    /// Overwrites the value at c; a zero x removes the entry.
    void assign(const Coordinate &c, const FundGroupElt &x);

    friend bool operator==(const SpectralCharacter &, const SpectralCharacter &) = default;
    friend bool operator<(const SpectralCharacter &a, const SpectralCharacter &b) { return a.support_ < b.support_; }

private:
    map_type support_;
};

SpectralCharacter char_of(const RootSystem &rs, const DrinfeldPoly &p);

SpectralCharacter add(const RootSystem &rs, const SpectralCharacter &x, const SpectralCharacter &y);

/// x conjugated by the k-th power of sigma: value sigma^k(x(zeta^k c)) at c.
SpectralCharacter sigma_conjugate(const FoldedSystem &fs, const SpectralCharacter &x, int k);

/// Sum of the m conjugates of x; the canonical representative of its ~sigma class.
SpectralCharacter symmetrize(const FoldedSystem &fs, const SpectralCharacter &x);

bool is_sigma_invariant(const FoldedSystem &fs, const SpectralCharacter &x);

bool equiv_sigma(const FoldedSystem &fs, const SpectralCharacter &x, const SpectralCharacter &y);

/// Polynomials pi1, pi2 with char_of(pi1) = x, char_of(pi2) = y and fold(pi1) = fold(pi2).
struct SigmaWitness {
    DrinfeldPoly first;
    DrinfeldPoly second;
};

/// Decides x ~sigma y from the definition by searching for a witness pair.
/// Returns nullopt exactly when none exists.
std::optional<SigmaWitness> equiv_sigma_witness(const FoldedSystem &fs, const SpectralCharacter &x,
                                                const SpectralCharacter &y);

/// A block of the twisted category, named by its sigma-invariant character.
struct BlockLabel {
    CartanLabel folded;
    SpectralCharacter canon;

    friend bool operator==(const BlockLabel &, const BlockLabel &) = default;
};

BlockLabel block_label(const FoldedSystem &fs, const TwistedPoly &p);

bool same_block(const FoldedSystem &fs, const TwistedPoly &p, const TwistedPoly &q);

} // namespace loopblocks
