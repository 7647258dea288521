#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "loopblocks/rootsys.hpp"

namespace loopblocks {

/// Orientation of one chain link nu -> nu'.
/// Up: Hom(g (x) V(nu), V(nu')) != 0. Down: Hom(g (x) V(nu'), V(nu)) != 0.
enum class Direction { Up, Down };

struct Chain {
    std::vector<Weight> steps;
    std::vector<Direction> directions; // one per link

    std::size_t length() const noexcept { return directions.size(); }
    friend bool operator==(const Chain &, const Chain &) = default;
};

/// Multiplicities of the irreducible summands of g (x) V(mu).
std::map<Weight, std::int64_t> adjoint_tensor_decompose(const RootSystem &rs, const Weight &mu);

/// Whether V(lam) is a summand of g (x) V(mu).
bool hom_nonzero(const RootSystem &rs, const Weight &mu, const Weight &lam);

enum class ChainStatus { Found, NotInRootLattice, NotFoundWithinBound };

struct ChainSearch {
    ChainStatus status = ChainStatus::NotFoundWithinBound;
    std::optional<Chain> chain;
    std::int64_t bound = 0; // slack actually used
};

/// Default slack: 2 plus the height of lam - mu in the root basis.
std::int64_t default_chain_bound(const RootSystem &rs, const Weight &lam, const Weight &mu);

/// Shortest chain from mu to lam through dominant weights bounded coordinatewise
/// by max(lam, mu) + bound. A negative bound selects default_chain_bound.
ChainSearch linkage_chain(const RootSystem &rs, const Weight &lam, const Weight &mu, std::int64_t bound = -1);

bool verify_chain(const RootSystem &rs, const Chain &c);

} // namespace loopblocks
