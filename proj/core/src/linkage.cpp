#include "loopblocks/linkage.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace loopblocks {

namespace {

void require_dominant(const RootSystem &rs, const Weight &w, const char *what)
{
    rs.check_rank(w);
    if (!w.is_dominant()) {
        throw Error(ErrorKind::NonDominant, std::string(what) + " must be dominant");
    }
}

// Reflects w into the dominant chamber. Returns the number of reflections,
// or nullopt when w lies on a wall.
std::optional<std::size_t> to_dominant(const RootSystem &rs, Weight &w)
{
    std::size_t length = 0;
    for (;;) {
        std::size_t i = 0;
        while (i < w.rank() && w[i] > 0) {
            ++i;
        }
        if (i == w.rank()) {
            return length;
        }
        if (w[i] == 0) {
            return std::nullopt;
        }
        w = reflect(rs, w, i);
        ++length;
    }
}

} // namespace

std::map<Weight, std::int64_t> adjoint_tensor_decompose(const RootSystem &rs, const Weight &mu)
{
    require_dominant(rs, mu, "mu");
    std::map<Weight, std::int64_t> acc;
    const Weight base = mu + rs.rho();
    auto accumulate = [&](const Weight &w, std::int64_t k) {
        Weight v = base + w;
        const auto len = to_dominant(rs, v);
        if (!len) {
            return;
        }
        acc[v - rs.rho()] += (*len % 2 == 0) ? k : -k;
    };
    for (const Weight &root : all_roots(rs)) {
        accumulate(root, 1);
    }
    accumulate(Weight(rs.rank()), static_cast<std::int64_t>(rs.rank()));

    std::map<Weight, std::int64_t> out;
    for (const auto &[w, k] : acc) {
        if (k < 0) {
            throw Error(ErrorKind::Overflow, "negative multiplicity in Racah-Speiser sum");
        }
        if (k > 0) {
            out.emplace(w, k);
        }
    }
    return out;
}

bool hom_nonzero(const RootSystem &rs, const Weight &mu, const Weight &lam)
{
    require_dominant(rs, lam, "lam");
    return adjoint_tensor_decompose(rs, mu).contains(lam);
}

std::int64_t default_chain_bound(const RootSystem &rs, const Weight &lam, const Weight &mu)
{
    const Weight c = rs.scaled_root_coords(lam - mu);
    std::int64_t height = 0;
    for (auto x : c) {
        height += x < 0 ? -x : x;
    }
    return 2 + (height + rs.det() - 1) / rs.det();
}

ChainSearch linkage_chain(const RootSystem &rs, const Weight &lam, const Weight &mu, std::int64_t bound)
{
    require_dominant(rs, lam, "lam");
    require_dominant(rs, mu, "mu");
    ChainSearch result;
    if (!in_root_lattice(rs, lam - mu)) {
        result.status = ChainStatus::NotInRootLattice;
        return result;
    }
    result.bound = bound < 0 ? default_chain_bound(rs, lam, mu) : bound;
    Weight box(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        box[i] = std::max(lam[i], mu[i]) + result.bound;
    }
    auto inside = [&](const Weight &w) {
        for (std::size_t i = 0; i < w.rank(); ++i) {
            if (w[i] > box[i]) {
                return false;
            }
        }
        return true;
    };

    // g is self-dual, so both Hom orientations give the same neighbour set.
    std::map<Weight, Weight> parent;
    std::set<Weight> seen{mu};
    std::deque<Weight> queue{mu};
    bool found = mu == lam;
    while (!queue.empty() && !found) {
        const Weight cur = queue.front();
        queue.pop_front();
        for (const auto &kv : adjoint_tensor_decompose(rs, cur)) {
            const Weight &next = kv.first;
            if (!inside(next) || !seen.insert(next).second) {
                continue;
            }
            parent.emplace(next, cur);
            if (next == lam) {
                found = true;
                break;
            }
            queue.push_back(next);
        }
    }
    if (!found) {
        result.status = ChainStatus::NotFoundWithinBound;
        return result;
    }
    Chain chain;
    for (Weight w = lam;; w = parent.at(w)) {
        chain.steps.push_back(w);
        if (w == mu) {
            break;
        }
    }
    std::reverse(chain.steps.begin(), chain.steps.end());
    for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i) {
        chain.directions.push_back(hom_nonzero(rs, chain.steps[i], chain.steps[i + 1]) ? Direction::Up
                                                                                        : Direction::Down);
    }
    result.status = ChainStatus::Found;
    result.chain = std::move(chain);
    return result;
}

bool verify_chain(const RootSystem &rs, const Chain &c)
{
    if (c.steps.empty() || c.directions.size() + 1 != c.steps.size()) {
        return false;
    }
    for (const auto &w : c.steps) {
        if (w.rank() != rs.rank() || !w.is_dominant()) {
            return false;
        }
    }
    for (std::size_t i = 0; i < c.directions.size(); ++i) {
        const Weight &a = c.steps[i];
        const Weight &b = c.steps[i + 1];
        const bool ok = c.directions[i] == Direction::Up ? hom_nonzero(rs, a, b) : hom_nonzero(rs, b, a);
        if (!ok) {
            return false;
        }
    }
    return in_root_lattice(rs, c.steps.back() - c.steps.front());
}

} // namespace loopblocks
