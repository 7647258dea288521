#include "loopblocks/spectral.hpp"

#include <deque>
#include <set>
#include <string>
#include <tuple>

namespace loopblocks {

namespace {

using State = std::vector<FundGroupElt>; // value of a character at (sym, z) for each z

struct Move {
    std::size_t z;
    std::size_t node;
};

State restrict_to(const RootSystem &rs, const SpectralCharacter &x, const std::string &sym, int m)
{
    State s(static_cast<std::size_t>(m), coset_zero(rs));
    for (const auto &[c, v] : x.support()) {
        if (c.sym == sym) {
            s.at(static_cast<std::size_t>(c.zeta)) = v;
        }
    }
    return s;
}

std::int64_t coset_order(const RootSystem &rs, const FundGroupElt &x)
{
    std::int64_t k = 1;
    for (FundGroupElt acc = x; !acc.is_zero(); acc = coset_add(rs, acc, x)) {
        ++k;
    }
    return k;
}

// Moving one copy of omega_j at zeta^z to zeta^{z+1} keeps fold unchanged
// exactly when it becomes omega_{sigma^{-1}(j)} there.
std::vector<Move> find_path(const FoldedSystem &fs, const State &from, const State &to)
{
    const RootSystem &rs = fs.ambient();
    const auto m = static_cast<std::size_t>(fs.m());
    std::vector<FundGroupElt> omega_bar;
    for (std::size_t j = 0; j < fs.rank(); ++j) {
        omega_bar.push_back(project_mod_Q(rs, Weight::fundamental(fs.rank(), j)));
    }
    std::map<State, std::pair<State, Move>> parent;
    std::set<State> seen{from};
    std::deque<State> queue{from};
    while (!queue.empty()) {
        State cur = std::move(queue.front());
        queue.pop_front();
        if (cur == to) {
            std::vector<Move> path;
            while (cur != from) {
                const auto &pm = parent.at(cur);
                path.push_back(pm.second);
                cur = pm.first;
            }
            return {path.rbegin(), path.rend()};
        }
        for (std::size_t z = 0; z < m; ++z) {
            for (std::size_t j = 0; j < fs.rank(); ++j) {
                State next = cur;
                next[z] = coset_add(rs, next[z], coset_neg(rs, omega_bar[j]));
                const std::size_t z1 = (z + 1) % m;
                next[z1] = coset_add(rs, next[z1], omega_bar[fs.sigma_power(j, -1)]);
                if (seen.insert(next).second) {
                    parent.emplace(next, std::make_pair(cur, Move{z, j}));
                    queue.push_back(std::move(next));
                }
            }
        }
    }
    return {Move{m, 0}}; // sentinel: unreachable
}

} // namespace

void SpectralCharacter::add(const RootSystem &rs, const Coordinate &c, const FundGroupElt &x)
{
    auto it = support_.find(c);
    if (it == support_.end()) {
        if (!x.is_zero()) {
            support_.emplace(c, x);
        }
        return;
    }
    it->second = coset_add(rs, it->second, x);
    if (it->second.is_zero()) {
        support_.erase(it);
    }
}

void SpectralCharacter::assign(const Coordinate &c, const FundGroupElt &x)
{
    if (x.is_zero()) {
        support_.erase(c);
    } else {
        support_[c] = x;
    }
}

SpectralCharacter char_of(const RootSystem &rs, const DrinfeldPoly &p)
{
    SpectralCharacter out;
    for (const auto &[c, w] : p.support()) {
        out.add(rs, c, project_mod_Q(rs, w));
    }
    return out;
}

SpectralCharacter add(const RootSystem &rs, const SpectralCharacter &x, const SpectralCharacter &y)
{
    SpectralCharacter out = x;
    for (const auto &[c, v] : y.support()) {
        out.add(rs, c, v);
    }
    return out;
}

SpectralCharacter sigma_conjugate(const FoldedSystem &fs, const SpectralCharacter &x, int k)
{
    SpectralCharacter out;
    for (const auto &[c, v] : x.support()) {
        check_coordinate(c, fs.m());
        out.add(fs.ambient(), shift(c, -k, fs.m()), sigma_on_coset(fs, v, k));
    }
    return out;
}

SpectralCharacter symmetrize(const FoldedSystem &fs, const SpectralCharacter &x)
{
    SpectralCharacter out;
    for (int k = 0; k < fs.m(); ++k) {
        out = add(fs.ambient(), out, sigma_conjugate(fs, x, k));
    }
    return out;
}

bool is_sigma_invariant(const FoldedSystem &fs, const SpectralCharacter &x)
{
    return sigma_conjugate(fs, x, 1) == x;
}

bool equiv_sigma(const FoldedSystem &fs, const SpectralCharacter &x, const SpectralCharacter &y)
{
    return symmetrize(fs, x) == symmetrize(fs, y);
}

std::optional<SigmaWitness> equiv_sigma_witness(const FoldedSystem &fs, const SpectralCharacter &x,
                                                const SpectralCharacter &y)
{
    const RootSystem &rs = fs.ambient();
    const int m = fs.m();
    std::set<std::string> symbols;
    for (const auto *ch : {&x, &y}) {
        for (const auto &kv : ch->support()) {
            check_coordinate(kv.first, m);
            symbols.insert(kv.first.sym);
        }
    }
    SigmaWitness w;
    for (const auto &sym : symbols) {
        const State from = restrict_to(rs, x, sym, m);
        const State to = restrict_to(rs, y, sym, m);
        const std::vector<Move> path = find_path(fs, from, to);
        if (!path.empty() && path.front().z == static_cast<std::size_t>(m)) {
            return std::nullopt;
        }
        std::vector<Weight> first(static_cast<std::size_t>(m), Weight(fs.rank()));
        for (std::size_t z = 0; z < first.size(); ++z) {
            if (!from[z].is_zero()) {
                first[z] = minimal_dominant_representative(rs, from[z]);
            }
        }
        for (const Move &mv : path) {
            const Weight om = Weight::fundamental(fs.rank(), mv.node);
            first[mv.z] += coset_order(rs, project_mod_Q(rs, om)) * om;
        }
        std::vector<Weight> second = first;
        for (const Move &mv : path) {
            second[mv.z][mv.node] -= 1;
            second[(mv.z + 1) % second.size()][fs.sigma_power(mv.node, -1)] += 1;
        }
        for (std::size_t z = 0; z < first.size(); ++z) {
            const Coordinate c{sym, static_cast<int>(z)};
            w.first.insert(c, first[z]);
            w.second.insert(c, second[z]);
        }
    }
    return w;
}

BlockLabel block_label(const FoldedSystem &fs, const TwistedPoly &p)
{
    return {fs.folded_label(), symmetrize(fs, char_of(fs.ambient(), canonical_preimage(fs, p)))};
}

bool same_block(const FoldedSystem &fs, const TwistedPoly &p, const TwistedPoly &q)
{
    return block_label(fs, p) == block_label(fs, q);
}

} // namespace loopblocks
