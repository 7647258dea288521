#include "loopblocks/twisted.hpp"

#include <set>
#include <string>

namespace loopblocks {

namespace {

// mult units to be spread over m candidate positions (zeta power z, ambient node).
struct Slot {
    std::int64_t mult;
    std::vector<std::size_t> node_at; // indexed by z
};

// Per symbol, the slots of p restricted to that symbol.
std::map<std::string, std::vector<Slot>> slots_by_symbol(const FoldedSystem &fs, const TwistedPoly &p)
{
    const int m = fs.m();
    std::map<std::string, std::vector<Slot>> out;
    for (const auto &[k, roots] : p.comps()) {
        const std::size_t rep = fs.representatives()[k];
        for (const auto &[root, mult] : roots) {
            Slot s{mult, std::vector<std::size_t>(static_cast<std::size_t>(m))};
            for (int z = 0; z < m; ++z) {
                s.node_at[static_cast<std::size_t>(z)] = fs.is_fixed(k) ? rep : fs.sigma_power(rep, root.zeta - z);
            }
            out[root.sym].push_back(std::move(s));
        }
    }
    return out;
}

// Calls f with every composition of total into parts nonnegative pieces.
template <class F>
void for_each_composition(std::int64_t total, std::size_t parts, std::vector<std::int64_t> &buf, std::size_t at, F &&f)
{
    if (at + 1 == parts) {
        buf[at] = total;
        f(buf);
        return;
    }
    for (std::int64_t x = total; x >= 0; --x) {
        buf[at] = x;
        for_each_composition(total - x, parts, buf, at + 1, f);
    }
}

void enumerate_symbol(const FoldedSystem &fs, const std::string &sym, const std::vector<Slot> &slots, std::size_t at,
                      std::vector<Weight> &mu, std::vector<DrinfeldPoly> &out)
{
    const auto m = static_cast<std::size_t>(fs.m());
    if (at == slots.size()) {
        DrinfeldPoly q;
        for (std::size_t z = 0; z < m; ++z) {
            q.insert({sym, static_cast<int>(z)}, mu[z]);
        }
        out.push_back(std::move(q));
        return;
    }
    const Slot &s = slots[at];
    std::vector<std::int64_t> buf(m);
    for_each_composition(s.mult, m, buf, 0, [&](const std::vector<std::int64_t> &parts) {
        for (std::size_t z = 0; z < m; ++z) {
            mu[z][s.node_at[z]] += parts[z];
        }
        enumerate_symbol(fs, sym, slots, at + 1, mu, out);
        for (std::size_t z = 0; z < m; ++z) {
            mu[z][s.node_at[z]] -= parts[z];
        }
    });
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace

void TwistedPoly::add(std::size_t node, const TwistedRoot &root, std::int64_t mult)
{
    if (mult < 0) {
        throw Error(ErrorKind::MalformedTwisted, "negative root multiplicity");
    }
    if (mult == 0) {
        return;
    }
    comps_[node][root] += mult;
}

void validate_twisted(const FoldedSystem &fs, const TwistedPoly &p)
{
    for (const auto &[k, roots] : p.comps()) {
        if (k >= fs.folded_rank()) {
            throw Error(ErrorKind::MalformedTwisted, "node " + std::to_string(k + 1) + " is not a folded node");
        }
        if (roots.empty()) {
            throw Error(ErrorKind::MalformedTwisted, "node " + std::to_string(k + 1) + " has an empty root list");
        }
        for (const auto &[root, mult] : roots) {
            if (root.sym.empty() || root.zeta < 0 || root.zeta >= fs.m()) {
                throw Error(ErrorKind::MalformedTwisted, "root '" + root.sym + "' has zeta power "
                                                             + std::to_string(root.zeta) + " outside [0, m)");
            }
            if (fs.is_fixed(k) && root.zeta != 0) {
                throw Error(ErrorKind::MalformedTwisted,
                            "fixed node " + std::to_string(k + 1) + " carries a root with nonzero zeta power");
            }
            if (mult <= 0) {
                throw Error(ErrorKind::MalformedTwisted, "nonpositive root multiplicity");
            }
        }
    }
}

TwistedPoly twisted_pi_lambda_a(const FoldedSystem &fs, const Weight &lam_s, const Coordinate &a)
{
    if (lam_s.rank() != fs.folded_rank()) {
        throw Error(ErrorKind::RankMismatch, "folded weight has the wrong length");
    }
    if (!lam_s.is_dominant()) {
        throw Error(ErrorKind::NonDominant, "twisted_pi_lambda_a needs a dominant folded weight");
    }
    if (!in_P_sigma_plus(fs, lam_s)) {
        throw Error(ErrorKind::ParityViolation, "middle coordinate of an A_2n folded weight must be even");
    }
    check_coordinate(a, fs.m());
    TwistedPoly out;
    for (std::size_t k = 0; k < fs.folded_rank(); ++k) {
        const std::int64_t mult = (fs.is_A2n() && k == fs.middle()) ? lam_s[k] / 2 : lam_s[k];
        out.add(k, fs.is_fixed(k) ? Coordinate{a.sym, 0} : a, mult);
    }
    return out;
}

TwistedPoly twisted_multiply(const TwistedPoly &p, const TwistedPoly &q)
{
    TwistedPoly out = p;
    for (const auto &[k, roots] : q.comps()) {
        for (const auto &[root, mult] : roots) {
            out.add(k, root, mult);
        }
    }
    return out;
}

Weight lambda_of_twisted(const FoldedSystem &fs, const TwistedPoly &p)
{
    Weight out(fs.folded_rank());
    for (const auto &[k, roots] : p.comps()) {
        if (k >= fs.folded_rank()) {
            throw Error(ErrorKind::MalformedTwisted, "node " + std::to_string(k + 1) + " is not a folded node");
        }
        for (const auto &kv : roots) {
            out[k] += kv.second;
        }
        if (fs.is_A2n() && k == fs.middle()) {
            out[k] *= 2;
        }
    }
    return out;
}

TwistedPoly fold(const FoldedSystem &fs, const DrinfeldPoly &p)
{
    TwistedPoly out;
    for (const auto &[c, lam] : p.support()) {
        check_coordinate(c, fs.m());
        for (int eps = 0; eps < fs.m(); ++eps) {
            const Weight part = lambda_component(fs, lam, eps);
            if (!part.is_zero()) {
                out = twisted_multiply(out, twisted_pi_lambda_a(fs, part, shift(c, eps, fs.m())));
            }
        }
    }
    return out;
}

DrinfeldPoly canonical_preimage(const FoldedSystem &fs, const TwistedPoly &p)
{
    validate_twisted(fs, p);
    std::map<std::string, Weight> base;
    for (const auto &[sym, slots] : slots_by_symbol(fs, p)) {
        Weight w(fs.rank());
        for (const Slot &s : slots) {
            w[s.node_at[0]] += s.mult;
        }
        base.emplace(sym, std::move(w));
    }
    DrinfeldPoly out;
    for (const auto &[sym, w] : base) {
        out.insert({sym, 0}, w);
    }
    return out;
}

DrinfeldPoly asym_collapse(const FoldedSystem &fs, const DrinfeldPoly &p)
{
    std::map<std::string, std::pair<int, Weight>> merged;
    for (const auto &[c, lam] : p.support()) {
        check_coordinate(c, fs.m());
        // support is sorted by (sym, zeta), so the first hit has the smallest zeta
        auto [it, fresh] = merged.try_emplace(c.sym, c.zeta, Weight(fs.rank()));
        it->second.second += sigma_on_weight(fs, lam, c.zeta - it->second.first);
    }
    DrinfeldPoly out;
    for (const auto &[sym, zw] : merged) {
        out.insert({sym, zw.first}, zw.second);
    }
    return out;
}

std::vector<DrinfeldPoly> fiber(const FoldedSystem &fs, const TwistedPoly &p)
{
    validate_twisted(fs, p);
    std::vector<DrinfeldPoly> acc{DrinfeldPoly{}};
    for (const auto &[sym, slots] : slots_by_symbol(fs, p)) {
        std::vector<Weight> mu(static_cast<std::size_t>(fs.m()), Weight(fs.rank()));
        std::vector<DrinfeldPoly> local;
        enumerate_symbol(fs, sym, slots, 0, mu, local);
        std::vector<DrinfeldPoly> next;
        next.reserve(acc.size() * local.size());
        for (const auto &a : acc) {
            for (const auto &b : local) {
                next.push_back(multiply(a, b));
            }
        }
        acc = std::move(next);
    }
    std::set<DrinfeldPoly> unique(acc.begin(), acc.end());
    return {unique.begin(), unique.end()};
}

std::uint64_t fiber_size(const FoldedSystem &fs, const TwistedPoly &p)
{
    validate_twisted(fs, p);
    const auto m = static_cast<std::uint64_t>(fs.m());
    std::uint64_t total = 1;
    for (const auto &kv : slots_by_symbol(fs, p)) {
        for (const Slot &s : kv.second) {
            total *= binomial(static_cast<std::uint64_t>(s.mult) + m - 1, m - 1);
        }
    }
    return total;
}

} // namespace loopblocks
