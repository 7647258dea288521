#include "loopblocks/folding.hpp"

#include <algorithm>
#include <numeric>

namespace loopblocks {

namespace {

std::vector<std::size_t> conventional_automorphism(const CartanLabel &label, int m)
{
    const auto n = static_cast<std::size_t>(label.rank);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    if (m == 2 && label.family == Family::A && n >= 2) {
        std::reverse(perm.begin(), perm.end());
        return perm;
    }
    if (m == 2 && label.family == Family::D && n >= 4) {
        std::swap(perm[n - 2], perm[n - 1]);
        return perm;
    }
    if (m == 3 && label.family == Family::D && n == 4) {
        // 1 -> 3 -> 4 -> 1, node 2 fixed
        perm = {2, 1, 3, 0};
        return perm;
    }
    if (m == 2 && label.family == Family::E && n == 6) {
        perm = {5, 1, 4, 3, 2, 0};
        return perm;
    }
    throw Error(ErrorKind::NoSuchAutomorphism,
                "no diagram automorphism of order " + std::to_string(m) + " on " + label.str());
}

CartanLabel folded_type(const CartanLabel &label, int m)
{
    const int n = label.rank;
    switch (label.family) {
    case Family::A:
        if (n % 2 == 1) {
            return {Family::C, (n + 1) / 2};
        }
        return n == 2 ? CartanLabel{Family::A, 1} : CartanLabel{Family::B, n / 2};
    case Family::D:
        return m == 3 ? CartanLabel{Family::G, 2} : CartanLabel{Family::B, n - 1};
    case Family::E:
        return {Family::F, 4};
    default:
        break;
    }
    throw Error(ErrorKind::NoSuchAutomorphism, "no folding for " + label.str());
}

int mod(int a, int m)
{
    const int r = a % m;
    return r < 0 ? r + m : r;
}

void check_folded(const FoldedSystem &fs, const Weight &w)
{
    if (w.rank() != fs.folded_rank()) {
        throw Error(ErrorKind::RankMismatch, "folded weight of length " + std::to_string(w.rank()) + ", expected "
                                                 + std::to_string(fs.folded_rank()));
    }
}

void check_eps(const FoldedSystem &fs, int eps)
{
    if (eps < 0 || eps >= fs.m()) {
        throw Error(ErrorKind::InvalidCoordinate, "eps " + std::to_string(eps) + " outside [0, m)");
    }
}

} // namespace

FoldedSystem build_folding(const CartanLabel &label, int m)
{
    if (!label.is_valid()) {
        throw Error(ErrorKind::InvalidType, "no simple Lie algebra of type " + label.str());
    }
    FoldedSystem fs;
    fs.auto_.perm = conventional_automorphism(label, m);
    fs.auto_.order = m;
    fs.amb_ = build_root_system(label);
    fs.folded_label_ = folded_type(label, m);

    const std::size_t n = fs.amb_.rank();
    fs.orbit_of_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (fs.orbit_of_[i] != n) {
            continue;
        }
        std::vector<std::size_t> orbit;
        std::size_t j = i;
        do {
            orbit.push_back(j);
            j = fs.auto_.perm[j];
        } while (j != i);
        const std::size_t idx = fs.reps_.size();
        for (auto node : orbit) {
            fs.orbit_of_[node] = idx;
        }
        fs.reps_.push_back(i);
        fs.stab_.push_back(m / static_cast<int>(orbit.size()));
        std::sort(orbit.begin(), orbit.end());
        fs.orbits_.push_back(std::move(orbit));
    }
    fs.is_a2n_ = label.family == Family::A && n % 2 == 0;
    if (fs.is_a2n_) {
        fs.middle_ = n / 2 - 1;
    }
    return fs;
}

std::size_t FoldedSystem::sigma_power(std::size_t node, int k) const
{
    std::size_t j = node;
    for (int t = mod(k, m()); t > 0; --t) {
        j = auto_.perm[j];
    }
    return j;
}

bool in_P_sigma_plus(const FoldedSystem &fs, const Weight &folded)
{
    check_folded(fs, folded);
    if (!folded.is_dominant()) {
        return false;
    }
    return !fs.is_A2n() || folded[fs.middle()] % 2 == 0;
}

Weight lambda_component(const FoldedSystem &fs, const Weight &lam, int eps)
{
    fs.ambient().check_rank(lam);
    check_eps(fs, eps);
    if (!lam.is_dominant()) {
        throw Error(ErrorKind::NonDominant, "lambda_component needs a dominant weight");
    }
    Weight out(fs.folded_rank());
    for (std::size_t k = 0; k < fs.folded_rank(); ++k) {
        if (eps != 0 && fs.is_fixed(k)) {
            continue;
        }
        const std::int64_t c = lam[fs.sigma_power(fs.representatives()[k], eps)];
        out[k] = (fs.is_A2n() && k == fs.middle()) ? 2 * c : c;
    }
    return out;
}

Weight embed(const FoldedSystem &fs, const Weight &folded, int eps)
{
    check_folded(fs, folded);
    check_eps(fs, eps);
    if (!folded.is_dominant()) {
        throw Error(ErrorKind::NonDominant, "embed needs a dominant folded weight");
    }
    if (fs.is_A2n() && folded[fs.middle()] % 2 != 0) {
        throw Error(ErrorKind::ParityViolation, "middle coordinate of an A_2n folded weight must be even");
    }
    Weight out(fs.rank());
    for (std::size_t k = 0; k < fs.folded_rank(); ++k) {
        if (folded[k] == 0) {
            continue;
        }
        if (eps != 0 && fs.is_fixed(k)) {
            throw Error(ErrorKind::FixedNodeSupport, "eps > 0 embedding with support on fixed node "
                                                         + std::to_string(fs.representatives()[k] + 1));
        }
        const std::int64_t c = (fs.is_A2n() && k == fs.middle()) ? folded[k] / 2 : folded[k];
        out[fs.sigma_power(fs.representatives()[k], eps)] = c;
    }
    return out;
}

Weight sigma_on_weight(const FoldedSystem &fs, const Weight &lam, int power)
{
    fs.ambient().check_rank(lam);
    Weight out(fs.rank());
    for (std::size_t i = 0; i < fs.rank(); ++i) {
        out[fs.sigma_power(i, power)] = lam[i];
    }
    return out;
}

FundGroupElt sigma_on_coset(const FoldedSystem &fs, const FundGroupElt &x, int power)
{
    const RootSystem &rs = fs.ambient();
    return project_mod_Q(rs, sigma_on_weight(fs, lift_coset(rs, x), power));
}

} // namespace loopblocks
