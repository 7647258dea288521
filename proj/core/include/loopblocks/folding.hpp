#pragma once

#include <cstddef>
#include <vector>

#include "loopblocks/rootsys.hpp"

namespace loopblocks {

/// A nontrivial symmetry of the Dynkin diagram, as a 0-based node permutation.
struct DiagramAutomorphism {
    std::vector<std::size_t> perm;
    int order = 2;
};

/// The folding of an ambient simply-laced type (A, D, E6) by a diagram
/// automorphism sigma of order m.
///
/// Folded weights ("weights over I0") are indexed by orbit representative in
/// ascending order. Representatives are always nodes 1..|I0| in Bourbaki
/// numbering, so folded index k is ambient node k+1.
class FoldedSystem {
public:
    const RootSystem &ambient() const noexcept { return amb_; }
    const DiagramAutomorphism &automorphism() const noexcept { return auto_; }
    int m() const noexcept { return auto_.order; }

    std::size_t folded_rank() const noexcept { return reps_.size(); }
    const std::vector<std::size_t> &representatives() const noexcept { return reps_; }
    const std::vector<std::vector<std::size_t>> &orbits() const noexcept { return orbits_; }

    /// |G_i| for each representative: 1 on free orbits, m on fixed nodes.
    const std::vector<int> &stabilizers() const noexcept { return stab_; }
    bool is_fixed(std::size_t folded_index) const { return stab_.at(folded_index) == m(); }

    /// Folded index of the orbit containing an ambient node.
    std::size_t orbit_of(std::size_t node) const { return orbit_of_.at(node); }

    const CartanLabel &folded_label() const noexcept { return folded_label_; }
    bool is_A2n() const noexcept { return is_a2n_; }
    /// Folded index of the middle orbit {n, n+1} for A_{2n}; meaningless otherwise.
    std::size_t middle() const noexcept { return middle_; }

    /// sigma^k(node) for any integer k.
    std::size_t sigma_power(std::size_t node, int k) const;

    /// Length of weights living at the ambient level.
    std::size_t rank() const noexcept { return amb_.rank(); }

private:
    friend FoldedSystem build_folding(const CartanLabel &label, int m);

    RootSystem amb_;
    DiagramAutomorphism auto_;
    std::vector<std::size_t> reps_;
    std::vector<std::vector<std::size_t>> orbits_;
    std::vector<int> stab_;
    std::vector<std::size_t> orbit_of_;
    CartanLabel folded_label_;
    bool is_a2n_ = false;
    std::size_t middle_ = 0;
};

/// Supported: (A_n, 2) for n >= 2, (D_n, 2) for n >= 4, (D4, 3), (E6, 2).
/// Anything else throws NoSuchAutomorphism.
FoldedSystem build_folding(const CartanLabel &label, int m);
inline FoldedSystem build_folding(std::string_view label, int m) { return build_folding(CartanLabel::parse(label), m); }

/// Membership in P^+_sigma: dominant, and for A_{2n} an even middle coordinate.
bool in_P_sigma_plus(const FoldedSystem &fs, const Weight &folded);

/// The component lambda(eps) of an ambient dominant weight; a weight over I0.
Weight lambda_component(const FoldedSystem &fs, const Weight &lam, int eps);

/// The eps-th embedding of P^+_sigma into P^+; left inverse of lambda_component(., eps)
/// and annihilated by lambda_component(., eps') for eps' != eps.
Weight embed(const FoldedSystem &fs, const Weight &folded, int eps);

/// Permutes coordinates: sigma(omega_i) = omega_{sigma(i)}.
Weight sigma_on_weight(const FoldedSystem &fs, const Weight &lam, int power = 1);

FundGroupElt sigma_on_coset(const FoldedSystem &fs, const FundGroupElt &x, int power = 1);

} // namespace loopblocks
