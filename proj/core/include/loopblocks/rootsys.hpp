#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "loopblocks/weight.hpp"

namespace loopblocks {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

enum class Family { A, B, C, D, E, F, G };

/// A simple Lie type such as A3, D4 or E6. Nodes are numbered as in Bourbaki.
struct CartanLabel {
    Family family = Family::A;
    int rank = 1;

    /// Parses "A3", "d4", "E6". Throws InvalidType.
    static CartanLabel parse(std::string_view text);

    std::string str() const;
    bool is_valid() const noexcept;

    friend bool operator==(const CartanLabel &, const CartanLabel &) = default;
};

/// Result of a Smith normal form computation U * A * V = diag(factors).
/// Only U and its inverse are kept; V is not needed for coset arithmetic.
struct SmithForm {
    std::vector<std::int64_t> diagonal;
    IntMatrix left;         // U, unimodular
    IntMatrix left_inverse; // U^{-1}
};

SmithForm smith_normal_form(const IntMatrix &a);

struct PositiveRoot {
    Weight omega; // omega-coordinates
    Weight alpha; // simple-root coordinates, all nonnegative
};

/// Immutable root datum of a simple Lie algebra, built once by
/// build_root_system() and shared by value afterwards.
class RootSystem {
public:
    const CartanLabel &label() const noexcept { return label_; }
    std::size_t rank() const noexcept { return cartan_.size(); }

    /// cartan()[i][j] = alpha_j(h_i); column j is alpha_j in omega-coordinates.
    const IntMatrix &cartan() const noexcept { return cartan_; }
    const std::vector<std::int64_t> &symmetrizers() const noexcept { return symmetrizers_; }
    std::int64_t det() const noexcept { return det_; }
    const IntMatrix &adjugate() const noexcept { return adjugate_; }

    /// Nontrivial invariant factors of coker(C); their product is |det C|.
    const std::vector<std::int64_t> &invariant_factors() const noexcept { return factors_; }

    const Weight &rho() const noexcept { return rho_; }
    const Weight &theta() const noexcept { return theta_; }
    const Weight &simple_root(std::size_t i) const { return simple_roots_.at(i); }
    const std::vector<PositiveRoot> &positive_roots() const noexcept { return positive_roots_; }

    /// det(C) * (lambda, mu) for the invariant form with short roots of squared length 2.
    std::int64_t scaled_form(const Weight &lambda, const Weight &mu) const;

    /// Simple-root coordinates of w scaled by det(C): adj(C) * w.
    Weight scaled_root_coords(const Weight &w) const;

    void check_rank(const Weight &w) const;

private:
    friend RootSystem build_root_system(const CartanLabel &label);

    CartanLabel label_;
    IntMatrix cartan_;
    std::vector<std::int64_t> symmetrizers_;
    std::int64_t det_ = 1;
    IntMatrix adjugate_;
    IntMatrix form_; // det * (omega_i, omega_j)
    std::vector<std::int64_t> factors_;
    IntMatrix projection_rows_;             // rows of U for the nontrivial factors, unit-normalized
    std::vector<Weight> coset_generators_;  // lift of each unit residue vector
    Weight rho_;
    Weight theta_;
    std::vector<Weight> simple_roots_;
    std::vector<PositiveRoot> positive_roots_;

    friend FundGroupElt project_mod_Q(const RootSystem &rs, const Weight &lam);
    friend Weight lift_coset(const RootSystem &rs, const FundGroupElt &x);
};

IntMatrix cartan_matrix(const CartanLabel &label);

/// Throws InvalidType for labels outside the classification.
RootSystem build_root_system(const CartanLabel &label);
inline RootSystem build_root_system(std::string_view label) { return build_root_system(CartanLabel::parse(label)); }

bool in_root_lattice(const RootSystem &rs, const Weight &w);

/// lam >= mu in the dominance order: lam - mu is a nonnegative integer combination of simple roots.
bool dominance_geq(const RootSystem &rs, const Weight &lam, const Weight &mu);

FundGroupElt project_mod_Q(const RootSystem &rs, const Weight &lam);

/// Some weight whose projection is x.
Weight lift_coset(const RootSystem &rs, const FundGroupElt &x);

FundGroupElt coset_add(const RootSystem &rs, const FundGroupElt &x, const FundGroupElt &y);
FundGroupElt coset_neg(const RootSystem &rs, const FundGroupElt &x);
FundGroupElt coset_zero(const RootSystem &rs);

/// The dominant weight of smallest coordinate sum (ties broken lexicographically) in the coset x.
Weight minimal_dominant_representative(const RootSystem &rs, const FundGroupElt &x);

/// Node permutation i -> j with -w0(omega_i) = omega_j.
std::vector<std::size_t> minus_w0_permutation(const CartanLabel &label);

Weight minus_w0(const RootSystem &rs, const Weight &lam);

/// Simple reflection s_i in omega-coordinates.
Weight reflect(const RootSystem &rs, const Weight &w, std::size_t i);

/// The unique dominant weight in the Weyl orbit of w.
Weight dominant_conjugate(const RootSystem &rs, Weight w);

BigInt weyl_dim(const RootSystem &rs, const Weight &lam);

/// Dominant weights of V(lam) with their multiplicities (Freudenthal).
std::map<Weight, std::int64_t> weight_multiplicities(const RootSystem &rs, const Weight &lam);

/// Dominant weights mu with mu <= lam.
std::vector<Weight> dominant_weights_below(const RootSystem &rs, const Weight &lam);

/// Size of the Weyl orbit of a dominant weight.
std::int64_t weyl_orbit_size(const RootSystem &rs, const Weight &dominant);

std::int64_t weyl_group_order(const RootSystem &rs);

/// Every root in omega-coordinates, sorted.
std::vector<Weight> all_roots(const RootSystem &rs);

} // namespace loopblocks
