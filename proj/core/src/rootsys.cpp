#include "loopblocks/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include <boost/rational.hpp>

namespace loopblocks {

std::ostream &operator<<(std::ostream &os, const Weight &w)
{
    os << '[';
    for (std::size_t i = 0; i < w.rank(); ++i) {
        os << (i ? "," : "") << w[i];
    }
    return os << ']';
}

std::ostream &operator<<(std::ostream &os, const FundGroupElt &x)
{
    os << '(';
    for (std::size_t i = 0; i < x.residues.size(); ++i) {
        os << (i ? "," : "") << x.residues[i];
    }
    return os << ')';
}

// ---------------------------------------------------------------------------
// labels

CartanLabel CartanLabel::parse(std::string_view text)
{
    if (text.size() < 2) {
        throw Error(ErrorKind::InvalidType, "cannot parse type label '" + std::string(text) + "'");
    }
    CartanLabel label;
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A':
        label.family = Family::A;
        break;
    case 'B':
        label.family = Family::B;
        break;
    case 'C':
        label.family = Family::C;
        break;
    case 'D':
        label.family = Family::D;
        break;
    case 'E':
        label.family = Family::E;
        break;
    case 'F':
        label.family = Family::F;
        break;
    case 'G':
        label.family = Family::G;
        break;
    default:
        throw Error(ErrorKind::InvalidType, "unknown family in '" + std::string(text) + "'");
    }
    int rank = 0;
    for (char c : text.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || rank > 1000) {
            throw Error(ErrorKind::InvalidType, "bad rank in '" + std::string(text) + "'");
        }
        rank = rank * 10 + (c - '0');
    }
    label.rank = rank;
    if (!label.is_valid()) {
        throw Error(ErrorKind::InvalidType, "no simple Lie algebra of type " + label.str());
    }
    return label;
}

std::string CartanLabel::str() const
{
    static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
    return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

bool CartanLabel::is_valid() const noexcept
{
    switch (family) {
    case Family::A:
        return rank >= 1;
    case Family::B:
    case Family::C:
        return rank >= 2;
    case Family::D:
        return rank >= 3;
    case Family::E:
        return rank >= 6 && rank <= 8;
    case Family::F:
        return rank == 4;
    case Family::G:
        return rank == 2;
    }
    return false;
}

IntMatrix cartan_matrix(const CartanLabel &label)
{
    if (!label.is_valid()) {
        throw Error(ErrorKind::InvalidType, "no simple Lie algebra of type " + label.str());
    }
    const auto n = static_cast<std::size_t>(label.rank);
    IntMatrix c(n, std::vector<std::int64_t>(n, 0));
    auto link = [&](std::size_t i, std::size_t j) {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    for (std::size_t i = 0; i < n; ++i) {
        c[i][i] = 2;
    }
    switch (label.family) {
    case Family::A:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            link(i, i + 1);
        }
        break;
    case Family::B:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            link(i, i + 1);
        }
        c[n - 1][n - 2] = -2; // alpha_n short
        break;
    case Family::C:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            link(i, i + 1);
        }
        c[n - 2][n - 1] = -2; // alpha_n long
        break;
    case Family::D:
        for (std::size_t i = 0; i + 2 < n; ++i) {
            link(i, i + 1);
        }
        link(n - 3, n - 1);
        break;
    case Family::E:
        link(0, 2);
        link(1, 3);
        for (std::size_t i = 2; i + 1 < n; ++i) {
            link(i, i + 1);
        }
        break;
    case Family::F:
        link(0, 1);
        link(1, 2);
        link(2, 3);
        c[2][1] = -2;
        break;
    case Family::G:
        link(0, 1);
        c[0][1] = -3; // alpha_1 short
        break;
    }
    return c;
}

// ---------------------------------------------------------------------------
// construction

namespace {

using Rational = boost::rational<std::int64_t>;

std::vector<std::int64_t> compute_symmetrizers(const IntMatrix &c)
{
    const std::size_t n = c.size();
    std::vector<Rational> d(n, Rational(0));
    d[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && c[i][j] != 0 && d[j].numerator() == 0) {
                d[j] = d[i] * Rational(c[i][j], c[j][i]);
                queue.push_back(j);
            }
        }
    }
    std::int64_t denom_lcm = 1;
    for (const auto &x : d) {
        denom_lcm = std::lcm(denom_lcm, x.denominator());
    }
    std::vector<std::int64_t> out(n);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (d[i] * denom_lcm).numerator();
        g = std::gcd(g, out[i]);
    }
    for (auto &x : out) {
        x /= g;
    }
    return out;
}

// Returns det and adj = det * C^{-1}.
std::pair<std::int64_t, IntMatrix> determinant_and_adjugate(const IntMatrix &c)
{
    const std::size_t n = c.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = c[i][j];
        }
        a[i][n + i] = 1;
    }
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].numerator() == 0) {
            ++piv;
        }
        if (piv == n) {
            throw Error(ErrorKind::InvalidType, "singular Cartan matrix");
        }
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        const Rational p = a[col][col];
        det *= p;
        for (auto &x : a[col]) {
            x /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i != col && a[i][col].numerator() != 0) {
                const Rational f = a[i][col];
                for (std::size_t j = 0; j < 2 * n; ++j) {
                    a[i][j] -= f * a[col][j];
                }
            }
        }
    }
    const std::int64_t d = boost::rational_cast<std::int64_t>(det);
    IntMatrix adj(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational v = a[i][n + j] * d;
            adj[i][j] = v.numerator();
        }
    }
    return {d, adj};
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m)
{
    // extended Euclid; a is a unit mod m
    std::int64_t g = m, x = 0, x1 = 1, b = mod_floor(a, m);
    while (b != 0) {
        const std::int64_t q = g / b;
        std::tie(g, b) = std::make_tuple(b, g - q * b);
        std::tie(x, x1) = std::make_tuple(x1, x - q * x1);
    }
    return mod_floor(x, m);
}

std::vector<std::size_t> neighbours_in(const IntMatrix &c, std::size_t j, std::uint64_t mask)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != j && c[j][i] != 0 && (mask >> i & 1U)) {
            out.push_back(i);
        }
    }
    return out;
}

// |orbit of omega_j under the parabolic subgroup W_J| for j in J.
std::int64_t parabolic_orbit(const RootSystem &rs, std::size_t j, std::uint64_t mask)
{
    std::unordered_set<Weight, WeightHash> seen;
    std::vector<Weight> stack{Weight::fundamental(rs.rank(), j)};
    seen.insert(stack.back());
    while (!stack.empty()) {
        Weight w = std::move(stack.back());
        stack.pop_back();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if ((mask >> i & 1U) && w[i] != 0) {
                Weight r = reflect(rs, w, i);
                if (seen.insert(r).second) {
                    stack.push_back(std::move(r));
                }
            }
        }
    }
    return static_cast<std::int64_t>(seen.size());
}

// |W_J| by the orbit-stabilizer chain: the stabilizer of omega_j in W_J is W_{J \ {j}}.
std::int64_t parabolic_order(const RootSystem &rs, std::uint64_t mask)
{
    std::int64_t order = 1;
    while (mask != 0) {
        std::size_t leaf = rs.rank();
        for (std::size_t j = rs.rank(); j-- > 0;) {
            if ((mask >> j & 1U) && neighbours_in(rs.cartan(), j, mask).size() <= 1) {
                leaf = j;
                break;
            }
        }
        order *= parabolic_orbit(rs, leaf, mask);
        mask &= ~(std::uint64_t{1} << leaf);
    }
    return order;
}

} // namespace

RootSystem build_root_system(const CartanLabel &label)
{
    RootSystem rs;
    rs.label_ = label;
    rs.cartan_ = cartan_matrix(label);
    const std::size_t n = rs.cartan_.size();
    if (n > 63) {
        throw Error(ErrorKind::InvalidType, "rank above 63 is not supported");
    }
    rs.symmetrizers_ = compute_symmetrizers(rs.cartan_);
    std::tie(rs.det_, rs.adjugate_) = determinant_and_adjugate(rs.cartan_);

    rs.form_.assign(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rs.form_[i][j] = rs.adjugate_[j][i] * rs.symmetrizers_[j];
        }
    }

    rs.simple_roots_.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Weight a(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = rs.cartan_[i][j];
        }
        rs.simple_roots_.push_back(std::move(a));
    }
    rs.rho_ = Weight(n);
    for (std::size_t i = 0; i < n; ++i) {
        rs.rho_[i] = 1;
    }

    // roots: closure of the simple roots under simple reflections
    std::map<Weight, Weight> roots;
    std::vector<Weight> stack;
    for (std::size_t j = 0; j < n; ++j) {
        roots.emplace(rs.simple_roots_[j], Weight::fundamental(n, j));
        stack.push_back(rs.simple_roots_[j]);
    }
    while (!stack.empty()) {
        const Weight v = std::move(stack.back());
        stack.pop_back();
        const Weight c = roots.at(v);
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] == 0) {
                continue;
            }
            Weight r = reflect(rs, v, i);
            if (!roots.contains(r)) {
                Weight rc = c;
                rc[i] -= v[i];
                roots.emplace(r, std::move(rc));
                stack.push_back(std::move(r));
            }
        }
    }
    std::int64_t best_height = -1;
    for (const auto &[omega, alpha] : roots) {
        if (alpha.is_dominant()) {
            rs.positive_roots_.push_back({omega, alpha});
            const std::int64_t h = std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0});
            if (h > best_height) {
                best_height = h;
                rs.theta_ = omega;
            }
        }
    }
    std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(), [](const PositiveRoot &a, const PositiveRoot &b) {
        const auto ha = std::accumulate(a.alpha.begin(), a.alpha.end(), std::int64_t{0});
        const auto hb = std::accumulate(b.alpha.begin(), b.alpha.end(), std::int64_t{0});
        return ha != hb ? ha < hb : a.omega < b.omega;
    });

    // fundamental group from the Smith form of the Cartan matrix
    const SmithForm snf = smith_normal_form(rs.cartan_);
    for (std::size_t j = 0; j < snf.diagonal.size(); ++j) {
        const std::int64_t d = snf.diagonal[j];
        if (d <= 1) {
            continue;
        }
        std::vector<std::int64_t> row(n);
        for (std::size_t i = 0; i < n; ++i) {
            row[i] = mod_floor(snf.left[j][i], d);
        }
        // rescale by a unit so that the first generating fundamental weight maps to 1
        std::int64_t t = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::gcd(row[i], d) == 1) {
                t = row[i];
                break;
            }
        }
        const std::int64_t u = inverse_mod(t, d);
        for (auto &x : row) {
            x = mod_floor(x * u, d);
        }
        Weight gen(n);
        for (std::size_t i = 0; i < n; ++i) {
            gen[i] = snf.left_inverse[i][j] * t;
        }
        rs.factors_.push_back(d);
        rs.projection_rows_.push_back(std::move(row));
        rs.coset_generators_.push_back(std::move(gen));
    }
    return rs;
}

void RootSystem::check_rank(const Weight &w) const
{
    if (w.rank() != rank()) {
        throw Error(ErrorKind::RankMismatch, "weight of rank " + std::to_string(w.rank()) + " used with "
                                                 + label_.str());
    }
}

std::int64_t RootSystem::scaled_form(const Weight &lambda, const Weight &mu) const
{
    check_rank(lambda);
    check_rank(mu);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (lambda[i] == 0) {
            continue;
        }
        std::int64_t row = 0;
        for (std::size_t j = 0; j < rank(); ++j) {
            row += form_[i][j] * mu[j];
        }
        s += lambda[i] * row;
    }
    return s;
}

Weight RootSystem::scaled_root_coords(const Weight &w) const
{
    check_rank(w);
    Weight out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < rank(); ++j) {
            s += adjugate_[i][j] * w[j];
        }
        out[i] = s;
    }
    return out;
}

// ---------------------------------------------------------------------------
// lattice predicates and P/Q

bool in_root_lattice(const RootSystem &rs, const Weight &w)
{
    const Weight c = rs.scaled_root_coords(w);
    return std::all_of(c.begin(), c.end(), [&](std::int64_t x) { return x % rs.det() == 0; });
}

bool dominance_geq(const RootSystem &rs, const Weight &lam, const Weight &mu)
{
    rs.check_rank(lam);
    const Weight c = rs.scaled_root_coords(lam - mu);
    return std::all_of(c.begin(), c.end(), [&](std::int64_t x) { return x >= 0 && x % rs.det() == 0; });
}

FundGroupElt project_mod_Q(const RootSystem &rs, const Weight &lam)
{
    rs.check_rank(lam);
    FundGroupElt x;
    x.residues.reserve(rs.factors_.size());
    for (std::size_t k = 0; k < rs.factors_.size(); ++k) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            s = mod_floor(s + rs.projection_rows_[k][i] * mod_floor(lam[i], rs.factors_[k]), rs.factors_[k]);
        }
        x.residues.push_back(s);
    }
    return x;
}

Weight lift_coset(const RootSystem &rs, const FundGroupElt &x)
{
    if (x.residues.size() != rs.factors_.size()) {
        throw Error(ErrorKind::RankMismatch, "coset with " + std::to_string(x.residues.size())
                                                 + " residues for a group with " + std::to_string(rs.factors_.size())
                                                 + " factors");
    }
    Weight w(rs.rank());
    for (std::size_t k = 0; k < rs.factors_.size(); ++k) {
        w += x.residues[k] * rs.coset_generators_[k];
    }
    return w;
}

FundGroupElt coset_zero(const RootSystem &rs)
{
    return FundGroupElt{std::vector<std::int64_t>(rs.invariant_factors().size(), 0)};
}

FundGroupElt coset_add(const RootSystem &rs, const FundGroupElt &x, const FundGroupElt &y)
{
    const auto &f = rs.invariant_factors();
    if (x.residues.size() != f.size() || y.residues.size() != f.size()) {
        throw Error(ErrorKind::RankMismatch, "coset length does not match the fundamental group");
    }
    FundGroupElt out;
    out.residues.resize(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        out.residues[k] = mod_floor(x.residues[k] + y.residues[k], f[k]);
    }
    return out;
}

FundGroupElt coset_neg(const RootSystem &rs, const FundGroupElt &x)
{
    const auto &f = rs.invariant_factors();
    FundGroupElt out = x;
    for (std::size_t k = 0; k < f.size(); ++k) {
        out.residues.at(k) = mod_floor(-x.residues.at(k), f[k]);
    }
    return out;
}

Weight minimal_dominant_representative(const RootSystem &rs, const FundGroupElt &x)
{
    const std::size_t n = rs.rank();
    // compositions of `total` into n parts, lexicographically descending from the front
    for (std::int64_t total = 0; total <= 64; ++total) {
        Weight w(n);
        auto rec = [&](auto &&self, std::size_t i, std::int64_t left) -> bool {
            if (i + 1 == n) {
                w[i] = left;
                return project_mod_Q(rs, w) == x;
            }
            for (std::int64_t v = 0; v <= left; ++v) {
                w[i] = v;
                if (self(self, i + 1, left - v)) {
                    return true;
                }
            }
            return false;
        };
        if (rec(rec, 0, total)) {
            return w;
        }
    }
    throw Error(ErrorKind::Overflow, "no small dominant representative found");
}

// ---------------------------------------------------------------------------
// Weyl group action

std::vector<std::size_t> minus_w0_permutation(const CartanLabel &label)
{
    const auto n = static_cast<std::size_t>(label.rank);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    switch (label.family) {
    case Family::A:
        std::reverse(perm.begin(), perm.end());
        break;
    case Family::D:
        if (n % 2 == 1) {
            std::swap(perm[n - 2], perm[n - 1]);
        }
        break;
    case Family::E:
        if (n == 6) {
            perm = {5, 1, 4, 3, 2, 0};
        }
        break;
    default:
        break;
    }
    return perm;
}

Weight minus_w0(const RootSystem &rs, const Weight &lam)
{
    rs.check_rank(lam);
    if (!lam.is_dominant()) {
        throw Error(ErrorKind::NonDominant, "minus_w0 needs a dominant weight");
    }
    const auto perm = minus_w0_permutation(rs.label());
    Weight out(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        out[perm[i]] = lam[i];
    }
    return out;
}

Weight reflect(const RootSystem &rs, const Weight &w, std::size_t i)
{
    Weight out = w;
    const std::int64_t k = w[i];
    if (k != 0) {
        const auto &c = rs.cartan();
        for (std::size_t r = 0; r < out.rank(); ++r) {
            out[r] -= k * c[r][i];
        }
    }
    return out;
}

Weight dominant_conjugate(const RootSystem &rs, Weight w)
{
    rs.check_rank(w);
    const auto &c = rs.cartan();
    const std::size_t n = w.rank();
    for (;;) {
        std::size_t i = 0;
        while (i < n && w[i] >= 0) {
            ++i;
        }
        if (i == n) {
            return w;
        }
        const std::int64_t k = w[i];
        for (std::size_t r = 0; r < n; ++r) {
            w[r] -= k * c[r][i];
        }
    }
}

std::int64_t weyl_group_order(const RootSystem &rs)
{
    const std::uint64_t all = rs.rank() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rs.rank()) - 1;
    return parabolic_order(rs, all);
}

std::int64_t weyl_orbit_size(const RootSystem &rs, const Weight &dominant)
{
    rs.check_rank(dominant);
    if (!dominant.is_dominant()) {
        throw Error(ErrorKind::NonDominant, "orbit size is indexed by dominant weights");
    }
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (dominant[i] == 0) {
            mask |= std::uint64_t{1} << i;
        }
    }
    return weyl_group_order(rs) / parabolic_order(rs, mask);
}

std::vector<Weight> all_roots(const RootSystem &rs)
{
    std::vector<Weight> out;
    out.reserve(2 * rs.positive_roots().size());
    for (const auto &r : rs.positive_roots()) {
        out.push_back(r.omega);
        out.push_back(-r.omega);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// characters

BigInt weyl_dim(const RootSystem &rs, const Weight &lam)
{
    rs.check_rank(lam);
    if (!lam.is_dominant()) {
        throw Error(ErrorKind::NonDominant, "weyl_dim needs a dominant weight");
    }
    const auto &d = rs.symmetrizers();
    BigInt num = 1;
    BigInt den = 1;
    for (const auto &root : rs.positive_roots()) {
        std::int64_t a = 0;
        std::int64_t b = 0;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            a += (lam[i] + 1) * root.alpha[i] * d[i];
            b += root.alpha[i] * d[i];
        }
        num *= a;
        den *= b;
    }
    return num / den;
}

std::vector<Weight> dominant_weights_below(const RootSystem &rs, const Weight &lam)
{
    rs.check_rank(lam);
    if (!lam.is_dominant()) {
        throw Error(ErrorKind::NonDominant, "dominant_weights_below needs a dominant weight");
    }
    // Every dominant mu < lam is reachable from lam through dominant weights
    // by subtracting positive roots one at a time.
    std::unordered_set<Weight, WeightHash> seen{lam};
    std::vector<Weight> stack{lam};
    std::vector<Weight> out;
    while (!stack.empty()) {
        Weight mu = std::move(stack.back());
        stack.pop_back();
        for (const auto &root : rs.positive_roots()) {
            Weight nu = mu - root.omega;
            if (nu.is_dominant() && seen.insert(nu).second) {
                stack.push_back(nu);
            }
        }
        out.push_back(std::move(mu));
    }
    // highest first
    std::vector<std::pair<std::int64_t, Weight>> keyed;
    keyed.reserve(out.size());
    for (auto &w : out) {
        const Weight c = rs.scaled_root_coords(w);
        keyed.emplace_back(-std::accumulate(c.begin(), c.end(), std::int64_t{0}), std::move(w));
    }
    std::sort(keyed.begin(), keyed.end());
    out.clear();
    for (auto &kw : keyed) {
        out.push_back(std::move(kw.second));
    }
    return out;
}

__extension__ typedef __int128 wide_int;

std::map<Weight, std::int64_t> weight_multiplicities(const RootSystem &rs, const Weight &lam)
{
    const std::vector<Weight> dominant = dominant_weights_below(rs, lam);
    const auto &d = rs.symmetrizers();
    const std::size_t n = rs.rank();

    std::unordered_map<Weight, std::int64_t, WeightHash> mult;
    mult.reserve(dominant.size() * 2);
    const Weight lr = lam + rs.rho();
    const std::int64_t top = rs.scaled_form(lr, lr);

    for (const Weight &mu : dominant) {
        if (mu == lam) {
            mult.emplace(mu, 1);
            continue;
        }
        wide_int sum = 0;
        for (const auto &root : rs.positive_roots()) {
            Weight nu = mu;
            for (;;) {
                nu += root.omega;
                const auto it = mult.find(dominant_conjugate(rs, nu));
                if (it == mult.end()) {
                    break;
                }
                std::int64_t pairing = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    pairing += nu[i] * root.alpha[i] * d[i];
                }
                sum += static_cast<wide_int>(it->second) * pairing;
            }
        }
        const Weight mr = mu + rs.rho();
        const std::int64_t gap = top - rs.scaled_form(mr, mr);
        const wide_int numer = 2 * sum * rs.det();
        if (gap <= 0 || numer % gap != 0) {
            throw Error(ErrorKind::Overflow, "Freudenthal recursion lost exactness");
        }
        const wide_int m = numer / gap;
        if (m <= 0 || m > std::numeric_limits<std::int64_t>::max()) {
            throw Error(ErrorKind::Overflow, "weight multiplicity out of range");
        }
        mult.emplace(mu, static_cast<std::int64_t>(m));
    }
    return {mult.begin(), mult.end()};
}

} // namespace loopblocks
