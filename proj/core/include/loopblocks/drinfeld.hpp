#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopblocks/folding.hpp"

namespace loopblocks {

/// A formal point zeta^zeta * sym of C^x.
///
/// Distinct symbols are assumed to have distinct m-th powers; nothing checks this.
/// The zeta exponent is kept reduced modulo the m of whatever folding is in use.
struct Coordinate {
    std::string sym;
    int zeta = 0;

    friend bool operator==(const Coordinate &, const Coordinate &) = default;
    friend std::strong_ordering operator<=>(const Coordinate &a, const Coordinate &b)
    {
        if (auto c = a.sym <=> b.sym; c != 0) {
            return c;
        }
        return a.zeta <=> b.zeta;
    }
};

/// zeta^k * c, reduced modulo m.
Coordinate shift(const Coordinate &c, int k, int m);

/// Throws InvalidCoordinate unless sym is nonempty and 0 <= zeta < m.
void check_coordinate(const Coordinate &c, int m);

/// Element of the monoid P in standard decomposition: distinct coordinates,
/// each carrying a nonzero dominant weight.
class DrinfeldPoly {
public:
    using map_type = std::map<Coordinate, Weight>;

    DrinfeldPoly() = default;

    const map_type &support() const noexcept { return support_; }
    bool empty() const noexcept { return support_.empty(); }
    std::size_t size() const noexcept { return support_.size(); }

    /// Multiplies in pi_{w, c}. Zero weights are ignored.
    void insert(const Coordinate &c, const Weight &w);

    friend bool operator==(const DrinfeldPoly &, const DrinfeldPoly &) = default;
    friend bool operator<(const DrinfeldPoly &a, const DrinfeldPoly &b) { return a.support_ < b.support_; }

private:
    map_type support_;
};

DrinfeldPoly poly_from_pairs(const std::vector<std::pair<Weight, Coordinate>> &pairs);

DrinfeldPoly multiply(const DrinfeldPoly &p, const DrinfeldPoly &q);

/// lambda_pi: the sum of all weights. Needs the root system only for the rank of the empty poly.
Weight lambda_of(const RootSystem &rs, const DrinfeldPoly &p);

DrinfeldPoly dual(const RootSystem &rs, const DrinfeldPoly &p);

/// True iff no two coordinates share a symbol.
bool is_asym(const FoldedSystem &fs, const DrinfeldPoly &p);

/// Shifts every coordinate by zeta^power.
DrinfeldPoly sigma_on_poly(const FoldedSystem &fs, const DrinfeldPoly &p, int power = 1);

/// The I-tuple of polynomials as root multisets: entry i maps each coordinate
/// to the multiplicity of its inverse as a root of pi_i.
std::vector<std::map<Coordinate, std::int64_t>> as_tuple(const RootSystem &rs, const DrinfeldPoly &p);

} // namespace loopblocks
