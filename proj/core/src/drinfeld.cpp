#include "loopblocks/drinfeld.hpp"

#include <set>

namespace loopblocks {

Coordinate shift(const Coordinate &c, int k, int m)
{
    int z = (c.zeta + k) % m;
    if (z < 0) {
        z += m;
    }
    return {c.sym, z};
}

void check_coordinate(const Coordinate &c, int m)
{
    if (c.sym.empty()) {
        throw Error(ErrorKind::InvalidCoordinate, "empty coordinate symbol");
    }
    if (c.zeta < 0 || c.zeta >= m) {
        throw Error(ErrorKind::InvalidCoordinate,
                    "zeta power " + std::to_string(c.zeta) + " of '" + c.sym + "' outside [0, " + std::to_string(m) + ")");
    }
}

void DrinfeldPoly::insert(const Coordinate &c, const Weight &w)
{
    if (!w.is_dominant()) {
        throw Error(ErrorKind::NonDominant, "Drinfeld polynomial weight at '" + c.sym + "' is not dominant");
    }
    if (w.is_zero()) {
        return;
    }
    auto [it, fresh] = support_.try_emplace(c, w);
    if (!fresh) {
        it->second += w;
    }
}

DrinfeldPoly poly_from_pairs(const std::vector<std::pair<Weight, Coordinate>> &pairs)
{
    DrinfeldPoly p;
    for (const auto &[w, c] : pairs) {
        p.insert(c, w);
    }
    return p;
}

DrinfeldPoly multiply(const DrinfeldPoly &p, const DrinfeldPoly &q)
{
    DrinfeldPoly out = p;
    for (const auto &[c, w] : q.support()) {
        out.insert(c, w);
    }
    return out;
}

Weight lambda_of(const RootSystem &rs, const DrinfeldPoly &p)
{
    Weight out(rs.rank());
    for (const auto &kv : p.support()) {
        out += kv.second;
    }
    return out;
}

DrinfeldPoly dual(const RootSystem &rs, const DrinfeldPoly &p)
{
    DrinfeldPoly out;
    for (const auto &[c, w] : p.support()) {
        out.insert(c, minus_w0(rs, w));
    }
    return out;
}

bool is_asym(const FoldedSystem &, const DrinfeldPoly &p)
{
    std::set<std::string> seen;
    for (const auto &kv : p.support()) {
        if (!seen.insert(kv.first.sym).second) {
            return false;
        }
    }
    return true;
}

DrinfeldPoly sigma_on_poly(const FoldedSystem &fs, const DrinfeldPoly &p, int power)
{
    DrinfeldPoly out;
    for (const auto &[c, w] : p.support()) {
        out.insert(shift(c, power, fs.m()), w);
    }
    return out;
}

std::vector<std::map<Coordinate, std::int64_t>> as_tuple(const RootSystem &rs, const DrinfeldPoly &p)
{
    std::vector<std::map<Coordinate, std::int64_t>> out(rs.rank());
    for (const auto &[c, w] : p.support()) {
        rs.check_rank(w);
        for (std::size_t i = 0; i < w.rank(); ++i) {
            if (w[i] != 0) {
                out[i][c] = w[i];
            }
        }
    }
    return out;
}

} // namespace loopblocks
