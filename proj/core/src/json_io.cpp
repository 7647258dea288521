#include "loopblocks/json_io.hpp"

namespace loopblocks {

namespace {

const json &field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

const json &array(const json &j, const char *what)
{
    if (!j.is_array()) {
        throw Error(ErrorKind::ParseError, std::string(what) + " must be a JSON array");
    }
    return j;
}

std::int64_t integer(const json &j, const char *what)
{
    if (!j.is_number_integer()) {
        throw Error(ErrorKind::ParseError, std::string(what) + " must be an integer");
    }
    return j.get<std::int64_t>();
}

} // namespace

void to_json(json &j, const Weight &w)
{
    j = json::array();
    for (auto c : w) {
        j.push_back(c);
    }
}

void from_json(const json &j, Weight &w)
{
    array(j, "weight");
    w = Weight(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        w[i] = integer(j[i], "weight entry");
    }
}

void to_json(json &j, const FundGroupElt &x) { j = x.residues; }

void from_json(const json &j, FundGroupElt &x)
{
    array(j, "coset");
    x.residues.clear();
    for (const auto &r : j) {
        x.residues.push_back(integer(r, "coset entry"));
    }
}

void to_json(json &j, const CartanLabel &l) { j = l.str(); }

void from_json(const json &j, CartanLabel &l)
{
    if (!j.is_string()) {
        throw Error(ErrorKind::ParseError, "type label must be a string");
    }
    l = CartanLabel::parse(j.get<std::string>());
}

void to_json(json &j, const Coordinate &c) { j = json{{"sym", c.sym}, {"zeta", c.zeta}}; }

void from_json(const json &j, Coordinate &c)
{
    const json &sym = field(j, "sym");
    if (!sym.is_string()) {
        throw Error(ErrorKind::ParseError, "coordinate symbol must be a string");
    }
    c.sym = sym.get<std::string>();
    c.zeta = j.contains("zeta") ? static_cast<int>(integer(j.at("zeta"), "zeta")) : 0;
}

void to_json(json &j, const DrinfeldPoly &p)
{
    json support = json::array();
    for (const auto &[c, w] : p.support()) {
        support.push_back(json{{"weight", w}, {"coord", c}});
    }
    j = json{{"support", std::move(support)}};
}

void from_json(const json &j, DrinfeldPoly &p)
{
    p = DrinfeldPoly{};
    const json &support = array(field(j, "support"), "support");
    std::size_t rank = 0;
    for (const auto &entry : support) {
        const Weight w = field(entry, "weight").get<Weight>();
        if (rank != 0 && w.rank() != rank) {
            throw Error(ErrorKind::RankMismatch, "support weights of different lengths");
        }
        rank = w.rank();
        p.insert(field(entry, "coord").get<Coordinate>(), w);
    }
}

void to_json(json &j, const TwistedPoly &p)
{
    json nodes = json::array();
    for (const auto &[k, roots] : p.comps()) {
        json rs = json::array();
        for (const auto &[root, mult] : roots) {
            rs.push_back(json{{"sym", root.sym}, {"zeta", root.zeta}, {"mult", mult}});
        }
        nodes.push_back(json{{"node", k + 1}, {"roots", std::move(rs)}});
    }
    j = json{{"nodes", std::move(nodes)}};
}

void from_json(const json &j, TwistedPoly &p)
{
    p = TwistedPoly{};
    for (const auto &entry : array(field(j, "nodes"), "nodes")) {
        const std::int64_t node = integer(field(entry, "node"), "node");
        if (node < 1) {
            throw Error(ErrorKind::MalformedTwisted, "node numbers start at 1");
        }
        for (const auto &root : array(field(entry, "roots"), "roots")) {
            const std::int64_t mult = root.contains("mult") ? integer(root.at("mult"), "mult") : 1;
            if (mult <= 0) {
                throw Error(ErrorKind::MalformedTwisted, "nonpositive root multiplicity");
            }
            p.add(static_cast<std::size_t>(node - 1), root.get<Coordinate>(), mult);
        }
    }
}

void to_json(json &j, const SpectralCharacter &x)
{
    j = json::array();
    for (const auto &[c, v] : x.support()) {
        j.push_back(json{{"coord", c}, {"coset", v}});
    }
}

void from_json(const json &j, SpectralCharacter &x)
{
    x = SpectralCharacter{};
    for (const auto &entry : array(j, "character")) {
        const auto c = field(entry, "coord").get<Coordinate>();
        if (x.support().contains(c)) {
            throw Error(ErrorKind::ParseError, "repeated coordinate in character");
        }
        x.assign(c, field(entry, "coset").get<FundGroupElt>());
    }
}

void to_json(json &j, const BlockLabel &b) { j = json{{"folded", b.folded}, {"character", b.canon}}; }

void from_json(const json &j, BlockLabel &b)
{
    b.folded = field(j, "folded").get<CartanLabel>();
    b.canon = field(j, "character").get<SpectralCharacter>();
}

void to_json(json &j, const Chain &c)
{
    json dirs = json::array();
    for (auto d : c.directions) {
        dirs.push_back(d == Direction::Up ? "up" : "down");
    }
    j = json{{"steps", c.steps}, {"directions", std::move(dirs)}};
}

void from_json(const json &j, Chain &c)
{
    c.steps.clear();
    c.directions.clear();
    for (const auto &s : array(field(j, "steps"), "steps")) {
        c.steps.push_back(s.get<Weight>());
    }
    for (const auto &d : array(field(j, "directions"), "directions")) {
        const std::string s = d.is_string() ? d.get<std::string>() : "";
        if (s != "up" && s != "down") {
            throw Error(ErrorKind::ParseError, "chain direction must be \"up\" or \"down\"");
        }
        c.directions.push_back(s == "up" ? Direction::Up : Direction::Down);
    }
}

json summary(const FoldedSystem &fs)
{
    json orbits = json::array();
    for (const auto &orbit : fs.orbits()) {
        json o = json::array();
        for (auto node : orbit) {
            o.push_back(node + 1);
        }
        orbits.push_back(std::move(o));
    }
    return json{{"type", fs.ambient().label()},
                {"m", fs.m()},
                {"folded", fs.folded_label()},
                {"orbits", std::move(orbits)},
                {"stabilizers", fs.stabilizers()},
                {"invariant_factors", fs.ambient().invariant_factors()}};
}

} // namespace loopblocks
