#pragma once

#include <nlohmann/json.hpp>

#include "loopblocks/linkage.hpp"
#include "loopblocks/spectral.hpp"

namespace loopblocks {

using json = nlohmann::json;

// Schemas:
//   Weight            [1,0,2]
//   CartanLabel       "A3"
//   Coordinate        {"sym":"a","zeta":0}
//   DrinfeldPoly      {"support":[{"weight":[...],"coord":{...}}]}
//   TwistedPoly       {"nodes":[{"node":1,"roots":[{"sym":"a","zeta":0,"mult":1}]}]}
//   SpectralCharacter [{"coord":{...},"coset":[...]}]
//   BlockLabel        {"folded":"C2","character":[...]}
//   Chain             {"steps":[[...]],"directions":["up"]}
// Nodes are 1-based in JSON. Lists are sorted by symbol, zeta power and node.

void to_json(json &j, const Weight &w);
void from_json(const json &j, Weight &w);

void to_json(json &j, const FundGroupElt &x);
void from_json(const json &j, FundGroupElt &x);

void to_json(json &j, const CartanLabel &l);
void from_json(const json &j, CartanLabel &l);

void to_json(json &j, const Coordinate &c);
void from_json(const json &j, Coordinate &c);

void to_json(json &j, const DrinfeldPoly &p);
void from_json(const json &j, DrinfeldPoly &p);

void to_json(json &j, const TwistedPoly &p);
void from_json(const json &j, TwistedPoly &p);

void to_json(json &j, const SpectralCharacter &x);
void from_json(const json &j, SpectralCharacter &x);

void to_json(json &j, const BlockLabel &b);
void from_json(const json &j, BlockLabel &b);

void to_json(json &j, const Chain &c);
void from_json(const json &j, Chain &c);

/// Orbits (1-based), stabilizers, folded label and invariant factors.
json summary(const FoldedSystem &fs);

/// Parses text as a value of type T, reporting any failure as ParseError.
template <class T>
T parse_json(const std::string &text)
{
    try {
        return json::parse(text).get<T>();
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

} // namespace loopblocks
