#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace loopblocks;

namespace {

Weight w(std::initializer_list<std::int64_t> c) { return Weight(c); }

DrinfeldPoly pi(const Weight &lam, const std::string &sym, int zeta = 0)
{
    return poly_from_pairs({{lam, {sym, zeta}}});
}

SpectralCharacter chi(std::initializer_list<std::pair<Coordinate, std::int64_t>> items)
{
    SpectralCharacter x;
    for (const auto &[c, r] : items) {
        x.assign(c, FundGroupElt{{r}});
    }
    return x;
}

} // namespace

TEST(CharOf, Examples)
{
    const RootSystem a3 = build_root_system("A3");
    EXPECT_EQ(char_of(a3, multiply(pi(w({1, 0, 0}), "a"), pi(w({0, 1, 0}), "b"))), chi({{{"a", 0}, 1}, {{"b", 0}, 2}}));
    const RootSystem a2 = build_root_system("A2");
    EXPECT_TRUE(char_of(a2, pi(a2.theta(), "a")).empty());
    EXPECT_TRUE(char_of(a3, DrinfeldPoly{}).empty());
}

TEST(CharOf, Homomorphism)
{
    oracle::Generator gen(73);
    for (const auto &fs : oracle::standard_contexts()) {
        const RootSystem &rs = fs.ambient();
        for (int i = 0; i < 100; ++i) {
            const auto p = gen.drinfeld(fs, 3, 3, 2);
            const auto q = gen.drinfeld(fs, 3, 3, 2);
            EXPECT_EQ(char_of(rs, multiply(p, q)), add(rs, char_of(rs, p), char_of(rs, q)));
        }
    }
}

TEST(Symmetrize, Examples)
{
    const FoldedSystem fs = build_folding("A3", 2);
    const SpectralCharacter want = chi({{{"a", 0}, 1}, {{"a", 1}, 3}});
    EXPECT_EQ(symmetrize(fs, chi({{{"a", 0}, 1}})), want);
    EXPECT_EQ(symmetrize(fs, chi({{{"a", 1}, 3}})), want);
    EXPECT_TRUE(symmetrize(fs, SpectralCharacter{}).empty());
}

TEST(Symmetrize, InvariantAndAdditive)
{
    oracle::Generator gen(79);
    for (const auto &fs : oracle::standard_contexts()) {
        const RootSystem &rs = fs.ambient();
        for (int i = 0; i < 100; ++i) {
            const auto x = gen.character(fs, 3, 2);
            const auto y = gen.character(fs, 3, 2);
            const auto s = symmetrize(fs, x);
            EXPECT_TRUE(is_sigma_invariant(fs, s));
            EXPECT_EQ(sigma_conjugate(fs, s, 1), s);
            EXPECT_EQ(symmetrize(fs, add(rs, x, y)), add(rs, s, symmetrize(fs, y)));
            EXPECT_EQ(symmetrize(fs, sigma_conjugate(fs, x, 1)), s);
            EXPECT_EQ(sigma_conjugate(fs, x, fs.m()), x);
        }
    }
}

TEST(Symmetrize, ConstantOnFibers)
{
    oracle::Generator gen(83);
    for (const auto &fs : oracle::standard_contexts()) {
        const RootSystem &rs = fs.ambient();
        for (int i = 0; i < 30; ++i) {
            const TwistedPoly p = gen.twisted(fs, 2, 2);
            const auto want = block_label(fs, p).canon;
            for (const auto &q : fiber(fs, p)) {
                EXPECT_EQ(symmetrize(fs, char_of(rs, q)), want);
            }
        }
    }
}

TEST(EquivSigma, Examples)
{
    const FoldedSystem fs = build_folding("A3", 2);
    const RootSystem &rs = fs.ambient();
    const auto x = char_of(rs, pi(w({1, 0, 0}), "a", 0));
    EXPECT_TRUE(equiv_sigma(fs, x, char_of(rs, pi(w({0, 0, 1}), "a", 1))));
    EXPECT_FALSE(equiv_sigma(fs, x, char_of(rs, pi(w({0, 0, 1}), "a", 0))));
    EXPECT_TRUE(equiv_sigma(fs, x, x));
}

TEST(EquivSigma, WitnessAgrees)
{
    oracle::Generator gen(89);
    for (const auto &fs : oracle::standard_contexts()) {
        const RootSystem &rs = fs.ambient();
        for (int i = 0; i < 40; ++i) {
            const auto x = gen.character(fs, 2, 2);
            const auto y = (i % 2 == 0) ? sigma_conjugate(fs, x, 1) : gen.character(fs, 2, 2);
            const auto witness = equiv_sigma_witness(fs, x, y);
            EXPECT_EQ(witness.has_value(), equiv_sigma(fs, x, y));
            if (witness) {
                EXPECT_EQ(char_of(rs, witness->first), x);
                EXPECT_EQ(char_of(rs, witness->second), y);
                EXPECT_EQ(fold(fs, witness->first), fold(fs, witness->second));
            }
        }
    }
}

TEST(BlockLabel, Examples)
{
    const FoldedSystem fs = build_folding("A3", 2);
    EXPECT_EQ(block_label(fs, fold(fs, pi(w({1, 0, 0}), "a"))).canon, chi({{{"a", 0}, 1}, {{"a", 1}, 3}}));
    EXPECT_EQ(block_label(fs, fold(fs, pi(w({1, 0, 0}), "a"))).folded.str(), "C2");
    EXPECT_TRUE(block_label(fs, fold(fs, pi(w({1, 0, 1}), "a"))).canon.empty());
    EXPECT_TRUE(block_label(fs, TwistedPoly{}).canon.empty());
}

TEST(SameBlock, Examples)
{
    const FoldedSystem fs = build_folding("A3", 2);
    const TwistedPoly p = fold(fs, pi(w({1, 0, 0}), "a"));
    EXPECT_TRUE(same_block(fs, p, fold(fs, pi(w({2, 0, 1}), "a"))));
    EXPECT_FALSE(same_block(fs, p, fold(fs, pi(w({0, 1, 0}), "a"))));
    EXPECT_TRUE(same_block(fs, p, p));
}

TEST(SameBlock, EquivalenceRelation)
{
    oracle::Generator gen(97);
    for (const auto &fs : oracle::standard_contexts()) {
        std::vector<TwistedPoly> pool;
        for (int i = 0; i < 25; ++i) {
            pool.push_back(gen.twisted(fs, 2, 2));
        }
        for (const auto &p : pool) {
            EXPECT_TRUE(same_block(fs, p, p));
            for (const auto &q : pool) {
                EXPECT_EQ(same_block(fs, p, q), same_block(fs, q, p));
                if (!same_block(fs, p, q)) {
                    continue;
                }
                for (const auto &r : pool) {
                    if (same_block(fs, q, r)) {
                        EXPECT_TRUE(same_block(fs, p, r));
                    }
                }
            }
        }
    }
}
