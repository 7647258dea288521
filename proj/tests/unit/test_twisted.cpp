#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace loopblocks;

namespace {

Weight w(std::initializer_list<std::int64_t> c) { return Weight(c); }

DrinfeldPoly pi(const Weight &lam, const std::string &sym, int zeta = 0)
{
    return poly_from_pairs({{lam, {sym, zeta}}});
}

TwistedPoly roots(std::initializer_list<std::tuple<std::size_t, Coordinate, std::int64_t>> items)
{
    TwistedPoly p;
    for (const auto &[k, c, m] : items) {
        p.add(k, c, m);
    }
    return p;
}

} // namespace

TEST(TwistedPiLambdaA, Examples)
{
    const FoldedSystem a3 = build_folding("A3", 2);
    EXPECT_EQ(twisted_pi_lambda_a(a3, w({1, 0}), {"a", 0}), roots({{0, {"a", 0}, 1}}));
    EXPECT_EQ(twisted_pi_lambda_a(a3, w({0, 1}), {"a", 1}), roots({{1, {"a", 0}, 1}}));
    const FoldedSystem a4 = build_folding("A4", 2);
    EXPECT_EQ(twisted_pi_lambda_a(a4, w({0, 2}), {"a", 0}), roots({{1, {"a", 0}, 1}}));
    try {
        twisted_pi_lambda_a(a4, w({0, 1}), {"a", 0});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParityViolation);
    }
}

TEST(TwistedMultiply, Laws)
{
    const FoldedSystem fs = build_folding("A3", 2);
    const TwistedPoly p = twisted_pi_lambda_a(fs, w({1, 0}), {"a", 0});
    const TwistedPoly q = twisted_pi_lambda_a(fs, w({0, 1}), {"b", 1});
    EXPECT_EQ(twisted_multiply(p, TwistedPoly{}), p);
    EXPECT_EQ(twisted_multiply(p, q), twisted_multiply(q, p));
    EXPECT_EQ(twisted_multiply(p, q).comps().size(), 2u);
    EXPECT_EQ(twisted_multiply(p, p), twisted_pi_lambda_a(fs, w({2, 0}), {"a", 0}));
}

TEST(LambdaOfTwisted, Examples)
{
    const FoldedSystem a3 = build_folding("A3", 2);
    EXPECT_EQ(lambda_of_twisted(a3, fold(a3, pi(w({1, 0, 0}), "a"))), w({1, 0}));
    EXPECT_EQ(lambda_of_twisted(a3, TwistedPoly{}), w({0, 0}));
    const FoldedSystem a4 = build_folding("A4", 2);
    EXPECT_EQ(lambda_of_twisted(a4, twisted_pi_lambda_a(a4, w({0, 2}), {"a", 0})), w({0, 2}));
}

TEST(Fold, Examples)
{
    const FoldedSystem a3 = build_folding("A3", 2);
    const TwistedPoly base = twisted_pi_lambda_a(a3, w({1, 0}), {"a", 0});
    EXPECT_EQ(fold(a3, pi(w({1, 0, 0}), "a", 0)), base);
    EXPECT_EQ(fold(a3, pi(w({0, 0, 1}), "a", 1)), base);
    EXPECT_EQ(fold(a3, pi(w({0, 1, 0}), "a", 0)), roots({{1, {"a", 0}, 1}}));
    EXPECT_EQ(fold(a3, pi(w({0, 1, 0}), "a", 1)), roots({{1, {"a", 0}, 1}}));
    EXPECT_TRUE(fold(a3, DrinfeldPoly{}).empty());
}

TEST(Fold, HomomorphismAndLambda)
{
    oracle::Generator gen(53);
    for (const auto &fs : oracle::standard_contexts()) {
        const RootSystem &rs = fs.ambient();
        for (int i = 0; i < 100; ++i) {
            const auto p = gen.drinfeld(fs, 3, 3, 2);
            const auto q = gen.drinfeld(fs, 3, 3, 2);
            EXPECT_EQ(fold(fs, multiply(p, q)), twisted_multiply(fold(fs, p), fold(fs, q)));
            Weight sum(fs.folded_rank());
            for (int eps = 0; eps < fs.m(); ++eps) {
                sum += lambda_component(fs, lambda_of(rs, p), eps);
            }
            EXPECT_EQ(lambda_of_twisted(fs, fold(fs, p)), sum);
            EXPECT_EQ(fold(fs, p), oracle::fold_nodewise(fs, p));
            EXPECT_EQ(lambda_of_twisted(fs, fold(fs, dual(rs, p))), lambda_of_twisted(fs, fold(fs, p)));
        }
    }
}

TEST(CanonicalPreimage, Examples)
{
    const FoldedSystem a3 = build_folding("A3", 2);
    EXPECT_EQ(canonical_preimage(a3, fold(a3, pi(w({0, 0, 1}), "a", 1))), pi(w({1, 0, 0}), "a", 0));
    EXPECT_EQ(canonical_preimage(a3, fold(a3, pi(w({0, 1, 0}), "a", 0))), pi(w({0, 1, 0}), "a", 0));
    EXPECT_TRUE(canonical_preimage(a3, TwistedPoly{}).empty());
}

TEST(CanonicalPreimage, InFiberAndAsym)
{
    oracle::Generator gen(59);
    for (const auto &fs : oracle::standard_contexts()) {
        for (int i = 0; i < 100; ++i) {
            const TwistedPoly p = gen.twisted(fs, 3, 2, 2);
            const DrinfeldPoly c = canonical_preimage(fs, p);
            EXPECT_EQ(fold(fs, c), p);
            EXPECT_TRUE(is_asym(fs, c));
        }
    }
}

TEST(CanonicalPreimage, RejectsMalformed)
{
    const FoldedSystem a3 = build_folding("A3", 2);
    for (const TwistedPoly &bad :
         {roots({{1, {"a", 1}, 1}}), roots({{5, {"a", 0}, 1}}), roots({{0, {"a", 2}, 1}}), roots({{0, {"", 0}, 1}})}) {
        try {
            canonical_preimage(a3, bad);
            FAIL();
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::MalformedTwisted);
        }
    }
}

TEST(AsymCollapse, Examples)
{
    const FoldedSystem a3 = build_folding("A3", 2);
    const DrinfeldPoly p = multiply(pi(w({1, 0, 0}), "a", 0), pi(w({0, 0, 1}), "a", 1));
    EXPECT_EQ(asym_collapse(a3, p), pi(w({2, 0, 0}), "a", 0));
    EXPECT_EQ(fold(a3, asym_collapse(a3, p)), fold(a3, p));
    const DrinfeldPoly asym = multiply(pi(w({0, 0, 1}), "a", 1), pi(w({1, 1, 0}), "b", 0));
    EXPECT_EQ(asym_collapse(a3, asym), asym);
    EXPECT_TRUE(asym_collapse(a3, DrinfeldPoly{}).empty());
}

TEST(AsymCollapse, Properties)
{
    oracle::Generator gen(61);
    for (const auto &fs : oracle::standard_contexts()) {
        for (int i = 0; i < 100; ++i) {
            const auto p = gen.drinfeld(fs, 4, 2, 2);
            const auto c = asym_collapse(fs, p);
            EXPECT_TRUE(is_asym(fs, c));
            EXPECT_EQ(fold(fs, c), fold(fs, p));
            EXPECT_EQ(asym_collapse(fs, c), c);
            if (is_asym(fs, p)) {
                EXPECT_EQ(c, p);
            }
        }
    }
}

TEST(Fiber, WorkedExamples)
{
    const FoldedSystem a3 = build_folding("A3", 2);
    std::vector<DrinfeldPoly> want_a3{pi(w({0, 0, 1}), "a", 1), pi(w({1, 0, 0}), "a", 0)};
    std::sort(want_a3.begin(), want_a3.end());
    auto got = fiber(a3, fold(a3, pi(w({1, 0, 0}), "a")));
    EXPECT_EQ(got, want_a3);

    const FoldedSystem d4 = build_folding("D4", 3);
    std::vector<DrinfeldPoly> want_d4{pi(w({1, 0, 0, 0}), "a", 0), pi(w({0, 0, 0, 1}), "a", 1),
                                      pi(w({0, 0, 1, 0}), "a", 2)};
    std::sort(want_d4.begin(), want_d4.end());
    EXPECT_EQ(fiber(d4, fold(d4, pi(w({1, 0, 0, 0}), "a"))), want_d4);

    EXPECT_EQ(fiber(a3, TwistedPoly{}), std::vector<DrinfeldPoly>{DrinfeldPoly{}});
}

TEST(Fiber, FixedNodeMass)
{
    const FoldedSystem a3 = build_folding("A3", 2);
    const auto f = fiber(a3, fold(a3, pi(w({0, 1, 0}), "a")));
    std::vector<DrinfeldPoly> want{pi(w({0, 1, 0}), "a", 0), pi(w({0, 1, 0}), "a", 1)};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(f, want);
}

TEST(Fiber, MatchesBruteForce)
{
    oracle::Generator gen(67);
    for (const auto &fs : oracle::standard_contexts()) {
        for (int i = 0; i < 25; ++i) {
            const TwistedPoly p = gen.twisted(fs, 2, 2);
            const auto f = fiber(fs, p);
            EXPECT_EQ(f, oracle::brute_fiber(fs, p));
            EXPECT_EQ(f.size(), fiber_size(fs, p));
            for (const auto &q : f) {
                EXPECT_EQ(fold(fs, q), p);
            }
        }
    }
}

TEST(Fiber, ContainsEveryPreimageSource)
{
    oracle::Generator gen(71);
    for (const auto &fs : oracle::standard_contexts()) {
        for (int i = 0; i < 60; ++i) {
            const auto p = gen.drinfeld(fs, 3, 2, 1);
            const auto f = fiber(fs, fold(fs, p));
            EXPECT_TRUE(std::binary_search(f.begin(), f.end(), p));
        }
    }
}

TEST(Fiber, Multiplicative)
{
    const FoldedSystem fs = build_folding("A3", 2);
    const TwistedPoly p = twisted_pi_lambda_a(fs, w({1, 1}), {"a", 0});
    const TwistedPoly q = twisted_pi_lambda_a(fs, w({2, 0}), {"b", 1});
    EXPECT_EQ(fiber(fs, twisted_multiply(p, q)).size(), fiber(fs, p).size() * fiber(fs, q).size());
}
