#include <gtest/gtest.h>

#include <random>

#include <braidnet/constructions.hpp>
#include <braidnet/invariants.hpp>

using namespace braidnet;

TEST(Signature, ParseIndexRoundTrip)
{
    auto s = Signature::parse("+-+");
    EXPECT_EQ(s.index(), 2u);
    EXPECT_EQ(Signature::from_index(3, 2), s);
    EXPECT_EQ(Signature::from_index(3, 0).to_string(), "+++");
    EXPECT_EQ(Signature::from_index(3, 7).to_string(), "---");
    EXPECT_EQ(s.negated().to_string(), "-+-");
    for (std::uint64_t b = 0; b < 64; ++b)
        EXPECT_EQ(Signature::from_index(6, b).index(), b);
    EXPECT_THROW(Signature::parse("+x-"), input_error);
}

TEST(Conjugate, Examples)
{
    EXPECT_EQ(conjugate(SortingNetwork::parse("121")).to_string(), "121");
    EXPECT_EQ(conjugate(SortingNetwork::parse("123212")).to_string(), "212321");
    for (auto const& s : enumerate_networks(4)) {
        EXPECT_EQ(conjugate(conjugate(s)), s);
        EXPECT_EQ(complement(complement(s)), s);
    }
    EXPECT_EQ(complement(SortingNetwork::parse("121")).to_string(), "212");
}

TEST(ConjugateSigned, Examples)
{
    auto s = SortingNetwork::parse("121");
    auto c = conjugate_signed(s, Signature::parse("+-+"));
    EXPECT_EQ(c.to_string(), "1- 2+ 1-");
    EXPECT_EQ(c.inverse(), signed_network(s, Signature::parse("+-+")));
    EXPECT_THROW(signed_network(s, Signature::parse("+-")), input_error);
}

TEST(ConjugateSigned, ProductIsTrivial)
{
    std::mt19937 rng(37);
    for (int n : {4, 5}) {
        auto nets = enumerate_networks(n);
        std::uniform_int_distribution<std::size_t> pick(0, nets.size() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            auto const& s = nets[pick(rng)];
            std::uniform_int_distribution<std::uint64_t> sig(0, (std::uint64_t{1} << s.length()) - 1);
            auto sigma = Signature::from_index(s.length(), sig(rng));
            EXPECT_TRUE(is_trivial(signed_network(s, sigma) * conjugate_signed(s, sigma)));
        }
    }
}

TEST(Asb, Examples)
{
    auto s = SortingNetwork::parse("121");
    auto a = asb(s, Signature::parse("+-+"));
    EXPECT_EQ(a, SignedBraidWord::parse("1+ 2- 1+ 2- 1+ 2-"));
    EXPECT_FALSE(is_trivial(a));
    EXPECT_TRUE(is_trivial(asb(s, Signature::parse("+++"))));
}

TEST(Asb, AlwaysUnlinkedAtFour)
{
    std::mt19937 rng(41);
    std::uniform_int_distribution<std::uint64_t> sig(0, 63);
    for (auto const& s : enumerate_networks(4))
        for (int trial = 0; trial < 50; ++trial)
            EXPECT_TRUE(lk_crossings(asb(s, Signature::from_index(6, sig(rng)))).is_zero());
}

TEST(Asb, EveryTripleIsTypeOne)
{
    for (auto const& s : enumerate_networks(4)) {
        auto a = asb(s, Signature::from_index(6, 0));
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                for (int k = j + 1; k <= 4; ++k)
                    EXPECT_EQ(triple_loop_type(a, i, j, k), LoopType::type_i);
    }
}

TEST(Dsb, Examples)
{
    auto d = dsb(SortingNetwork::parse("121"), Signature::parse("+-+"));
    EXPECT_EQ(d, SignedBraidWord::parse("1+ 2- 1+ 1- 2+ 1-"));
    EXPECT_TRUE(is_trivial(d));
    // 123121 is slim: every unlinked signature untangles
    auto s0 = SortingNetwork::parse("123121");
    for (std::uint64_t b = 0; b < 64; ++b) {
        auto w = dsb(s0, Signature::from_index(6, b));
        if (lk_crossings(w).is_zero()) {
            EXPECT_TRUE(is_trivial(w));
        }
    }
}

TEST(Dsb, AlwaysPureAtFive)
{
    std::mt19937 rng(43);
    auto nets = enumerate_networks(5);
    std::uniform_int_distribution<std::size_t> pick(0, nets.size() - 1);
    std::uniform_int_distribution<std::uint64_t> sig(0, 1023);
    for (int trial = 0; trial < 100; ++trial) {
        EXPECT_TRUE(is_pure(dsb(nets[pick(rng)], Signature::from_index(10, sig(rng)))));
        EXPECT_TRUE(is_pure(asb(nets[pick(rng)], Signature::from_index(10, sig(rng)))));
    }
}

TEST(Dsb, SecondPassCrossesReflectedPairs)
{
    // letter k of the second copy exchanges (n+1-q, n+1-p) where the first exchanged (p,q)
    for (int n : {4, 5})
        for (auto const& s : enumerate_networks(n)) {
            auto d = wiring_diagram(n, dsb(s, Signature::from_index(s.length(), 0)).positions());
            int big_n = s.length();
            for (int k = 0; k < big_n; ++k) {
                auto a = d.crossings[k], b = d.crossings[big_n + k];
                EXPECT_EQ(b.low, n + 1 - a.high);
                EXPECT_EQ(b.high, n + 1 - a.low);
            }
        }
}

TEST(SortingLoop, Validation)
{
    auto s = SortingNetwork::parse("121");
    EXPECT_THROW(SortingLoop(s, SortingNetwork::parse("123121"), Signature::parse("++++++")), input_error);
    EXPECT_THROW(SortingLoop(s, s, Signature::parse("+++")), input_error);
    EXPECT_EQ(SortingLoop(s, s, Signature::parse("+-+-+-")).braid().to_string(), "1+ 2- 1+ 1- 2+ 1-");
}
