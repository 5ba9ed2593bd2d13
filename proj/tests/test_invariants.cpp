#include <gtest/gtest.h>

#include <random>

#include <braidnet/constructions.hpp>
#include <braidnet/invariants.hpp>

#include "oracles.hpp"

using namespace braidnet;

namespace {

// lk by following particles: half the signed count of crossings per pair.
LinkingVector lk_by_tracking(SignedBraidWord const& b)
{
    int n = b.n();
    std::vector<int> at(n);
    std::iota(at.begin(), at.end(), 1);
    std::vector<int> twice(pair_count(n), 0);
    for (auto const& l : b.letters()) {
        int a = at[l.position - 1], c = at[l.position];
        twice[pair_index(n, std::min(a, c), std::max(a, c))] += l.sign;
        std::swap(at[l.position - 1], at[l.position]);
    }
    LinkingVector lk{n, {}};
    for (int t : twice)
        lk.entries.push_back(t / 2);
    return lk;
}

SignedBraidWord loop_of(std::string_view s, std::string_view t, std::uint64_t bits)
{
    auto a = SortingNetwork::parse(s), b = SortingNetwork::parse(t);
    return SortingLoop(a, b, Signature::from_index(2 * a.length(), bits)).braid();
}

} // namespace

TEST(MagnusCount, Examples)
{
    std::vector<int> p12{1, 2}, p1{1};
    EXPECT_EQ(magnus_count(FreeGroupWord{1, 2}, p12), 1);
    EXPECT_EQ(magnus_count(FreeGroupWord{1, -1}, p1), 0);
    // (x1,x2) +1, (x1,x2^-1) -1, (x1^-1,x2^-1) +1
    EXPECT_EQ(magnus_count(FreeGroupWord{1, 2, -1, -2}, p12), 1);
    EXPECT_THROW(magnus_count(FreeGroupWord{1}, std::vector<int>{}), input_error);
}

TEST(MagnusCount, MatchesSubsequenceEnumerationUpToLengthEight)
{
    auto words = oracle::reduced_words(3, 8);
    ASSERT_EQ(words.size(), 1u + 6 * (1 + 5 + 25 + 125 + 625 + 3125 + 15625 + 78125));
    std::vector<std::vector<int>> patterns;
    for (int a = 1; a <= 3; ++a) {
        patterns.push_back({a});
        for (int b = 1; b <= 3; ++b) {
            patterns.push_back({a, b});
            for (int c = 1; c <= 3; ++c)
                patterns.push_back({a, b, c});
        }
    }
    std::size_t mismatches = 0;
    for (auto const& w : words) {
        auto table = oracle::subsequence_table(w, 3);
        FreeGroupWord fw(w);
        for (auto const& p : patterns) {
            auto it = table.find(p);
            long long expect = it == table.end() ? 0 : it->second;
            mismatches += magnus_count(fw, p) != expect;
        }
    }
    EXPECT_EQ(mismatches, 0u);
}

TEST(MagnusCount, LongPatternsAgainstPerPatternOracle)
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> lab(1, 4), coin(0, 1), len(0, 12);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> w(len(rng));
        for (int& l : w)
            l = lab(rng) * (coin(rng) ? 1 : -1);
        w = oracle::reduce(w);
        std::vector<int> p(4);
        for (int& x : p)
            x = lab(rng);
        EXPECT_EQ(magnus_count(FreeGroupWord(w), p), oracle::brute_force_magnus(w, p));
    }
}

TEST(Mu, Examples)
{
    auto borromean = SignedBraidWord::parse("1+ 2- 1+ 2- 1+ 2-");
    EXPECT_EQ(std::abs(mu(borromean, {1, 2, 3})), 1);
    EXPECT_TRUE(lk_crossings(borromean).is_zero());
    EXPECT_TRUE(mu2_vector(comb(borromean)).is_zero());

    SignedBraidWord trivial(4, {});
    EXPECT_EQ(mu(trivial, {1, 2}), 0);
    EXPECT_EQ(mu(trivial, {1, 2, 3, 4}), 0);

    EXPECT_THROW(mu(borromean, {1}), input_error);
    EXPECT_THROW(mu(borromean, {1, 1}), input_error);
    EXPECT_THROW(mu(borromean, {1, 4}), input_error);
    EXPECT_THROW(mu(SignedBraidWord::parse("1+"), {1, 2}), input_error);
}

TEST(LinkingNumbers, Examples)
{
    EXPECT_TRUE(lk_crossings(asb(SortingNetwork::parse("121"), Signature::parse("+-+"))).is_zero());
    EXPECT_TRUE(lk_crossings(dsb(SortingNetwork::parse("121"), Signature::parse("+-+"))).is_zero());
    auto all_plus = lk_crossings(loop_of("121", "212", 0));
    EXPECT_EQ(all_plus.entries, (std::vector<int>{1, 1, 1}));
}

TEST(LinkingNumbers, Mu2EqualsLkOnAllLoopsAtThree)
{
    auto nets = enumerate_networks(3);
    for (auto const& s : nets)
        for (auto const& t : nets)
            for (std::uint64_t b = 0; b < 64; ++b) {
                auto loop = SortingLoop(s, t, Signature::from_index(6, b)).braid();
                auto lk = lk_crossings(loop);
                EXPECT_EQ(mu2_vector(comb(loop)), lk);
                EXPECT_EQ(lk_by_tracking(loop), lk);
            }
}

TEST(LinkingNumbers, Mu2EqualsLkSampledAtFour)
{
    auto nets = enumerate_networks(4);
    std::mt19937 rng(29);
    std::uniform_int_distribution<std::size_t> pick(0, nets.size() - 1);
    std::uniform_int_distribution<std::uint64_t> sig(0, (1u << 12) - 1);
    for (int trial = 0; trial < 500; ++trial) {
        auto loop = SortingLoop(nets[pick(rng)], nets[pick(rng)], Signature::from_index(12, sig(rng))).braid();
        auto lk = lk_crossings(loop);
        EXPECT_EQ(mu2_vector(comb(loop)), lk);
        EXPECT_EQ(lk_by_tracking(loop), lk);
    }
}

TEST(LinkingNumbers, Mu2EqualsHalfCrossingSumOnGeneralPureBraids)
{
    // products of conjugated full twists are pure but not sorting loops
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> pos(1, 4), coin(0, 1), len(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        SignedBraidWord b(5, {});
        for (int f = 0; f < 3; ++f) {
            std::vector<BraidLetter> w(len(rng));
            for (auto& l : w)
                l = {pos(rng), coin(rng) ? 1 : -1};
            SignedBraidWord c(5, w);
            int p = pos(rng), s = coin(rng) ? 1 : -1;
            b = b * c * SignedBraidWord(5, {{p, s}, {p, s}}) * c.inverse();
        }
        EXPECT_EQ(mu2_vector(comb(b)), lk_by_tracking(b));
    }
}

TEST(CrossingIndices, Examples)
{
    auto l2 = crossing_indices(loop_of("121", "121", 0));
    auto l1 = crossing_indices(loop_of("121", "212", 0));
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            EXPECT_EQ(l2.f(i, j) + l2.l(i, j), 7);
            EXPECT_EQ(l1.l(i, j) - l1.f(i, j), 3);
        }
    EXPECT_THROW(crossing_indices(SignedBraidWord::parse("1+ 1+ 1+ 1+")), input_error);
}

TEST(Mu3Vector, Examples)
{
    EXPECT_TRUE(mu3_vector(SignedBraidWord(4, {})).is_zero());

    // Counting strands from the other side (i -> 5-i) turns these into (1,3,4) and (1,2,3).
    auto d = mu3_vector(dsb(SortingNetwork::parse("132132"), Signature::parse("+-++-+")));
    EXPECT_EQ(std::abs(d.at(1, 2, 4)), 1);
    EXPECT_EQ(std::abs(d.at(2, 3, 4)), 1);
    EXPECT_EQ(d.at(1, 2, 3), 0);
    EXPECT_EQ(d.at(1, 3, 4), 0);
    EXPECT_EQ(d.magnitude(), 2);

    auto e = mu3_vector(dsb(SortingNetwork::parse("123212"), Signature::parse("+-++-+")));
    EXPECT_EQ(std::abs(e.at(1, 2, 3)), 1);
    EXPECT_EQ(std::abs(e.at(2, 3, 4)), 1);
    EXPECT_EQ(e.magnitude(), 2);
}

TEST(L1Census, EightUnlinkedTwoBorromean)
{
    int unlinked = 0, mu3_zero = 0;
    std::vector<std::string> exceptions;
    for (std::uint64_t b = 0; b < 64; ++b) {
        auto loop = loop_of("121", "212", b);
        if (!lk_crossings(loop).is_zero())
            continue;
        ++unlinked;
        auto m = mu3_vector(loop);
        if (m.is_zero()) {
            ++mu3_zero;
            EXPECT_TRUE(is_trivial(loop));
        } else {
            EXPECT_EQ(std::abs(m.at(1, 2, 3)), 1);
            exceptions.push_back(Signature::from_index(6, b).to_string().substr(0, 3));
        }
    }
    EXPECT_EQ(unlinked, 8);
    EXPECT_EQ(mu3_zero, 6);
    EXPECT_EQ(exceptions, (std::vector<std::string>{"+-+", "-+-"}));
}

TEST(ClassifyTriple, Examples)
{
    auto r = classify_triple_signature({1, -1, -1});
    ASSERT_TRUE(std::holds_alternative<TripleOrder>(r));
    EXPECT_EQ(std::get<TripleOrder>(r).ranking, (std::array<int, 3>{3, 1, 2}));
    EXPECT_TRUE(std::holds_alternative<NonTransitive>(classify_triple_signature({1, -1, 1})));
    EXPECT_TRUE(std::holds_alternative<NonTransitive>(classify_triple_signature({-1, 1, -1})));
    auto top = classify_triple_signature({1, 1, 1});
    EXPECT_EQ(std::get<TripleOrder>(top).ranking, (std::array<int, 3>{1, 2, 3}));
}

TEST(ClassifyTriple, SixOrdersMatchInversionSets)
{
    // a sign triple is transitive exactly when it is an inversion set
    int orders = 0;
    for (int m = 0; m < 8; ++m) {
        std::array<int, 3> s{m & 4 ? -1 : 1, m & 2 ? -1 : 1, m & 1 ? -1 : 1};
        auto c = classify_triple_signature(s);
        InversionSet inv(3, {static_cast<int8_t>(s[0]), static_cast<int8_t>(s[1]), static_cast<int8_t>(s[2])});
        EXPECT_EQ(std::holds_alternative<TripleOrder>(c), inv.is_transitive());
        orders += std::holds_alternative<TripleOrder>(c);
    }
    EXPECT_EQ(orders, 6);
}

TEST(ClassifyTriple, NonTransitiveFirstHalvesCarryMu3OnL1)
{
    auto d = wiring_diagram(SortingNetwork::parse("121"));
    for (std::uint64_t b = 0; b < 8; ++b) {
        auto first = Signature::from_index(3, b);
        auto s = triple_signs(d, first.signs(), 1, 2, 3);
        bool borromean = std::holds_alternative<NonTransitive>(classify_triple_signature(s));
        // the unlinked completion of this first half on 121.212
        std::vector<int> full(first.signs().begin(), first.signs().end());
        full.insert(full.end(), {-first[0], -first[1], -first[2]});
        auto loop = SortingLoop(SortingNetwork::parse("121"), SortingNetwork::parse("212"), Signature(full)).braid();
        ASSERT_TRUE(lk_crossings(loop).is_zero());
        EXPECT_EQ(borromean, !mu3_vector(loop).is_zero()) << first.to_string();
    }
}

TEST(TripleLoopType, Examples)
{
    // 121.121 revisits pairs in reverse order; 121.212 in the same order
    auto l2 = loop_of("121", "121", 0);
    auto l1 = loop_of("121", "212", 0);
    EXPECT_EQ(triple_loop_type(l2, 1, 2, 3), LoopType::type_ii);
    EXPECT_EQ(triple_loop_type(l1, 1, 2, 3), LoopType::type_i);
}
