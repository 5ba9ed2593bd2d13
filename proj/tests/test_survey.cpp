#include <gtest/gtest.h>

#include <braidnet/report.hpp>
#include <braidnet/survey.hpp>

using namespace braidnet;

namespace {

SortingNetwork net(std::string_view s) { return SortingNetwork::parse(s); }

TheoremCheck const& find_check(TheoremReport const& r, std::string const& id)
{
    for (auto const& c : r.checks)
        if (c.id == id)
            return c;
    throw std::runtime_error("missing check " + id);
}

} // namespace

TEST(Rational, Formatting)
{
    EXPECT_EQ(to_string(rational(0)), "0/1");
    EXPECT_EQ(to_string(rational(10, 16)), "5/8");
    EXPECT_EQ(to_string(rational(3)), "3/1");
    EXPECT_EQ(binomial(5, 3), 10);
    EXPECT_EQ(factorial(5), 120);
}

TEST(SweepDsb, UnlinkedCounts)
{
    for (int n : {3, 4, 5}) {
        int half = n / 2;
        int expect = 1 << (half * (n - half));
        for (auto const& s : enumerate_networks(n)) {
            auto m = summarize(s, 0, sweep_dsb(s));
            ASSERT_EQ(m.unlinked_count, expect) << s.to_string();
        }
    }
}

TEST(SweepDsb, RecordOrderFollowsSignatureIndex)
{
    auto rec = sweep_dsb(net("121"), 7);
    ASSERT_EQ(rec.size(), 8u);
    for (std::size_t b = 0; b < rec.size(); ++b) {
        EXPECT_EQ(rec[b].signature.index(), b);
        EXPECT_EQ(rec[b].network_id, 7);
    }
}

TEST(SweepDsb, ResourceGuard)
{
    EXPECT_THROW(sweep_dsb(net("123121"), 0, {.max_n = 3}), resource_error);
    EXPECT_THROW(dsb_census(6), resource_error);
}

TEST(SweepLoop, L1HistogramAndCensus)
{
    auto r = sweep_loop(net("121"), net("212"));
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.signatures, 64u);
    EXPECT_EQ(r.lk_histogram, (std::map<int, std::uint64_t>{{0, 8}, {1, 24}, {2, 24}, {3, 8}}));
    EXPECT_EQ(r.mean_lk, rational(3, 2));
    EXPECT_EQ(r.unlinked, 8u);
    EXPECT_EQ(r.unlinked_mu3_nonzero, 2u);
    EXPECT_EQ(r.unlinked_trivial, 6u);
    EXPECT_EQ(r.unlinked_mu3_zero_nontrivial, 0u);
    EXPECT_TRUE(r.mu2_matches_lk);
}

TEST(SweepLoop, L2AllUnlinkedTrivial)
{
    auto r = sweep_loop(net("121"), net("121"));
    EXPECT_EQ(r.unlinked, 8u);
    EXPECT_EQ(r.unlinked_trivial, 8u);
}

TEST(SweepLoop, HistogramIsBinomialAtFour)
{
    for (auto const& s : enumerate_networks(4)) {
        auto r = sweep_loop(s, complement(s));
        for (int k = 0; k <= 6; ++k)
            EXPECT_EQ(r.lk_histogram[k], static_cast<std::uint64_t>(binomial(6, k) << 6));
        EXPECT_EQ(r.mean_lk, rational(3));
    }
}

TEST(SlimAndFatness, SmallFixtures)
{
    for (auto s : {"121", "212"}) {
        auto m = summarize(net(s), 0, sweep_dsb(net(s)));
        EXPECT_EQ(m.fatness, 1);
        EXPECT_EQ(m.fatness_unlinked, 0);
        EXPECT_TRUE(m.slim_weak);
        EXPECT_FALSE(m.slim_strong);
    }
    EXPECT_EQ(fatness(net("121")), 1);

    struct Row
    {
        char const* net;
        int nontrivial;
        int fat_unlinked;
        bool slim;
    };
    for (auto row : {Row{"123121", 0, 0, true}, Row{"123212", 4, 2, false}, Row{"132132", 8, 2, false},
                     Row{"132312", 8, 2, false}}) {
        auto m = summarize(net(row.net), 0, sweep_dsb(net(row.net)));
        EXPECT_EQ(m.nontrivial_unlinked_count, row.nontrivial) << row.net;
        EXPECT_EQ(m.fatness_unlinked, row.fat_unlinked) << row.net;
        EXPECT_EQ(m.fatness, 4) << row.net;
        EXPECT_EQ(m.slim_weak, row.slim) << row.net;
        EXPECT_FALSE(m.slim_strong);
        EXPECT_EQ(slim_check(net(row.net)).weak, row.slim);
    }
}

TEST(SymmetryRepresentative, FourClassesAtFour)
{
    std::map<std::string, std::set<std::string>> classes;
    for (auto const& s : enumerate_networks(4))
        classes[symmetry_representative(s).to_string()].insert(s.to_string());
    EXPECT_EQ(classes.size(), 4u);
    EXPECT_EQ(classes["121321"], (std::set<std::string>{"121321", "123121", "321323", "323123"}));
    EXPECT_EQ(classes["123212"], (std::set<std::string>{"123212", "212321", "232123", "321232"}));
}

TEST(Distribution, FourElementFixture)
{
    auto d = distribution_report(4);
    EXPECT_EQ(d.networks.size(), 16u);
    EXPECT_EQ(d.global_mean, rational(5, 8));
    EXPECT_EQ(d.class_means.at("121321"), rational(0));
    EXPECT_EQ(d.class_means.at("123212"), rational(1, 2));
    EXPECT_EQ(d.class_means.at("132132"), rational(1));
    EXPECT_EQ(d.class_means.at("132312"), rational(1));
    EXPECT_EQ(d.mean_histogram, (std::map<rational, int>{{rational(0), 4}, {rational(1, 2), 4}, {rational(1), 8}}));
    EXPECT_EQ(d.mu3_histogram, (std::map<int, long long>{{0, 256 - 80}, {2, 80}}));
}

TEST(Distribution, DeterministicAcrossWorkers)
{
    auto one = to_json(distribution_report(4, {.workers = 1})).dump();
    auto many = to_json(distribution_report(4, {.workers = 8})).dump();
    EXPECT_EQ(one, many);
}

TEST(Theorems, AllHoldAtThreeAndFour)
{
    for (int n : {3, 4}) {
        auto r = verify_theorems(n);
        EXPECT_TRUE(r.all_passed()) << to_json(r).dump(2);
        EXPECT_FALSE(r.sampled);
        EXPECT_EQ(find_check(r, "main").failures, 0u);
        EXPECT_GT(find_check(r, "main").checked, 0u);
    }
    auto r4 = verify_theorems(4);
    EXPECT_EQ(find_check(r4, "main").checked, 3072u);
    EXPECT_EQ(find_check(r4, "path").checked, 2000u);
    EXPECT_EQ(find_check(r4, "asb_trivial").checked, 16u);
    EXPECT_TRUE(find_check(r4, "bruhat_loops").informational);
}

TEST(Theorems, WorkersDoNotChangeTheReport)
{
    EXPECT_EQ(to_json(verify_theorems(4, {.workers = 1})).dump(), to_json(verify_theorems(4, {.workers = 4})).dump());
}
