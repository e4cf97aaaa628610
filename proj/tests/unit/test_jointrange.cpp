#include <gtest/gtest.h>

#include <cmath>

#include "divbound/bounds.hpp"
#include "divbound/errors.hpp"
#include "divbound/jointrange.hpp"

using namespace divbound;

namespace {

// mpmath, 30 digits.
constexpr double kKlHalfQuarter = 0.143841036225890463719609502997;
constexpr double kPhiKlQuarter = 0.0631678848039264991284546083919;
constexpr double kSlack = 0.080673151421963964591154894605;

}  // namespace

TEST(RandomPairTest, DeterministicPerSeed) {
    const MeasurePair a = random_pair(2, 42);
    const MeasurePair b = random_pair(2, 42);
    EXPECT_EQ(a.mu, b.mu);
    EXPECT_EQ(a.nu, b.nu);
    EXPECT_EQ(a.mu.size(), 2u);
}

TEST(RandomPairTest, NuIsFlooredAwayFromZero) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const MeasurePair p = random_pair(5, seed);
        for (const Atom& atom : p.nu.atoms()) EXPECT_GE(atom.weight, kRandomNuFloor);
    }
}

TEST(RandomPairTest, AdjacentSeedsDiffer) {
    const MeasurePair a = random_pair(2, 7);
    const MeasurePair b = random_pair(2, 8);
    EXPECT_FALSE(a.mu == b.mu);
    EXPECT_FALSE(a.nu == b.nu);
    EXPECT_FALSE(a.mu == a.nu);
}

TEST(RandomPairTest, RejectsTinySupport) {
    EXPECT_THROW(random_pair(1, 0), DomainError);
    EXPECT_THROW(random_pair(0, 0), DomainError);
}

TEST(ScanTest, TotalVariationHasZeroSlack) {
    for (const ScanRecord& r : scan_binary(builtin("TV"), 25)) {
        EXPECT_NEAR(r.slack.finite(), 0.0, 1e-12) << r.p << "," << r.q;
    }
}

TEST(ScanTest, DiagonalIsZero) {
    for (const ScanRecord& r : scan_binary(builtin("KL"), 19)) {
        if (r.p != r.q) continue;
        EXPECT_EQ(r.tv, 0.0);
        EXPECT_EQ(r.divergence.raw(), 0.0);
        EXPECT_EQ(r.slack.raw(), 0.0);
    }
}

TEST(ScanTest, KullbackLeiblerHalfQuarterRecord) {
    const auto records = scan_binary(builtin("KL"), 3);
    ASSERT_EQ(records.size(), 9u);
    // p-major over {0.25, 0.5, 0.75}: p = 0.5, q = 0.25 is record 3.
    const ScanRecord& r = records[3];
    ASSERT_EQ(r.p, 0.5);
    ASSERT_EQ(r.q, 0.25);
    EXPECT_EQ(r.tv, 0.5);
    EXPECT_NEAR(r.divergence.finite(), kKlHalfQuarter, 1e-15);
    EXPECT_NEAR(r.lower_bound.finite(), kPhiKlQuarter, 1e-15);
    EXPECT_NEAR(r.slack.finite(), kSlack, 1e-15);
}

TEST(ScanTest, SlackNonnegativeForAllBuiltins) {
    for (std::string_view name : builtin_names()) {
        for (const ScanRecord& r : scan_binary(builtin(name), 60))
            EXPECT_GE(r.slack.raw(), -1e-9) << name << " p=" << r.p << " q=" << r.q;
    }
}

TEST(ScanTest, DeterministicRecords) {
    const auto a = scan_binary(builtin("HE"), 15);
    const auto b = scan_binary(builtin("HE"), 15);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].divergence, b[i].divergence);
        EXPECT_EQ(a[i].slack, b[i].slack);
    }
    EXPECT_THROW(scan_binary(builtin("HE"), 1), DomainError);
}

TEST(VerifyTest, SingleTrialReport) {
    const VerificationReport r = verify_bound(builtin("PE"), 1, 2, 5);
    EXPECT_EQ(r.trials, 1u);
    EXPECT_EQ(r.generator_name, "PE");
    EXPECT_EQ(r.seed, 5u);
    EXPECT_EQ(r.worst_pair.mu.size(), 2u);
    EXPECT_TRUE(r.passed());
}

TEST(VerifyTest, SoundOnRandomPairs) {
    for (std::string_view name : {"KL", "HE"}) {
        const VerificationReport r = verify_bound(builtin(name), 10000, 8, 2024);
        EXPECT_LE(r.max_violation, kSoundnessTolerance) << name;
    }
}

TEST(VerifyTest, DeterministicReports) {
    const VerificationReport a = verify_bound(builtin("SH"), 300, 6, 99);
    const VerificationReport b = verify_bound(builtin("SH"), 300, 6, 99);
    EXPECT_EQ(a.max_violation, b.max_violation);
    EXPECT_EQ(a.worst_pair.mu, b.worst_pair.mu);
    EXPECT_EQ(a.worst_pair.nu, b.worst_pair.nu);
}

TEST(VerifyTest, RejectsBadArguments) {
    EXPECT_THROW(verify_bound(builtin("KL"), 0, 4, 1), DomainError);
    EXPECT_THROW(verify_bound(builtin("KL"), 10, 1, 1), DomainError);
}

TEST(TightnessTest, TotalVariationFrontierIsTight) {
    for (double d : {0.0, 0.1, 0.5, 1.0, 1.7, 2.0}) {
        const TightnessGap g = tightness_gap(builtin("TV"), d, 2000);
        EXPECT_LE(g.gap, 1e-6) << d;
        EXPECT_GE(g.gap, -1e-9) << d;
    }
}

TEST(TightnessTest, ZeroLevelWithSeparation) {
    const TightnessGap g = tightness_gap(builtin("KL"), 0.0, 200);
    EXPECT_EQ(g.certified_tv, 0.0);
    EXPECT_EQ(g.achieved_tv, 0.0);
}

TEST(TightnessTest, CertificateDominatesFrontier) {
    EXPECT_GE(tightness_gap(builtin("KL"), 0.1, 2000).gap, 0.0);
    for (std::string_view name : builtin_names()) {
        for (double d = 0.0; d <= 5.0; d += 0.25)
            EXPECT_GE(tightness_gap(builtin(name), d, 200).gap, -1e-9) << name << " d=" << d;
    }
}

TEST(TightnessTest, RejectsNegativeTarget) {
    EXPECT_THROW(tightness_gap(builtin("KL"), -0.1, 100), DomainError);
}
