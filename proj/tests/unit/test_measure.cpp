#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "divbound/errors.hpp"
#include "divbound/measure.hpp"
#include "divbound/subset_oracle.hpp"
#include "support/oracles.hpp"

namespace ts = divbound::test_support;

namespace {

using namespace divbound;

SignedMeasure signed_of(std::vector<double> w) {
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < w.size(); ++i) atoms.push_back({"a" + std::to_string(i + 1), w[i]});
    return SignedMeasure(std::move(atoms));
}

ProbabilityMeasure prob_of(std::vector<double> w) { return ProbabilityMeasure::from_weights(w); }

std::set<std::string> ids_of(const SignedMeasure& m) {
    std::set<std::string> s;
    for (const Atom& a : m.atoms()) s.insert(a.id);
    return s;
}

// All subsets of the support, as id sets.
std::vector<std::set<std::string>> power_set(const SignedMeasure& m) {
    std::vector<std::set<std::string>> out;
    const std::size_t n = m.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::set<std::string> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.insert(m.atoms()[i].id);
        out.push_back(std::move(s));
    }
    return out;
}

void expect_hahn_matches_enumeration(const SignedMeasure& nu) {
    const HahnDecomposition d = hahn_jordan(nu);
    for (const auto& subset : power_set(nu)) {
        EXPECT_EQ(d.upper.mass(subset), oracle::sup_over_subsets(nu, subset));
        EXPECT_EQ(d.lower.mass(subset), -oracle::inf_over_subsets(nu, subset));
    }
}

}  // namespace

TEST(SignedMeasureTest, RejectsDuplicateIdsAndNonFiniteWeights) {
    EXPECT_THROW(SignedMeasure({{"x", 1.0}, {"x", 2.0}}), InvalidMeasure);
    EXPECT_THROW(SignedMeasure({{"x", std::nan("")}}), InvalidMeasure);
    EXPECT_THROW(SignedMeasure({{"x", INFINITY}}), InvalidMeasure);
}

TEST(SignedMeasureTest, MassIgnoresUnknownIds) {
    const SignedMeasure m = signed_of({0.5, -0.25});
    EXPECT_DOUBLE_EQ(m.mass({"a1", "zz"}), 0.5);
    EXPECT_DOUBLE_EQ(m.weight("zz"), 0.0);
    EXPECT_DOUBLE_EQ(m.total_mass(), 0.25);
}

TEST(ProbabilityMeasureTest, EnforcesSumAndSign) {
    EXPECT_NO_THROW(prob_of({0.5, 0.5 + 5e-10}));
    EXPECT_THROW(prob_of({0.5, 0.5 + 2e-9}), InvalidMeasure);
    EXPECT_THROW(prob_of({1.5, -0.5}), InvalidMeasure);
}

TEST(ProbabilityMeasureTest, NormalizeIsExplicit) {
    const ProbabilityMeasure p = ProbabilityMeasure::normalize({{"x", 2.0}, {"y", 6.0}});
    EXPECT_DOUBLE_EQ(p.weight("x"), 0.25);
    EXPECT_DOUBLE_EQ(p.weight("y"), 0.75);
    EXPECT_THROW(ProbabilityMeasure::normalize({{"x", 0.0}}), InvalidMeasure);
    EXPECT_THROW(ProbabilityMeasure::normalize({{"x", -1.0}, {"y", 2.0}}), InvalidMeasure);
}

TEST(HahnJordanTest, TwoAtomExample) {
    const SignedMeasure nu = signed_of({0.25, -0.25});
    const HahnDecomposition d = hahn_jordan(nu);
    EXPECT_EQ(d.positive_set, (std::set<std::string>{"a1"}));
    EXPECT_EQ(d.negative_set, (std::set<std::string>{"a2"}));
    EXPECT_EQ(d.upper.total_mass(), 0.25);
    EXPECT_EQ(d.lower.total_mass(), 0.25);
    expect_hahn_matches_enumeration(nu);
}

TEST(HahnJordanTest, ZeroMeasureGoesEntirelyToPositiveSet) {
    const SignedMeasure nu = signed_of({0.0, 0.0, 0.0});
    const HahnDecomposition d = hahn_jordan(nu);
    EXPECT_EQ(d.positive_set, ids_of(nu));
    EXPECT_TRUE(d.negative_set.empty());
    EXPECT_EQ(d.upper.total_mass(), 0.0);
    EXPECT_EQ(d.lower.total_mass(), 0.0);
    EXPECT_EQ(total_variation_norm(nu), 0.0);
}

TEST(HahnJordanTest, ThreeAtomExample) {
    const SignedMeasure nu = signed_of({0.3, -0.1, -0.2});
    const HahnDecomposition d = hahn_jordan(nu);
    EXPECT_EQ(d.positive_set, (std::set<std::string>{"a1"}));
    EXPECT_EQ(d.negative_set, (std::set<std::string>{"a2", "a3"}));
    EXPECT_EQ(d.upper.total_mass(), oracle::sup_over_subsets(nu, ids_of(nu)));
    EXPECT_EQ(d.lower.total_mass(), -oracle::inf_over_subsets(nu, ids_of(nu)));
    EXPECT_NEAR(d.upper.total_mass(), 0.3, 1e-15);
    EXPECT_NEAR(d.lower.total_mass(), 0.3, 1e-15);
    EXPECT_NEAR(total_variation_norm(nu), 0.6, 1e-15);
    expect_hahn_matches_enumeration(nu);
}

TEST(HahnJordanTest, PartitionAndReconstruction) {
    ts::TestRng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> w(rng.integer(1, 9));
        for (double& x : w) x = rng.uniform() < 0.1 ? 0.0 : rng.uniform() - 0.5;
        const SignedMeasure nu = signed_of(w);
        const HahnDecomposition d = hahn_jordan(nu);
        std::set<std::string> uni = d.positive_set;
        uni.insert(d.negative_set.begin(), d.negative_set.end());
        EXPECT_EQ(uni, ids_of(nu));
        EXPECT_EQ(d.positive_set.size() + d.negative_set.size(), nu.size());
        for (const Atom& a : nu.atoms()) {
            EXPECT_EQ(d.upper.weight(a.id) - d.lower.weight(a.id), a.weight);
            EXPECT_GE(d.upper.weight(a.id), 0.0);
            EXPECT_GE(d.lower.weight(a.id), 0.0);
            if (d.negative_set.contains(a.id)) EXPECT_FALSE(d.upper.contains(a.id));
            if (d.positive_set.contains(a.id)) EXPECT_FALSE(d.lower.contains(a.id));
        }
        expect_hahn_matches_enumeration(nu);
    }
}

TEST(TotalVariationTest, BalancedMeasureMatchesTwiceSupremum) {
    // Dyadic weights keep every subset sum exact.
    ts::TestRng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.integer(2, 10);
        std::vector<double> w(n);
        double total = 0.0;
        for (int i = 0; i + 1 < n; ++i) {
            w[i] = rng.integer(-64, 64) / 1024.0;
            total += w[i];
        }
        w[n - 1] = -total;
        const SignedMeasure nu = signed_of(w);
        ASSERT_EQ(nu.total_mass(), 0.0);
        EXPECT_EQ(total_variation_norm(nu), 2.0 * oracle::sup_abs_over_subsets(nu));
    }
}

TEST(TotalVariationTest, DistanceExamples) {
    EXPECT_DOUBLE_EQ(tv_distance(prob_of({0.5, 0.5}), prob_of({0.25, 0.75})), 0.5);
    EXPECT_DOUBLE_EQ(oracle::tv_by_subsets(prob_of({0.5, 0.5}), prob_of({0.25, 0.75})), 0.5);
    EXPECT_EQ(tv_distance(prob_of({0.2, 0.8}), prob_of({0.2, 0.8})), 0.0);
    EXPECT_EQ(tv_distance(prob_of({1.0, 0.0}), prob_of({0.0, 1.0})), 2.0);
}

TEST(TotalVariationTest, AlignsSupportsByUnion) {
    const ProbabilityMeasure mu(std::vector<Atom>{{"x", 1.0}});
    const ProbabilityMeasure nu(std::vector<Atom>{{"y", 0.5}, {"x", 0.5}});
    EXPECT_DOUBLE_EQ(tv_distance(mu, nu), 1.0);
    EXPECT_DOUBLE_EQ(tv_distance(nu, mu), 1.0);
    const AlignedPair p = align(mu, nu);
    EXPECT_EQ(p.ids, (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(p.first, (std::vector<double>{1.0, 0.0}));
    EXPECT_EQ(p.second, (std::vector<double>{0.5, 0.5}));
}

TEST(TotalVariationTest, DensityRepresentation) {
    EXPECT_DOUBLE_EQ(tv_via_density(prob_of({0.5, 0.5}), prob_of({0.25, 0.75})), 0.5);
    EXPECT_EQ(tv_via_density(prob_of({0.3, 0.7}), prob_of({0.3, 0.7})), 0.0);
    try {
        tv_via_density(prob_of({0.5, 0.5}), prob_of({1.0, 0.0}));
        FAIL() << "expected AbsoluteContinuityViolation";
    } catch (const AbsoluteContinuityViolation& e) {
        EXPECT_EQ(e.atom(), "a2");
    }
}

TEST(TotalVariationTest, MetricProperties) {
    ts::TestRng rng(23);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = rng.integer(2, 8);
        const auto a = prob_of(ts::random_simplex(rng, n, true));
        const auto b = prob_of(ts::random_simplex(rng, n, true));
        const auto c = prob_of(ts::random_simplex(rng, n, true));
        EXPECT_EQ(tv_distance(a, b), tv_distance(b, a));
        EXPECT_LE(tv_distance(a, c), tv_distance(a, b) + tv_distance(b, c) + 1e-12);
        EXPECT_EQ(tv_distance(a, a), 0.0);
        EXPECT_NEAR(tv_distance(a, b), static_cast<double>(ts::l1_ld(
                                           align(a, b).first, align(a, b).second)),
                    1e-14);
    }
}

TEST(TotalVariationTest, DensityAgreesWithDistanceUnderAbsoluteContinuity) {
    ts::TestRng rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = rng.integer(2, 8);
        const auto nu_w = ts::random_simplex(rng, n, true);
        auto mu_w = ts::random_simplex(rng, n);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (nu_w[i] == 0.0) mu_w[i] = 0.0;
            total += mu_w[i];
        }
        for (double& x : mu_w) x /= total;
        const auto mu = prob_of(mu_w);
        const auto nu = prob_of(nu_w);
        EXPECT_NEAR(tv_via_density(mu, nu), tv_distance(mu, nu), 1e-12);
    }
}

TEST(SubsetOracleTest, RejectsLargeSupports) {
    std::vector<double> w(oracle::kMaxAtoms + 1, 0.01);
    const SignedMeasure nu = signed_of(w);
    EXPECT_THROW(oracle::sup_abs_over_subsets(nu), DomainError);
    std::vector<double> ok(oracle::kMaxAtoms, 0.0);
    EXPECT_NO_THROW(oracle::sup_abs_over_subsets(signed_of(ok)));
}
