#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "divbound/extended_real.hpp"
#include "divbound/generator.hpp"
#include "divbound/measure.hpp"

namespace divbound {

/// Nonnegativity slack: sums in [-1e-12, 0) are reported as 0.
inline constexpr double kNonnegativityTolerance = 1e-12;

struct DivergenceValue {
    ExtendedReal value;
    std::string generator_name;
};

struct DensityRatio {
    std::string id;
    double ratio = 0.0;
};

/// mu_i / nu_i on the union of supports, skipping atoms where both vanish.
/// Throws AbsoluteContinuityViolation naming the first atom with mu > 0 = nu.
std::vector<DensityRatio> density_ratio(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu);

/// D_f(mu, nu) = sum over nu_i > 0 of nu_i f(mu_i / nu_i), with f(0) taken
/// from the generator metadata and atoms where both measures vanish skipped.
/// The sum is Neumaier-compensated; +inf if any term is +inf.
DivergenceValue d_f(const Generator& f, const ProbabilityMeasure& mu, const ProbabilityMeasure& nu);

DivergenceValue kl(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu);
DivergenceValue sh(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu);
DivergenceValue hellinger(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu);
DivergenceValue pearson(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu);
DivergenceValue tv(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu);

namespace detail {

/// d_f on already aligned weight vectors, before clamping. Returns the raw
/// sum so callers can inspect roundoff below zero. `ids` may be empty, in
/// which case violations are reported by index.
ExtendedReal raw_divergence(const Generator& f, std::span<const double> mu,
                            std::span<const double> nu,
                            std::span<const std::string> ids = {});

/// Clamps [-1e-12, 0) to 0; values further below zero are returned unchanged.
ExtendedReal clamp_nonnegative(ExtendedReal v);

}  // namespace detail
}  // namespace divbound
