#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "divbound/extended_real.hpp"
#include "divbound/generator.hpp"
#include "divbound/measure.hpp"

namespace divbound {

/// Largest acceptable amount by which the lower bound may exceed the divergence.
inline constexpr double kSoundnessTolerance = 1e-9;

struct MeasurePair {
    ProbabilityMeasure mu;
    ProbabilityMeasure nu;
};

/// Two measures on atoms a1..an, each with weights proportional to
/// independent Exp(1) draws of the seeded counter stream (uniform on the
/// simplex). nu is mixed with the uniform floor so every weight is >= 1e-9.
/// Deterministic per (n, seed). DomainError for n < 2.
MeasurePair random_pair(std::size_t n, std::uint64_t seed);

inline constexpr double kRandomNuFloor = 1e-9;

/// One grid point of the binary scan: mu = (p, 1 - p), nu = (q, 1 - q).
struct ScanRecord {
    double p = 0.0;
    double q = 0.0;
    double tv = 0.0;
    ExtendedReal divergence;
    ExtendedReal lower_bound;
    ExtendedReal slack;  // divergence - lower_bound, +inf when the divergence is
};

/// All pairs (p, q) from the grid {i / (resolution + 1) : i = 1..resolution}
/// of (0, 1), p-major. DomainError for resolution < 2.
std::vector<ScanRecord> scan_binary(const Generator& f, std::size_t resolution);

struct VerificationReport {
    std::string generator_name;
    std::size_t trials = 0;
    double max_violation = 0.0;  // max of lower_bound - divergence, finite divergences only
    MeasurePair worst_pair;
    std::uint64_t seed = 0;

    bool passed() const noexcept { return max_violation <= kSoundnessTolerance; }
};

/// Trial i draws random_pair(2 + i mod (max_support - 1), derive_seed(seed, i)).
/// The worst pair is the first trial attaining the maximal violation.
/// DomainError when trials == 0 or max_support < 2.
VerificationReport verify_bound(const Generator& f, std::size_t trials, std::size_t max_support,
                                std::uint64_t seed);

struct TightnessGap {
    double certified_tv = 0.0;  // invert(f, d).tv_upper_bound
    double achieved_tv = 0.0;   // largest TV of a binary pair with D_f <= d
    double gap = 0.0;           // certified - achieved
};

/// Compares the certificate at d_target with the binary-alphabet frontier.
/// For each p on the grid {k / (resolution - 1)} of [0, 1], q is pushed away
/// from p on both sides by bisection (D_f of Bernoulli pairs is convex in q
/// and zero at q = p) while staying feasible and inside (0, 1).
/// At d_target = 0 a generator with a separation coefficient admits only
/// q = p. DomainError for negative or infinite d_target or resolution < 2.
TightnessGap tightness_gap(const Generator& f, double d_target, std::size_t resolution);

}  // namespace divbound
