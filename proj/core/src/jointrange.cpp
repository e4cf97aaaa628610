#include "divbound/jointrange.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "divbound/bounds.hpp"
#include "divbound/divergence.hpp"
#include "divbound/errors.hpp"
#include "divbound/random.hpp"

namespace divbound {
namespace {

// q stays this far inside (0, 1) unless it coincides with p.
constexpr double kOpenMargin = 1e-12;
constexpr int kFrontierIterations = 100;

std::vector<double> exponential_weights(CounterStream stream, std::size_t n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (double& x : w) {
        x = -std::log(stream.uniform());
        total += x;
    }
    for (double& x : w) x /= total;
    return w;
}

ExtendedReal bernoulli_divergence(const Generator& f, double p, double q) {
    const std::array<double, 2> mu{p, 1.0 - p};
    const std::array<double, 2> nu{q, 1.0 - q};
    return detail::clamp_nonnegative(detail::raw_divergence(f, mu, nu));
}

// Furthest q from p in direction towards `edge` with D_f(p, q) <= d.
double frontier(const Generator& f, double p, double edge, ExtendedReal d) {
    // With a separation coefficient D_f = 0 forces q = p. Near p the computed
    // divergence drowns in cancellation (it is O((q - p)^2)), so the level-0
    // frontier cannot be found numerically.
    if (d.raw() == 0.0 && f.separation_coefficient()) return p;
    if (bernoulli_divergence(f, p, edge) <= d) return edge;
    double feasible = p;
    double infeasible = edge;
    for (int i = 0; i < kFrontierIterations; ++i) {
        const double mid = 0.5 * (feasible + infeasible);
        if (mid == feasible || mid == infeasible) break;
        if (bernoulli_divergence(f, p, mid) <= d)
            feasible = mid;
        else
            infeasible = mid;
    }
    return feasible;
}

}  // namespace

MeasurePair random_pair(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw DomainError("random_pair: support size must be at least 2");
    const std::vector<double> mu_w = exponential_weights(CounterStream(seed, 0), n);
    std::vector<double> nu_w = exponential_weights(CounterStream(seed, 1), n);
    const double scale = 1.0 - static_cast<double>(n) * kRandomNuFloor;
    for (double& x : nu_w) x = kRandomNuFloor + scale * x;
    return {ProbabilityMeasure::from_weights(mu_w), ProbabilityMeasure::from_weights(nu_w)};
}

std::vector<ScanRecord> scan_binary(const Generator& f, std::size_t resolution) {
    if (resolution < 2) throw DomainError("scan_binary: resolution must be at least 2");
    const double denom = static_cast<double>(resolution + 1);
    std::vector<ScanRecord> records;
    records.reserve(resolution * resolution);
    for (std::size_t i = 1; i <= resolution; ++i) {
        const double p = static_cast<double>(i) / denom;
        for (std::size_t j = 1; j <= resolution; ++j) {
            const double q = static_cast<double>(j) / denom;
            ScanRecord r;
            r.p = p;
            r.q = q;
            r.tv = 2.0 * std::abs(p - q);
            r.divergence = bernoulli_divergence(f, p, q);
            r.lower_bound = lower_bound(f, r.tv);
            if (r.divergence.is_infinite()) {
                r.slack = ExtendedReal::infinity();
            } else if (r.lower_bound.is_infinite()) {
                throw Error("scan_binary: lower bound is infinite at a finite divergence");
            } else {
                r.slack = ExtendedReal{r.divergence.raw() - r.lower_bound.raw()};
            }
            records.push_back(r);
        }
    }
    return records;
}

VerificationReport verify_bound(const Generator& f, std::size_t trials, std::size_t max_support,
                                std::uint64_t seed) {
    if (trials == 0) throw DomainError("verify_bound: trials must be at least 1");
    if (max_support < 2) throw DomainError("verify_bound: max_support must be at least 2");
    VerificationReport report;
    report.generator_name = f.name();
    report.trials = trials;
    report.seed = seed;
    report.max_violation = -std::numeric_limits<double>::infinity();
    const std::size_t sizes = max_support - 1;
    for (std::size_t i = 0; i < trials; ++i) {
        MeasurePair pair = random_pair(2 + i % sizes, derive_seed(seed, i));
        const ExtendedReal div = d_f(f, pair.mu, pair.nu).value;
        double violation = 0.0;
        if (div.is_finite()) {
            const ExtendedReal lb = lower_bound(f, std::min(2.0, tv_distance(pair.mu, pair.nu)));
            violation = lb.is_infinite() ? std::numeric_limits<double>::infinity()
                                         : lb.raw() - div.raw();
        }
        if (violation > report.max_violation) {
            report.max_violation = violation;
            report.worst_pair = std::move(pair);
        }
    }
    return report;
}

TightnessGap tightness_gap(const Generator& f, double d_target, std::size_t resolution) {
    if (!(d_target >= 0.0) || std::isinf(d_target))
        throw DomainError("tightness_gap: d_target must be finite and nonnegative");
    if (resolution < 2) throw DomainError("tightness_gap: resolution must be at least 2");
    const ExtendedReal d{d_target};
    TightnessGap out;
    out.certified_tv = invert(f, d).tv_upper_bound;
    double best = 0.0;
    for (double p : uniform_grid(0.0, 1.0, resolution)) {
        const double up = frontier(f, p, std::max(p, 1.0 - kOpenMargin), d);
        const double down = frontier(f, p, std::min(p, kOpenMargin), d);
        best = std::max({best, 2.0 * (up - p), 2.0 * (p - down)});
    }
    out.achieved_tv = best;
    out.gap = out.certified_tv - out.achieved_tv;
    return out;
}

}  // namespace divbound
