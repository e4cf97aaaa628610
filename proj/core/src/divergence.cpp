#include "divbound/divergence.hpp"

#include <cmath>

#include "divbound/errors.hpp"

namespace divbound {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

std::string atom_name(std::span<const std::string> ids, std::size_t i) {
    return i < ids.size() ? ids[i] : "#" + std::to_string(i);
}

}  // namespace

namespace detail {

ExtendedReal raw_divergence(const Generator& f, std::span<const double> mu,
                            std::span<const double> nu, std::span<const std::string> ids) {
    if (mu.size() != nu.size()) throw DomainError("raw_divergence: weight vectors differ in length");
    CompensatedSum sum;
    bool infinite = false;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const double m = mu[i];
        const double n = nu[i];
        if (n > 0.0) {
            const ExtendedReal term = f(m / n);
            if (term.is_infinite())
                infinite = true;
            else
                sum.add(n * term.raw());
        } else if (m > 0.0) {
            throw AbsoluteContinuityViolation(atom_name(ids, i));
        }
    }
    if (infinite) return ExtendedReal::infinity();
    return ExtendedReal{sum.value()};
}

ExtendedReal clamp_nonnegative(ExtendedReal v) {
    if (v.raw() < 0.0 && v.raw() >= -kNonnegativityTolerance) return ExtendedReal{0.0};
    return v;
}

}  // namespace detail

std::vector<DensityRatio> density_ratio(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
    const AlignedPair p = align(mu, nu);
    std::vector<DensityRatio> out;
    out.reserve(p.ids.size());
    for (std::size_t i = 0; i < p.ids.size(); ++i) {
        if (p.second[i] > 0.0)
            out.push_back({p.ids[i], p.first[i] / p.second[i]});
        else if (p.first[i] > 0.0)
            throw AbsoluteContinuityViolation(p.ids[i]);
    }
    return out;
}

DivergenceValue d_f(const Generator& f, const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
    const AlignedPair p = align(mu, nu);
    const ExtendedReal raw = detail::raw_divergence(f, p.first, p.second, p.ids);
    return {detail::clamp_nonnegative(raw), f.name()};
}

DivergenceValue kl(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
    return d_f(builtin("KL"), mu, nu);
}
DivergenceValue sh(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
    return d_f(builtin("SH"), mu, nu);
}
DivergenceValue hellinger(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
    return d_f(builtin("HE"), mu, nu);
}
DivergenceValue pearson(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
    return d_f(builtin("PE"), mu, nu);
}
DivergenceValue tv(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
    return d_f(builtin("TV"), mu, nu);
}

}  // namespace divbound
