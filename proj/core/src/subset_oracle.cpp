#include "divbound/subset_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "divbound/errors.hpp"

namespace divbound::oracle {
namespace {

// Weights of the atoms of nu that lie in `within`, in nu's atom order.
std::vector<double> restricted_weights(const SignedMeasure& nu,
                                       const std::set<std::string>& within) {
    if (nu.size() > kMaxAtoms)
        throw DomainError("subset oracle is limited to " + std::to_string(kMaxAtoms) +
                          " atoms, got " + std::to_string(nu.size()));
    std::vector<double> w;
    for (const Atom& a : nu.atoms())
        if (within.contains(a.id)) w.push_back(a.weight);
    return w;
}

std::vector<double> all_weights(const SignedMeasure& nu) {
    std::set<std::string> all;
    for (const Atom& a : nu.atoms()) all.insert(a.id);
    return restricted_weights(nu, all);
}

template <class Visit>
void for_each_subset_sum(const std::vector<double>& w, Visit visit) {
    const std::uint32_t count = std::uint32_t{1} << w.size();
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        double sum = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (mask & (std::uint32_t{1} << i)) sum += w[i];
        visit(sum);
    }
}

}  // namespace

double sup_over_subsets(const SignedMeasure& nu, const std::set<std::string>& within) {
    double best = 0.0;  // the empty set
    for_each_subset_sum(restricted_weights(nu, within),
                        [&](double s) { best = std::max(best, s); });
    return best;
}

double inf_over_subsets(const SignedMeasure& nu, const std::set<std::string>& within) {
    double best = 0.0;
    for_each_subset_sum(restricted_weights(nu, within),
                        [&](double s) { best = std::min(best, s); });
    return best;
}

double sup_abs_over_subsets(const SignedMeasure& nu) {
    double best = 0.0;
    for_each_subset_sum(all_weights(nu), [&](double s) { best = std::max(best, std::abs(s)); });
    return best;
}

double tv_by_subsets(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
    const AlignedPair p = align(mu, nu);
    if (p.ids.size() > kMaxAtoms)
        throw DomainError("subset oracle is limited to " + std::to_string(kMaxAtoms) + " atoms");
    double best = 0.0;
    const std::uint32_t count = std::uint32_t{1} << p.ids.size();
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        double a = 0.0;
        double b = 0.0;
        for (std::size_t i = 0; i < p.ids.size(); ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                a += p.first[i];
                b += p.second[i];
            }
        }
        best = std::max(best, std::abs(a - b));
    }
    return 2.0 * best;
}

}  // namespace divbound::oracle
