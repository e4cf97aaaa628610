#include "divbound/measure.hpp"

#include <cmath>

#include "divbound/errors.hpp"

namespace divbound {

SignedMeasure::SignedMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    index_.reserve(atoms_.size());
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const Atom& a = atoms_[i];
        if (!std::isfinite(a.weight))
            throw InvalidMeasure("atom '" + a.id + "' has a non-finite weight");
        if (!index_.emplace(a.id, i).second)
            throw InvalidMeasure("duplicate atom id '" + a.id + "'");
    }
}

double SignedMeasure::weight(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? 0.0 : atoms_[it->second].weight;
}

bool SignedMeasure::contains(std::string_view id) const {
    return index_.contains(std::string(id));
}

// Left-to-right in atom order; the subset oracle sums in the same order so the
// two agree bit for bit.
double SignedMeasure::mass(const std::set<std::string>& subset) const {
    double sum = 0.0;
    for (const Atom& a : atoms_)
        if (subset.contains(a.id)) sum += a.weight;
    return sum;
}

double SignedMeasure::total_mass() const {
    double sum = 0.0;
    for (const Atom& a : atoms_) sum += a.weight;
    return sum;
}

ProbabilityMeasure::ProbabilityMeasure(std::vector<Atom> atoms) : measure_(std::move(atoms)) {
    for (const Atom& a : measure_.atoms())
        if (a.weight < 0.0)
            throw InvalidMeasure("atom '" + a.id + "' has negative probability");
    const double total = measure_.total_mass();
    if (std::abs(total - 1.0) > kProbabilityTolerance)
        throw InvalidMeasure("probability weights sum to " + std::to_string(total) +
                             ", not 1");
}

ProbabilityMeasure ProbabilityMeasure::normalize(std::vector<Atom> atoms) {
    double total = 0.0;
    for (const Atom& a : atoms) {
        if (!(a.weight >= 0.0) || !std::isfinite(a.weight))
            throw InvalidMeasure("cannot normalize: atom '" + a.id +
                                 "' has a negative or non-finite weight");
        total += a.weight;
    }
    if (!(total > 0.0)) throw InvalidMeasure("cannot normalize a measure of zero mass");
    for (Atom& a : atoms) a.weight /= total;
    return ProbabilityMeasure(std::move(atoms));
}

ProbabilityMeasure ProbabilityMeasure::from_weights(std::span<const double> weights) {
    std::vector<Atom> atoms;
    atoms.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i)
        atoms.push_back({"a" + std::to_string(i + 1), weights[i]});
    return ProbabilityMeasure(std::move(atoms));
}

AlignedPair align(const SignedMeasure& a, const SignedMeasure& b) {
    AlignedPair out;
    const std::size_t n = a.size() + b.size();
    out.ids.reserve(n);
    out.first.reserve(n);
    out.second.reserve(n);
    for (const Atom& atom : a.atoms()) {
        out.ids.push_back(atom.id);
        out.first.push_back(atom.weight);
        out.second.push_back(b.weight(atom.id));
    }
    for (const Atom& atom : b.atoms()) {
        if (a.contains(atom.id)) continue;
        out.ids.push_back(atom.id);
        out.first.push_back(0.0);
        out.second.push_back(atom.weight);
    }
    return out;
}

AlignedPair align(const ProbabilityMeasure& a, const ProbabilityMeasure& b) {
    return align(a.as_signed(), b.as_signed());
}

SignedMeasure difference(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
    AlignedPair p = align(mu, nu);
    std::vector<Atom> atoms;
    atoms.reserve(p.ids.size());
    for (std::size_t i = 0; i < p.ids.size(); ++i)
        atoms.push_back({p.ids[i], p.first[i] - p.second[i]});
    return SignedMeasure(std::move(atoms));
}

HahnDecomposition hahn_jordan(const SignedMeasure& nu) {
    HahnDecomposition d;
    std::vector<Atom> upper;
    std::vector<Atom> lower;
    for (const Atom& a : nu.atoms()) {
        if (a.weight >= 0.0) {
            d.positive_set.insert(a.id);
            upper.push_back({a.id, a.weight});
        } else {
            d.negative_set.insert(a.id);
            lower.push_back({a.id, -a.weight});
        }
    }
    d.upper = SignedMeasure(std::move(upper));
    d.lower = SignedMeasure(std::move(lower));
    return d;
}

double total_variation_norm(const SignedMeasure& nu) {
    const HahnDecomposition d = hahn_jordan(nu);
    return d.upper.total_mass() + d.lower.total_mass();
}

double tv_distance(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
    return total_variation_norm(difference(mu, nu));
}

double tv_via_density(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
    const AlignedPair p = align(mu, nu);
    double sum = 0.0;
    for (std::size_t i = 0; i < p.ids.size(); ++i) {
        const double m = p.first[i];
        const double n = p.second[i];
        if (n > 0.0) {
            sum += n * std::abs(m / n - 1.0);
        } else if (m > 0.0) {
            throw AbsoluteContinuityViolation(p.ids[i]);
        }
    }
    return sum;
}

}  // namespace divbound
