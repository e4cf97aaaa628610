#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace divbound {

struct Atom {
    std::string id;
    double weight = 0.0;

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite-support signed measure: an ordered list of atoms with unique ids and
/// finite weights. The sigma-algebra is the power set of the atoms.
class SignedMeasure {
public:
    SignedMeasure() = default;
    /// Throws InvalidMeasure on duplicate ids or non-finite weights.
    explicit SignedMeasure(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }

    /// Weight of `id`, or 0 if the atom is not in the support.
    double weight(std::string_view id) const;
    bool contains(std::string_view id) const;

    /// nu(B) for a set of atom ids; ids outside the support contribute 0.
    double mass(const std::set<std::string>& subset) const;
    /// nu(Omega).
    double total_mass() const;

    friend bool operator==(const SignedMeasure& a, const SignedMeasure& b) {
        return a.atoms_ == b.atoms_;
    }

private:
    std::vector<Atom> atoms_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Nonnegative weights summing to one within kProbabilityTolerance.
class ProbabilityMeasure {
public:
    static constexpr double kProbabilityTolerance = 1e-9;

    ProbabilityMeasure() = default;
    /// Throws InvalidMeasure when a weight is negative or non-finite, an id is
    /// repeated, or the weights do not sum to one. Weights are stored as given.
    explicit ProbabilityMeasure(std::vector<Atom> atoms);

    /// Rescales nonnegative weights to unit mass. Throws InvalidMeasure if the
    /// total is zero.
    static ProbabilityMeasure normalize(std::vector<Atom> atoms);

    /// Atoms named "a1", "a2", ... in order.
    static ProbabilityMeasure from_weights(std::span<const double> weights);

    const std::vector<Atom>& atoms() const noexcept { return measure_.atoms(); }
    std::size_t size() const noexcept { return measure_.size(); }
    double weight(std::string_view id) const { return measure_.weight(id); }
    double mass(const std::set<std::string>& subset) const { return measure_.mass(subset); }

    const SignedMeasure& as_signed() const noexcept { return measure_; }

    friend bool operator==(const ProbabilityMeasure& a, const ProbabilityMeasure& b) {
        return a.measure_ == b.measure_;
    }

private:
    SignedMeasure measure_;
};

/// Weights of two measures over the union of their supports: the first
/// measure's atoms in order, followed by atoms only the second one carries.
/// Missing atoms get weight 0.
struct AlignedPair {
    std::vector<std::string> ids;
    std::vector<double> first;
    std::vector<double> second;
};

AlignedPair align(const SignedMeasure& a, const SignedMeasure& b);
AlignedPair align(const ProbabilityMeasure& a, const ProbabilityMeasure& b);

/// mu - nu on the union of the supports.
SignedMeasure difference(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu);

struct HahnDecomposition {
    std::set<std::string> positive_set;
    std::set<std::string> negative_set;
    SignedMeasure upper;  // nu+, supported on the positive set
    SignedMeasure lower;  // nu-, supported on the negative set
};

/// Splits the support into P (weight >= 0, zero atoms included) and N
/// (weight < 0). upper carries the weights on P, lower the negated weights on
/// N, so nu = upper - lower atomwise.
HahnDecomposition hahn_jordan(const SignedMeasure& nu);

/// |nu|(Omega) = nu+(Omega) + nu-(Omega).
double total_variation_norm(const SignedMeasure& nu);

/// ||mu - nu|| = sum_i |mu_i - nu_i| over the union of supports, in [0, 2].
double tv_distance(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu);

/// sum over nu_i > 0 of nu_i |mu_i / nu_i - 1|. Throws
/// AbsoluteContinuityViolation when mu is not absolutely continuous w.r.t. nu.
double tv_via_density(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu);

}  // namespace divbound
