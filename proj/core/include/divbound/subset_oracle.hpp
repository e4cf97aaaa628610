#pragma once

#include <cstddef>
#include <set>
#include <string>

#include "divbound/measure.hpp"

namespace divbound::oracle {

// Exhaustive subset enumeration. Exponential in the support size and intended
// for tests and cross-checks only; supports above kMaxAtoms are rejected with
// DomainError.
inline constexpr std::size_t kMaxAtoms = 20;

/// sup over B subset of A of nu(B).
double sup_over_subsets(const SignedMeasure& nu, const std::set<std::string>& within);
/// inf over B subset of A of nu(B).
double inf_over_subsets(const SignedMeasure& nu, const std::set<std::string>& within);
/// sup over all B of |nu(B)|.
double sup_abs_over_subsets(const SignedMeasure& nu);
/// 2 sup_B |mu(B) - nu(B)| over the union of supports.
double tv_by_subsets(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu);

}  // namespace divbound::oracle
