#pragma once

#include "seqent/mass_distribution.hpp"

namespace seqent {

/// -c*log2(c) for c >= 0, with the continuous extension point_entropy(0) = 0.
/// Values below 1e-300 are treated as exactly 0 to keep the logarithm safe.
/// Throws std::domain_error for negative input.
double point_entropy(double c);

/// Shannon entropy H(p) = sum of point_entropy over all masses, in bits.
/// Non-negative whenever all masses lie in [0,1].
double shannon_entropy(const MassDistribution& p);

/// Upper bound ||p||*(log2 r - log2 ||p||) on H(p) for a finite outcome
/// space of size r; returns 0 when ||p|| = 0.
/// Throws std::invalid_argument when the support is unbounded.
double entropy_max_bound(const MassDistribution& p);

/// Bound on |H(p+q) - H(p)| for a non-negative perturbation q:
/// min{ H(p) + H(||p||) + H(||q||) + ||q||*log2 r,
///      2*|log2(e * min_i p_i)| * ||q|| }.
/// The second branch is +infinity when some listed mass of p is zero (or p
/// lists no masses); the first is +infinity when the support is unbounded.
/// Throws std::domain_error when p and q disagree on support_bound.
double entropy_difference_bound(const MassDistribution& p, const MassDistribution& q);

}  // namespace seqent
