#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace seqent {

/// A finite list of non-negative masses, not necessarily summing to 1,
/// together with the size of the ambient outcome space. The outcome space
/// may be larger than the number of listed masses (unlisted outcomes carry
/// mass 0) or unbounded.
class MassDistribution {
public:
    /// support_bound value meaning "no finite bound on the outcome space".
    static constexpr std::uint64_t kUnbounded = 0;

    MassDistribution(std::vector<double> masses, std::uint64_t support_bound);

    /// Uniform probabilistic distribution over r outcomes.
    static MassDistribution uniform(std::uint64_t r);

    const std::vector<double>& masses() const noexcept { return masses_; }
    std::uint64_t support_bound() const noexcept { return support_bound_; }
    bool has_finite_support() const noexcept { return support_bound_ != kUnbounded; }

    /// Exact total mass (compensated accumulation), cached at construction.
    double total_mass() const noexcept { return total_; }

    std::size_t positive_count() const noexcept { return positive_; }

private:
    std::vector<double> masses_;
    std::uint64_t support_bound_;
    double total_ = 0.0;
    std::size_t positive_ = 0;
};

}  // namespace seqent
