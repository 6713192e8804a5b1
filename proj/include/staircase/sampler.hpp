#ifndef STAIRCASE_SAMPLER_HPP
#define STAIRCASE_SAMPLER_HPP

#include <vector>

#include "staircase/enumeration.hpp"
#include "staircase/partition.hpp"
#include "staircase/rng.hpp"
#include "staircase/tableau.hpp"

namespace staircase {

/// Shapes at most this size are sampled with exact rational corner weights.
inline constexpr long kExactSamplingThreshold = 400;

struct CornerProbability {
    Cell cell;
    BigRatio probability;
};

struct CornerWeight {
    Cell cell;
    double probability;
};

/// P(largest label sits at corner u) = count(p minus u) / count(p), for the
/// removable corners of p in row order. Throws EmptyShape.
std::vector<CornerProbability> corner_probabilities(const Partition& p, DiagramKind kind);

/// The same distribution in floating point as used above the exact
/// threshold: log-hook sums for ordinary shapes, the row-product form of the
/// shifted count for shifted ones.
std::vector<CornerWeight> corner_probabilities_float(const Partition& p, DiagramKind kind);

/// Uniformly random standard filling of p. Labels are placed from |p| down
/// to 1, each in a removable corner drawn with one uniform variate. While the
/// remaining shape is larger than exact_threshold the weights are floating
/// point.
Tableau sample_tableau(const Partition& p, DiagramKind kind, RngState& rng,
                       long exact_threshold = kExactSamplingThreshold);

}  // namespace staircase

#endif  // STAIRCASE_SAMPLER_HPP
