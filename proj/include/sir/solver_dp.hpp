#pragma once

#include <utility>
#include <vector>

#include "sir/types.hpp"

namespace sir {

/// Baseline exact solver: weighted interval scheduling over timestamp
/// prefixes, O(N^2) time, O(N) memory. Ties are broken deterministically:
/// skip preferred over take at equal value, then the smallest start wins.
SirSolution solve_dp(const TimeSeriesPair& pair, const MiningParams& params);

/// All intervals with length >= l_min and strength >= tau, sorted by (s, e).
std::vector<std::pair<Interval, double>> enumerate_strong_intervals(
    const TimeSeriesPair& pair, const MiningParams& params);

namespace detail {

/// DP restricted to timestamps [lo, hi]; shared with the partitioned solver.
/// Preconditions already checked by the callers.
SirSolution solve_dp_range(const TimeSeriesPair& pair,
                           const MiningParams& params, int lo, int hi);

void require_qualifying(MeasureKind kind);

}  // namespace detail

}  // namespace sir
