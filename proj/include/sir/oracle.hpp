#pragma once

#include <utility>
#include <vector>

#include "sir/types.hpp"

namespace sir {

/// Hard cap on instance sizes the brute-force routines accept. Requests
/// beyond max_n raise BudgetExceeded, never silently truncate.
struct OracleBudget {
  int max_n = 18;
};

/// Ground-truth solver: enumerates all qualifying intervals, then searches
/// every non-overlapping subset for maximum total length. Ties resolve to
/// the same solution solve_dp backtracking yields (skip-first, smallest
/// start), i.e. the optimum minimizing the (end, start) sequence read from
/// the rightmost interval leftwards. Deliberately independent of the DP
/// recurrence.
SirSolution brute_force_solve(const TimeSeriesPair& pair,
                              const MiningParams& params,
                              const OracleBudget& budget = {});

/// Literal O(N^2) evaluation of the weakness definitions:
/// left_weak[t]  = every interval ending at t-1 is weak,
/// right_weak[t] = every interval beginning at t is weak.
/// Pass a larger budget to override the default cap.
std::pair<std::vector<bool>, std::vector<bool>> naive_weakness(
    const TimeSeriesPair& pair, MeasureKind kind, double tau,
    const OracleBudget& budget = {});

}  // namespace sir
