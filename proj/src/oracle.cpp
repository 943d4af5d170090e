#include "sir/oracle.hpp"

#include <string>

#include "sir/measures.hpp"
#include "sir/solver_dp.hpp"

namespace sir {

namespace {

void check_budget(int n, const OracleBudget& budget, const char* what) {
  if (n > budget.max_n)
    throw BudgetExceeded(std::string(what) + ": n=" + std::to_string(n) +
                         " exceeds oracle budget max_n=" +
                         std::to_string(budget.max_n));
}

// Preference used for ties at equal sum-length: compare the (e, s) pairs
// from the last interval leftwards, smaller values first. This matches the
// DP backtrack, which minimizes the last end (skip wins ties) and then the
// start of each taken interval.
bool tie_better(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (ia->e != ib->e) return ia->e < ib->e;
    if (ia->s != ib->s) return ia->s < ib->s;
  }
  return a.size() < b.size();
}

struct ExhaustiveSearch {
  const std::vector<std::pair<Interval, double>>& jobs;
  int n;
  std::vector<Interval> current;
  std::vector<Interval> best;
  long long current_sl = 0;
  long long best_sl = -1;

  void run() { descend(0, -1); }

  void descend(std::size_t idx, int last_end) {
    // Even covering every remaining timestamp cannot beat the incumbent.
    if (best_sl >= 0 && current_sl + (n - 1 - last_end) < best_sl) return;
    if (idx == jobs.size()) {
      if (current_sl > best_sl ||
          (current_sl == best_sl && tie_better(current, best))) {
        best_sl = current_sl;
        best = current;
      }
      return;
    }
    const Interval iv = jobs[idx].first;
    if (iv.s > last_end) {
      current.push_back(iv);
      current_sl += iv.length();
      descend(idx + 1, iv.e);
      current_sl -= iv.length();
      current.pop_back();
    }
    descend(idx + 1, last_end);
  }
};

}  // namespace

SirSolution brute_force_solve(const TimeSeriesPair& pair,
                              const MiningParams& params,
                              const OracleBudget& budget) {
  check_budget(pair.n(), budget, "brute_force_solve");
  const auto jobs = enumerate_strong_intervals(pair, params);

  ExhaustiveSearch search{jobs, pair.n(), {}, {}, 0, -1};
  search.run();

  SirSolution sol;
  sol.intervals = search.best;
  sol.sum_length = search.best_sl < 0 ? 0 : search.best_sl;
  sol.strengths.reserve(sol.intervals.size());
  for (const Interval iv : sol.intervals)
    sol.strengths.push_back(interval_value(params.measure, pair, iv));
  return sol;
}

std::pair<std::vector<bool>, std::vector<bool>> naive_weakness(
    const TimeSeriesPair& pair, MeasureKind kind, double tau,
    const OracleBudget& budget) {
  check_budget(pair.n(), budget, "naive_weakness");
  detail::require_qualifying(kind);
  const int n = pair.n();
  std::vector<bool> left(static_cast<std::size_t>(n), true);
  std::vector<bool> right(static_cast<std::size_t>(n), true);
  for (int t = 0; t < n; ++t) {
    for (int a = 0; a < t; ++a)
      if (interval_value(kind, pair, {a, t - 1}) >= tau) {
        left[t] = false;
        break;
      }
    for (int e = t; e < n; ++e)
      if (interval_value(kind, pair, {t, e}) >= tau) {
        right[t] = false;
        break;
      }
  }
  return {left, right};
}

}  // namespace sir
