#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sir/types.hpp"

namespace sir {

/// A collection of identified pairs sharing one series length.
struct PairSet {
  std::vector<std::pair<std::string, TimeSeriesPair>> pairs;
  int n = 0;

  /// Validates equal lengths and unique ids; n = 0 for an empty set.
  static PairSet create(std::vector<std::pair<std::string, TimeSeriesPair>> pairs);
};

struct PairIssue {
  std::string id;
  std::string message;
};

/// Keeps pairs whose full-length |pearson| is strictly below max_abs_corr,
/// preserving input order. Constant-series pairs are excluded and reported
/// through `issues` (when given) instead of aborting the batch.
PairSet filter_pairs(const PairSet& set, double max_abs_corr,
                     std::vector<PairIssue>* issues = nullptr);

enum class SolverKind { dp, pdp };

struct BatchRow {
  std::string id;
  SirSolution solution;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

/// Mines every pair; rows come back in input order regardless of the
/// number of worker threads. Per-pair failures land in BatchRow::error and
/// the batch continues.
std::vector<BatchRow> mine_batch(const PairSet& set, const MiningParams& params,
                                 SolverKind solver, unsigned threads = 1);

/// scores[t] = fraction of solutions with one interval covering the whole
/// window [t, t+window_len-1].
struct ActivityProfile {
  int window_len = 0;
  std::vector<double> scores;  // length n - window_len + 1, values in [0, 1]
};

ActivityProfile interval_activity_scores(const std::vector<SirSolution>& solutions,
                                         int n, int w);

/// The k highest-scoring window starts, descending by score, ties broken
/// toward the earlier start.
std::vector<std::pair<int, double>> top_anomalous_windows(
    const ActivityProfile& profile, int k);

}  // namespace sir
