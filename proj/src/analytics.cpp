#include "sir/analytics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <unordered_set>

#include "sir/measures.hpp"
#include "sir/solver_dp.hpp"
#include "sir/solver_pdp.hpp"

namespace sir {

PairSet PairSet::create(
    std::vector<std::pair<std::string, TimeSeriesPair>> pairs) {
  PairSet set;
  set.pairs = std::move(pairs);
  if (set.pairs.empty()) return set;
  set.n = set.pairs.front().second.n();
  std::unordered_set<std::string> seen;
  for (const auto& [id, pair] : set.pairs) {
    if (pair.n() != set.n)
      throw ParamError("pair set: series length mismatch for pair '" + id +
                       "'");
    if (!seen.insert(id).second)
      throw ParamError("pair set: duplicate pair id '" + id + "'");
  }
  return set;
}

PairSet filter_pairs(const PairSet& set, double max_abs_corr,
                     std::vector<PairIssue>* issues) {
  PairSet kept;
  kept.n = set.n;
  for (const auto& entry : set.pairs) {
    try {
      const double r = pearson_full(entry.second);
      if (std::abs(r) < max_abs_corr) kept.pairs.push_back(entry);
    } catch (const DegenerateError& err) {
      if (issues) issues->push_back({entry.first, err.what()});
    }
  }
  return kept;
}

std::vector<BatchRow> mine_batch(const PairSet& set, const MiningParams& params,
                                 SolverKind solver, unsigned threads) {
  std::vector<BatchRow> rows(set.pairs.size());
  if (set.pairs.empty()) return rows;
  validate_params(params, set.n);

  auto mine_one = [&](std::size_t i) {
    rows[i].id = set.pairs[i].first;
    try {
      rows[i].solution = solver == SolverKind::dp
                             ? solve_dp(set.pairs[i].second, params)
                             : solve_pdp(set.pairs[i].second, params);
    } catch (const SirError& err) {
      rows[i].error = err.what();
    }
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < set.pairs.size(); ++i) mine_one(i);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= set.pairs.size()) return;
      mine_one(i);
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = std::min<unsigned>(
      threads, static_cast<unsigned>(set.pairs.size()));
  pool.reserve(count);
  for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return rows;
}

ActivityProfile interval_activity_scores(const std::vector<SirSolution>& solutions,
                                         int n, int w) {
  if (w < 1 || w > n)
    throw ParamError("activity window w=" + std::to_string(w) +
                     " outside [1," + std::to_string(n) + "]");
  if (solutions.empty())
    throw ParamError("activity scores need at least one solution");

  const int windows = n - w + 1;
  std::vector<long long> delta(static_cast<std::size_t>(windows) + 1, 0);
  for (const SirSolution& sol : solutions) {
    for (const Interval iv : sol.intervals) {
      if (iv.length() < w) continue;
      // Window starts fully covered by this interval: [iv.s, iv.e - w + 1].
      delta[iv.s] += 1;
      delta[iv.e - w + 2] -= 1;
    }
  }
  ActivityProfile profile;
  profile.window_len = w;
  profile.scores.resize(static_cast<std::size_t>(windows));
  long long covered = 0;
  for (int t = 0; t < windows; ++t) {
    covered += delta[t];
    profile.scores[t] =
        static_cast<double>(covered) / static_cast<double>(solutions.size());
  }
  return profile;
}

std::vector<std::pair<int, double>> top_anomalous_windows(
    const ActivityProfile& profile, int k) {
  if (k < 1) throw ParamError("top_anomalous_windows: k must be >= 1");
  std::vector<std::pair<int, double>> ranked;
  ranked.reserve(profile.scores.size());
  for (std::size_t t = 0; t < profile.scores.size(); ++t)
    ranked.push_back({static_cast<int>(t), profile.scores[t]});
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > static_cast<std::size_t>(k)) ranked.resize(k);
  return ranked;
}

}  // namespace sir
