#include "sir/solver_dp.hpp"

#include <algorithm>
#include <string>

#include "sir/measures.hpp"

namespace sir {

namespace detail {

void require_qualifying(MeasureKind kind) {
  if (!measure_qualifies(kind))
    throw MeasureNotQualified(std::string(measure_name(kind)) +
                              " is not a mining measure");
}

SirSolution solve_dp_range(const TimeSeriesPair& pair,
                           const MiningParams& params, int lo, int hi) {
  const MeasureKind m = params.measure;
  const double tau = params.tau;
  const int l_min = params.l_min;
  const int len = hi - lo + 1;

  // best[j] = optimal sum-length over the prefix [lo, lo+j-1];
  // take_s[j] = start of the interval ending the prefix, -1 for skip.
  std::vector<long long> best(static_cast<std::size_t>(len) + 1, 0);
  std::vector<int> take_s(static_cast<std::size_t>(len) + 1, -1);
  // acc[i] = running sum of point values over [lo+i, e], grown rightwards so
  // every (s, e) strength matches the canonical interval_value bit for bit.
  std::vector<double> acc(static_cast<std::size_t>(len), 0.0);

  for (int e = lo; e <= hi; ++e) {
    const int je = e - lo;
    const double pe = point_value(m, pair.x_at(e), pair.y_at(e));
    for (int i = 0; i < je; ++i) acc[i] += pe;
    acc[je] = pe;

    long long take_val = -1;
    int take_start = -1;
    // s scans right-to-left; >= keeps the smallest s among equal takes.
    for (int s = e - l_min + 1; s >= lo; --s) {
      const int l = e - s + 1;
      const double rel = acc[s - lo] / static_cast<double>(l);
      if (rel >= tau) {
        const long long cand = best[s - lo] + l;
        if (cand >= take_val) {
          take_val = cand;
          take_start = s;
        }
      }
    }
    if (take_val > best[je]) {  // skip preferred on equality
      best[je + 1] = take_val;
      take_s[je + 1] = take_start;
    } else {
      best[je + 1] = best[je];
      take_s[je + 1] = -1;
    }
  }

  SirSolution sol;
  sol.sum_length = best[len];
  for (int j = len; j > 0;) {
    if (take_s[j] < 0) {
      --j;
      continue;
    }
    const int s = take_s[j];
    sol.intervals.push_back({s, lo + j - 1});
    j = s - lo;
  }
  std::reverse(sol.intervals.begin(), sol.intervals.end());
  sol.strengths.reserve(sol.intervals.size());
  for (const Interval iv : sol.intervals)
    sol.strengths.push_back(interval_value(m, pair, iv));
  return sol;
}

}  // namespace detail

SirSolution solve_dp(const TimeSeriesPair& pair, const MiningParams& params) {
  validate_params(params, pair.n());
  detail::require_qualifying(params.measure);
  return detail::solve_dp_range(pair, params, 0, pair.n() - 1);
}

std::vector<std::pair<Interval, double>> enumerate_strong_intervals(
    const TimeSeriesPair& pair, const MiningParams& params) {
  validate_params(params, pair.n());
  detail::require_qualifying(params.measure);
  const int n = pair.n();
  std::vector<std::pair<Interval, double>> out;
  for (int s = 0; s < n; ++s) {
    RunningState st = make_state(params.measure, pair, s);
    for (int e = s; e < n; ++e) {
      if (e > s) st = extend_state(st, Direction::right, pair);
      if (e - s + 1 >= params.l_min && st.strength() >= params.tau)
        out.push_back({{s, e}, st.strength()});
    }
  }
  return out;
}

}  // namespace sir
