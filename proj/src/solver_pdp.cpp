#include "sir/solver_pdp.hpp"

#include <algorithm>

#include "sir/measures.hpp"
#include "sir/solver_dp.hpp"

namespace sir {

namespace {

// flags[t] for t in [0, n]: no strong interval ends at t-1. The extra
// virtual slot at t=n makes the reversed mapping for right-weakness exact.
std::vector<bool> left_weak_flags_extended(const TimeSeriesPair& pair,
                                           MeasureKind kind, double tau,
                                           ScanStats* stats) {
  const int n = pair.n();
  std::vector<bool> weak(static_cast<std::size_t>(n) + 1, false);
  weak[0] = true;  // nothing ends left of the first timestamp
  std::size_t evals = 0;
  int s = 0;
  while (s < n) {
    RunningState st = make_state(kind, pair, s);
    ++evals;
    if (st.strength() < tau) {
      weak[s + 1] = true;  // weak singleton carries weakness one step right
      ++s;
      continue;
    }
    // Strong streak anchored at s: every timestamp while the prefix stays
    // strong has a strong interval ending just before it.
    int e = s;
    bool turned_weak = false;
    while (e + 1 < n) {
      st = extend_state(st, Direction::right, pair);
      ++evals;
      ++e;
      if (st.strength() < tau) {
        turned_weak = true;
        break;
      }
    }
    if (!turned_weak) break;  // streak ran off the right edge
    weak[e + 1] = true;       // first timestamp past the weak end
    s = e + 1;
  }
  if (stats) stats->point_evals += evals;
  return weak;
}

}  // namespace

std::vector<bool> left_weak_scan(const TimeSeriesPair& pair, MeasureKind kind,
                                 double tau, ScanStats* stats) {
  detail::require_qualifying(kind);
  std::vector<bool> flags = left_weak_flags_extended(pair, kind, tau, stats);
  flags.pop_back();
  return flags;
}

std::vector<bool> right_weak_scan(const TimeSeriesPair& pair, MeasureKind kind,
                                  double tau, ScanStats* stats) {
  detail::require_qualifying(kind);
  const int n = pair.n();
  const std::vector<bool> rev =
      left_weak_flags_extended(pair.reversed(), kind, tau, stats);
  std::vector<bool> out(static_cast<std::size_t>(n));
  // An interval beginning at t maps to one ending at n-1-t in the reversed
  // pair, so right-weakness at t is left-weakness at n-t there.
  for (int t = 0; t < n; ++t) out[t] = rev[n - t];
  return out;
}

std::vector<int> partition_points(const std::vector<bool>& left_weak,
                                  const std::vector<bool>& right_weak) {
  if (left_weak.size() != right_weak.size())
    throw ParamError("partition_points: flag lengths differ");
  std::vector<int> cuts;
  const int n = static_cast<int>(left_weak.size());
  for (int t = 1; t < n; ++t)
    if (left_weak[t] && right_weak[t]) cuts.push_back(t);
  return cuts;
}

WeaknessProfile weakness_profile(const TimeSeriesPair& pair, MeasureKind kind,
                                 double tau, ScanStats* stats) {
  WeaknessProfile profile;
  profile.left_weak = left_weak_scan(pair, kind, tau, stats);
  profile.right_weak = right_weak_scan(pair, kind, tau, stats);
  profile.partition_points =
      partition_points(profile.left_weak, profile.right_weak);
  return profile;
}

PdpDetail solve_pdp_detailed(const TimeSeriesPair& pair,
                             const MiningParams& params) {
  validate_params(params, pair.n());
  detail::require_qualifying(params.measure);

  PdpDetail out;
  out.profile = weakness_profile(pair, params.measure, params.tau);

  const int n = pair.n();
  int lo = 0;
  auto solve_segment = [&](int seg_lo, int seg_hi) {
    const int seg_len = seg_hi - seg_lo + 1;
    out.max_segment_len = std::max(out.max_segment_len, seg_len);
    if (seg_len < params.l_min) return;  // cannot hold a qualifying interval
    SirSolution part = detail::solve_dp_range(pair, params, seg_lo, seg_hi);
    out.solution.intervals.insert(out.solution.intervals.end(),
                                  part.intervals.begin(), part.intervals.end());
    out.solution.strengths.insert(out.solution.strengths.end(),
                                  part.strengths.begin(), part.strengths.end());
    out.solution.sum_length += part.sum_length;
  };
  for (const int cut : out.profile.partition_points) {
    solve_segment(lo, cut - 1);
    lo = cut;
  }
  solve_segment(lo, n - 1);
  return out;
}

SirSolution solve_pdp(const TimeSeriesPair& pair, const MiningParams& params) {
  return solve_pdp_detailed(pair, params).solution;
}

}  // namespace sir
