#pragma once

#include "sir/types.hpp"

namespace sir {

/// Strength contribution of a single timestamp. MSE is exposed negated, so
/// rel >= tau means "strong" for every measure. Throws MeasureNotQualified
/// for measures without a per-timestamp form (pearson).
double point_value(MeasureKind kind, double xt, double yt);

/// Running sum of point values over [s, e]; strength() is their mean.
/// A plain value type, freely copyable between threads.
struct RunningState {
  MeasureKind measure = MeasureKind::ap;
  int s = 0;
  int e = 0;
  double acc = 0.0;

  double strength() const { return acc / static_cast<double>(e - s + 1); }
};

/// State for the singleton interval [t, t].
RunningState make_state(MeasureKind kind, const TimeSeriesPair& pair, int t);

enum class Direction { left, right };

/// One-step O(1) extension of the interval. Throws BoundsError at the
/// series edges.
RunningState extend_state(const RunningState& state, Direction dir,
                          const TimeSeriesPair& pair);

/// Canonical evaluator: mean of point values accumulated left-to-right
/// from s. All solvers route their threshold decisions through this
/// accumulation order, so an identical (s, e) yields a bit-identical
/// strength everywhere.
double interval_value(MeasureKind kind, const TimeSeriesPair& pair,
                      Interval iv);

struct BetweennessCheck {
  bool ok = true;
  int s = 0;
  int m = 0;
  int e = 0;
  double left_value = 0.0;   // rel[s, m]
  double right_value = 0.0;  // rel[m+1, e]
  double union_value = 0.0;  // rel[s, e]
};

/// Verifies min(rel[s,m], rel[m+1,e]) - 1e-9 <= rel[s,e] <= max(...) + 1e-9
/// and reports the values either way. Requires s <= m < e.
BetweennessCheck check_betweenness(MeasureKind kind, const TimeSeriesPair& pair,
                                   int s, int m, int e);

/// Full-length Pearson correlation, clamped to [-1, 1]. Throws
/// DegenerateError for constant (zero-variance) series.
double pearson_full(const TimeSeriesPair& pair);

}  // namespace sir
