#include "sir/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sir {

namespace {

constexpr double kBetweennessTol = 1e-9;

void check_index(const TimeSeriesPair& pair, int t, const char* what) {
  if (t < 0 || t >= pair.n())
    throw BoundsError(std::string(what) + ": timestamp " + std::to_string(t) +
                      " outside [0," + std::to_string(pair.n() - 1) + "]");
}

}  // namespace

double point_value(MeasureKind kind, double xt, double yt) {
  switch (kind) {
    case MeasureKind::ap:
      return xt * yt;
    case MeasureKind::nap:
      return -(xt * yt);
    case MeasureKind::mse: {
      const double d = xt - yt;
      return -(d * d);
    }
    case MeasureKind::pearson:
      break;
  }
  throw MeasureNotQualified("pearson has no per-timestamp value");
}

RunningState make_state(MeasureKind kind, const TimeSeriesPair& pair, int t) {
  check_index(pair, t, "make_state");
  return RunningState{kind, t, t, point_value(kind, pair.x_at(t), pair.y_at(t))};
}

RunningState extend_state(const RunningState& state, Direction dir,
                          const TimeSeriesPair& pair) {
  RunningState out = state;
  if (dir == Direction::right) {
    check_index(pair, state.e + 1, "extend_state right");
    out.e = state.e + 1;
    out.acc = state.acc + point_value(state.measure, pair.x_at(out.e),
                                      pair.y_at(out.e));
  } else {
    check_index(pair, state.s - 1, "extend_state left");
    out.s = state.s - 1;
    out.acc = state.acc + point_value(state.measure, pair.x_at(out.s),
                                      pair.y_at(out.s));
  }
  return out;
}

double interval_value(MeasureKind kind, const TimeSeriesPair& pair,
                      Interval iv) {
  if (iv.s > iv.e)
    throw BoundsError("interval_value: start " + std::to_string(iv.s) +
                      " exceeds end " + std::to_string(iv.e));
  check_index(pair, iv.s, "interval_value");
  check_index(pair, iv.e, "interval_value");
  double acc = point_value(kind, pair.x_at(iv.s), pair.y_at(iv.s));
  for (int t = iv.s + 1; t <= iv.e; ++t)
    acc += point_value(kind, pair.x_at(t), pair.y_at(t));
  return acc / static_cast<double>(iv.length());
}

BetweennessCheck check_betweenness(MeasureKind kind, const TimeSeriesPair& pair,
                                   int s, int m, int e) {
  if (!(s <= m && m < e))
    throw BoundsError("check_betweenness: need s <= m < e, got s=" +
                      std::to_string(s) + " m=" + std::to_string(m) +
                      " e=" + std::to_string(e));
  BetweennessCheck res;
  res.s = s;
  res.m = m;
  res.e = e;
  res.left_value = interval_value(kind, pair, {s, m});
  res.right_value = interval_value(kind, pair, {m + 1, e});
  res.union_value = interval_value(kind, pair, {s, e});
  const double lo = std::min(res.left_value, res.right_value);
  const double hi = std::max(res.left_value, res.right_value);
  res.ok = res.union_value >= lo - kBetweennessTol &&
           res.union_value <= hi + kBetweennessTol;
  return res;
}

double pearson_full(const TimeSeriesPair& pair) {
  const int n = pair.n();
  if (n < 2) throw DegenerateError("pearson: series of length 1 is constant");
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (int t = 0; t < n; ++t) {
    mean_x += pair.x_at(t);
    mean_y += pair.y_at(t);
  }
  mean_x /= n;
  mean_y /= n;
  double var_x = 0.0;
  double var_y = 0.0;
  double cov = 0.0;
  for (int t = 0; t < n; ++t) {
    const double dx = pair.x_at(t) - mean_x;
    const double dy = pair.y_at(t) - mean_y;
    var_x += dx * dx;
    var_y += dy * dy;
    cov += dx * dy;
  }
  if (var_x == 0.0) throw DegenerateError("pearson: x series is constant");
  if (var_y == 0.0) throw DegenerateError("pearson: y series is constant");
  const double r = cov / std::sqrt(var_x * var_y);
  return std::clamp(r, -1.0, 1.0);
}

}  // namespace sir
