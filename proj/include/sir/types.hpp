#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sir/errors.hpp"

namespace sir {

/// Inclusive timestamp range [s, e], 0-based.
struct Interval {
  int s = 0;
  int e = 0;

  int length() const { return e - s + 1; }
  bool contains(int t) const { return s <= t && t <= e; }
  bool overlaps(const Interval& o) const { return s <= o.e && o.s <= e; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class MeasureKind { ap, nap, mse, pearson };

/// True for measures the interval solvers accept: per-timestamp evaluation,
/// constant-time extension, betweenness. Pearson is full-length only and
/// does not qualify.
bool measure_qualifies(MeasureKind kind);

std::string_view measure_name(MeasureKind kind);
std::optional<MeasureKind> measure_from_name(std::string_view name);

/// Two aligned series of equal length N >= 1; every value finite.
class TimeSeriesPair {
 public:
  TimeSeriesPair(std::vector<double> x, std::vector<double> y);

  int n() const { return static_cast<int>(x_.size()); }
  std::span<const double> x() const { return x_; }
  std::span<const double> y() const { return y_; }
  double x_at(int t) const { return x_[static_cast<std::size_t>(t)]; }
  double y_at(int t) const { return y_[static_cast<std::size_t>(t)]; }

  TimeSeriesPair reversed() const;

 private:
  std::vector<double> x_;
  std::vector<double> y_;
};

struct MiningParams {
  MeasureKind measure = MeasureKind::ap;
  double tau = 1.0;  // strength threshold, canonical "higher is stronger"
  int l_min = 1;     // minimum interval length in timestamps
};

/// A set of selected intervals with their strengths and the sum-length
/// objective value. Intervals are sorted by start and pairwise disjoint.
struct SirSolution {
  std::vector<Interval> intervals;
  std::vector<double> strengths;
  long long sum_length = 0;
};

/// Throws ParamError unless 1 <= l_min <= n and tau is finite.
void validate_params(const MiningParams& params, int n);

/// Recomputes every solution invariant against the pair and params; returns
/// the list of violated clauses (empty means the solution is a valid SIR).
/// Violations are data, not errors.
std::vector<std::string> validate_solution(const SirSolution& sol,
                                           const TimeSeriesPair& pair,
                                           const MiningParams& params);

}  // namespace sir
