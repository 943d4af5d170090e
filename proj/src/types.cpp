#include "sir/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sir/measures.hpp"

namespace sir {

bool measure_qualifies(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::ap:
    case MeasureKind::nap:
    case MeasureKind::mse:
      return true;
    case MeasureKind::pearson:
      return false;
  }
  return false;
}

std::string_view measure_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::ap:
      return "ap";
    case MeasureKind::nap:
      return "nap";
    case MeasureKind::mse:
      return "mse";
    case MeasureKind::pearson:
      return "pearson";
  }
  return "?";
}

std::optional<MeasureKind> measure_from_name(std::string_view name) {
  if (name == "ap") return MeasureKind::ap;
  if (name == "nap") return MeasureKind::nap;
  if (name == "mse") return MeasureKind::mse;
  if (name == "pearson") return MeasureKind::pearson;
  return std::nullopt;
}

TimeSeriesPair::TimeSeriesPair(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size())
    throw ParamError("time series pair: x and y lengths differ (" +
                     std::to_string(x_.size()) + " vs " +
                     std::to_string(y_.size()) + ")");
  if (x_.empty()) throw ParamError("time series pair: empty series");
  for (std::size_t t = 0; t < x_.size(); ++t) {
    if (!std::isfinite(x_[t]) || !std::isfinite(y_[t]))
      throw ParamError("time series pair: non-finite value at timestamp " +
                       std::to_string(t));
  }
}

TimeSeriesPair TimeSeriesPair::reversed() const {
  std::vector<double> rx(x_.rbegin(), x_.rend());
  std::vector<double> ry(y_.rbegin(), y_.rend());
  return TimeSeriesPair(std::move(rx), std::move(ry));
}

void validate_params(const MiningParams& params, int n) {
  if (params.l_min < 1)
    throw ParamError("l_min must be at least 1, got " +
                     std::to_string(params.l_min));
  if (params.l_min > n)
    throw ParamError("l_min=" + std::to_string(params.l_min) +
                     " exceeds series length n=" + std::to_string(n));
  if (!std::isfinite(params.tau)) throw ParamError("tau must be finite");
}

namespace {

std::string interval_text(Interval iv) {
  return "[" + std::to_string(iv.s) + "," + std::to_string(iv.e) + "]";
}

}  // namespace

std::vector<std::string> validate_solution(const SirSolution& sol,
                                           const TimeSeriesPair& pair,
                                           const MiningParams& params) {
  std::vector<std::string> violations;
  if (!measure_qualifies(params.measure)) {
    violations.push_back("measure: not a mining measure");
    return violations;
  }
  if (sol.strengths.size() != sol.intervals.size())
    violations.push_back("strengths_size: " +
                         std::to_string(sol.strengths.size()) + " strengths for " +
                         std::to_string(sol.intervals.size()) + " intervals");

  const int n = pair.n();
  long long covered = 0;
  for (std::size_t i = 0; i < sol.intervals.size(); ++i) {
    const Interval iv = sol.intervals[i];
    if (iv.s < 0 || iv.e < iv.s || iv.e >= n) {
      violations.push_back("out_of_bounds: interval " + interval_text(iv));
      continue;
    }
    covered += iv.length();
    if (i > 0) {
      const Interval prev = sol.intervals[i - 1];
      if (iv.s < prev.s)
        violations.push_back("unsorted: interval " + interval_text(iv) +
                             " after " + interval_text(prev));
      else if (iv.s <= prev.e)
        violations.push_back("overlap: intervals " + interval_text(prev) +
                             " and " + interval_text(iv) + " share timestamps");
    }
    if (iv.length() < params.l_min)
      violations.push_back("short_interval: " + interval_text(iv) +
                           " has length " + std::to_string(iv.length()) +
                           " < l_min " + std::to_string(params.l_min));
    const double rel = interval_value(params.measure, pair, iv);
    if (!(rel >= params.tau)) {
      std::ostringstream os;
      os << "weak_interval: " << interval_text(iv) << " strength " << rel
         << " < tau " << params.tau;
      violations.push_back(os.str());
    }
    if (i < sol.strengths.size() && std::abs(sol.strengths[i] - rel) > 1e-9) {
      std::ostringstream os;
      os << "strength_mismatch: " << interval_text(iv) << " recorded "
         << sol.strengths[i] << " recomputed " << rel;
      violations.push_back(os.str());
    }
  }
  if (covered != sol.sum_length)
    violations.push_back("sum_length_mismatch: recorded " +
                         std::to_string(sol.sum_length) + " covered " +
                         std::to_string(covered));
  return violations;
}

}  // namespace sir
