#pragma once

#include <cstddef>
#include <vector>

#include "sir/types.hpp"

namespace sir {

/// Counts point-value evaluations performed by a scan. Each scan touches
/// every timestamp at most once, so both scans together stay within
/// 2N + O(1) evaluations.
struct ScanStats {
  std::size_t point_evals = 0;
};

/// left_weak[t] is true iff no strong interval ends at t-1 (vacuously true
/// at t=0). Single left-to-right pass: weak singletons propagate weakness
/// one step; a strong streak anchored at s marks its interior not-left-weak
/// and the first timestamp past its weak end left-weak again.
std::vector<bool> left_weak_scan(const TimeSeriesPair& pair, MeasureKind kind,
                                 double tau, ScanStats* stats = nullptr);

/// right_weak[t] is true iff no strong interval begins at t; the exact
/// mirror of left_weak_scan run on the reversed pair.
std::vector<bool> right_weak_scan(const TimeSeriesPair& pair, MeasureKind kind,
                                  double tau, ScanStats* stats = nullptr);

/// Cut positions t in [1, N-1] satisfying both weakness conditions; no
/// strong interval can cross such a t.
std::vector<int> partition_points(const std::vector<bool>& left_weak,
                                  const std::vector<bool>& right_weak);

struct WeaknessProfile {
  std::vector<bool> left_weak;
  std::vector<bool> right_weak;
  std::vector<int> partition_points;
};

WeaknessProfile weakness_profile(const TimeSeriesPair& pair, MeasureKind kind,
                                 double tau, ScanStats* stats = nullptr);

/// Partitioned solver: weakness scans, safe cuts, independent DP per
/// segment. Returns the same optimum (and set, by shared tie-breaking)
/// as solve_dp on the full series.
SirSolution solve_pdp(const TimeSeriesPair& pair, const MiningParams& params);

struct PdpDetail {
  SirSolution solution;
  WeaknessProfile profile;
  int max_segment_len = 0;  // length of the largest partition
};

PdpDetail solve_pdp_detailed(const TimeSeriesPair& pair,
                             const MiningParams& params);

}  // namespace sir
