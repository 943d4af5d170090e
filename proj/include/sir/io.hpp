#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sir/types.hpp"

namespace sir {

/// A table of equal-length named series parsed from CSV. The leading `t`
/// column is positional bookkeeping and is not stored.
struct Dataset {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  int n = 0;

  const std::vector<double>& column(std::string_view name) const;
};

/// CSV format: header row, first column named `t`, remaining columns
/// numeric. Throws FormatError naming the offending row and column.
Dataset load_csv(std::istream& in);
Dataset load_csv_file(const std::string& path);

/// Writes the dataset back with t = 0..n-1 and shortest round-trip decimal
/// text for each value, so load(write(ds)) reproduces the exact doubles.
void write_csv(std::ostream& out, const Dataset& ds);
void write_csv_file(const std::string& path, const Dataset& ds);

enum class StandardizeMode { none, zscore, monthly_anomaly };

std::optional<StandardizeMode> standardize_mode_from_name(std::string_view name);

/// zscore: subtract the mean, divide by the population (divide-by-n)
/// standard deviation. monthly_anomaly: subtract each month-of-year mean
/// (phase = t mod 12, partial final year allowed), then zscore.
/// Throws DegenerateError on zero variance.
std::vector<double> standardize(std::span<const double> series,
                                StandardizeMode mode);

struct PlantedWindow {
  Interval window;
  int polarity = +1;  // +1: strong under ap; -1: strong under nap
};

struct SynthSpec {
  int n = 0;
  std::vector<PlantedWindow> planted;
  double background_amplitude = 0.2;
  double planted_margin = 0.5;
  std::uint64_t seed = 0;
};

struct SynthResult {
  TimeSeriesPair pair;
  std::vector<PlantedWindow> truth;
};

/// Deterministic-in-seed pair with known ground truth. Inside a planted
/// window the pointwise product is exactly tau + planted_margin (sign per
/// polarity); ordinary background points keep |x*y| <= background_amplitude.
/// The timestamps flanking each window carry a strongly opposing product
/// (strength far below tau, sized against the total planted mass) so no
/// strong interval can extend past a window edge or bridge two windows —
/// a bounded-amplitude flank cannot do this, since the mean of a strong
/// window dilutes too slowly. Windows separated by at least one timestamp
/// are therefore recovered exactly by the solvers.
SynthResult generate_synthetic(const SynthSpec& spec, double tau);

struct BenchRow {
  int length = 0;
  int pairs = 0;
  double dp_total_ms = 0.0;
  double pdp_total_ms = 0.0;
  int max_partition_k = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double dp_slope = 0.0;   // least-squares log(time) vs log(length)
  double pdp_slope = 0.0;
};

/// Times both solvers over batches of synthetic pairs with planted density
/// fixed per length (so the largest partition stays length-independent).
/// Wall clock covers solver calls only, single-threaded; one warm-up pass
/// per length is discarded; `reps` identical repetitions per measurement
/// stabilize short timings without affecting the fitted slopes.
BenchReport run_benchmark(const std::vector<int>& lengths, int pairs_per_length,
                          const MiningParams& params, std::uint64_t seed,
                          int reps = 25);

void write_bench_csv(std::ostream& out, const BenchReport& report);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

}  // namespace sir
