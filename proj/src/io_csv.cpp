#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "sir/io.hpp"

namespace sir {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

const std::vector<double>& Dataset::column(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return columns[i];
  throw FormatError("no series named '" + std::string(name) + "' in dataset");
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (const char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}

double parse_cell(const std::string& cell, int row, const std::string& col) {
  const auto where = [&] {
    return "row " + std::to_string(row) + ", column " + col;
  };
  if (cell.empty()) throw FormatError(where() + ": empty cell");
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last)
    throw FormatError(where() + ": not a number: '" + cell + "'");
  if (!std::isfinite(value))
    throw FormatError(where() + ": non-finite value: '" + cell + "'");
  return value;
}

}  // namespace

Dataset load_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty input");
  const std::vector<std::string> header = split_row(line);
  if (header.empty() || header[0] != "t")
    throw FormatError("first header column must be 't'");
  if (header.size() < 2) throw FormatError("no series columns in header");

  Dataset ds;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 1; i < header.size(); ++i) {
    if (header[i].empty()) throw FormatError("empty series name in header");
    if (!seen.insert(header[i]).second)
      throw FormatError("duplicate series name '" + header[i] + "'");
    ds.names.push_back(header[i]);
  }
  ds.columns.resize(ds.names.size());

  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> cells = split_row(line);
    if (cells.size() != header.size())
      throw FormatError("row " + std::to_string(row) + ": expected " +
                        std::to_string(header.size()) + " cells, got " +
                        std::to_string(cells.size()));
    for (std::size_t i = 1; i < cells.size(); ++i)
      ds.columns[i - 1].push_back(parse_cell(cells[i], row, ds.names[i - 1]));
  }
  ds.n = ds.columns.empty() ? 0 : static_cast<int>(ds.columns[0].size());
  if (ds.n == 0) throw FormatError("no data rows");
  return ds;
}

Dataset load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return load_csv(in);
}

void write_csv(std::ostream& out, const Dataset& ds) {
  out << "t";
  for (const auto& name : ds.names) out << ',' << name;
  out << '\n';
  for (int t = 0; t < ds.n; ++t) {
    out << t;
    for (const auto& col : ds.columns)
      out << ',' << format_double(col[static_cast<std::size_t>(t)]);
    out << '\n';
  }
}

void write_csv_file(const std::string& path, const Dataset& ds) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  write_csv(out, ds);
}

std::optional<StandardizeMode> standardize_mode_from_name(std::string_view name) {
  if (name == "none") return StandardizeMode::none;
  if (name == "zscore") return StandardizeMode::zscore;
  if (name == "monthly") return StandardizeMode::monthly_anomaly;
  return std::nullopt;
}

namespace {

std::vector<double> zscore(std::span<const double> series) {
  const std::size_t n = series.size();
  double mean = 0.0;
  for (const double v : series) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (const double v : series) {
    const double d = v - mean;
    var += d * d;
  }
  var /= static_cast<double>(n);  // population variance
  if (var == 0.0) throw DegenerateError("zscore: constant series");
  const double sd = std::sqrt(var);
  std::vector<double> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = (series[t] - mean) / sd;
  return out;
}

}  // namespace

std::vector<double> standardize(std::span<const double> series,
                                StandardizeMode mode) {
  if (series.empty()) throw ParamError("standardize: empty series");
  switch (mode) {
    case StandardizeMode::none:
      return std::vector<double>(series.begin(), series.end());
    case StandardizeMode::zscore:
      return zscore(series);
    case StandardizeMode::monthly_anomaly: {
      std::vector<double> anomaly(series.begin(), series.end());
      for (int phase = 0; phase < 12; ++phase) {
        double sum = 0.0;
        int count = 0;
        for (std::size_t t = phase; t < series.size(); t += 12) {
          sum += series[t];
          ++count;
        }
        if (count == 0) continue;  // series shorter than a year
        const double mean = sum / count;
        for (std::size_t t = phase; t < series.size(); t += 12)
          anomaly[t] -= mean;
      }
      return zscore(anomaly);
    }
  }
  throw ParamError("standardize: unknown mode");
}

}  // namespace sir
