// Copyright 2026 The minsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "minsym/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "minsym/errors.hpp"
#include "minsym/game.hpp"

namespace minsym {

namespace {

// Absorbs rounding when comparing accuracies that differ by exactly epsilon.
constexpr double kSlack = 1e-12;

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos
                         ? std::string()
                         : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T parse_number(const std::string& text, const std::string& where) {
  T value{};
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if constexpr (std::is_floating_point_v<T>) {
    // from_chars for double is missing on older libstdc++.
    char* parsed_end = nullptr;
    value = std::strtod(text.c_str(), &parsed_end);
    if (text.empty() || parsed_end != text.c_str() + text.size()) {
      throw FormatError(where + "not a number: \"" + text + "\"");
    }
  } else {
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw FormatError(where + "not an integer: \"" + text + "\"");
    }
  }
  return value;
}

}  // namespace

AccuracyCurve::AccuracyCurve(std::map<int, double> points, std::string source)
    : points_(std::move(points)), source_(std::move(source)) {
  for (const auto& [length, accuracy] : points_) {
    if (length < 1) throw DomainError("curve lengths must be >= 1");
    if (!(accuracy >= 0.0 && accuracy <= 1.0)) {
      throw DomainError("curve accuracy at L=" + std::to_string(length) +
                        " outside [0, 1]");
    }
  }
}

double AccuracyCurve::max_accuracy() const {
  if (points_.empty()) throw DomainError("empty accuracy curve");
  double best = 0.0;
  for (const auto& [length, accuracy] : points_) best = std::max(best, accuracy);
  return best;
}

std::optional<double> AccuracyCurve::at(int max_length) const {
  const auto it = points_.find(max_length);
  if (it == points_.end()) return std::nullopt;
  return it->second;
}

int effective_symbols(const AccuracyCurve& curve, double epsilon) {
  if (curve.empty()) throw DomainError("empty accuracy curve");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw DomainError("epsilon must be in [0, 1)");
  }
  const double threshold = curve.max_accuracy() - epsilon;
  for (const auto& [length, accuracy] : curve.points()) {
    if (accuracy + kSlack >= threshold) return length;
  }
  return curve.points().rbegin()->first;
}

double accuracy_gap(const AccuracyCurve& curve, int max_length) {
  const auto value = curve.at(max_length);
  if (!value) {
    throw DomainError("max length " + std::to_string(max_length) +
                      " is not on the curve");
  }
  return std::max(0.0, curve.max_accuracy() - *value);
}

void write_curve_table(std::ostream& out, const CurveTable& table) {
  const auto& rows = table.rows;
  const bool epoch = std::any_of(rows.begin(), rows.end(), [](const CurveRow& r) { return r.epoch.has_value(); });
  const bool se = std::any_of(rows.begin(), rows.end(), [](const CurveRow& r) { return r.standard_error.has_value(); });
  const bool expected = std::any_of(rows.begin(), rows.end(), [](const CurveRow& r) { return r.expected_accuracy.has_value(); });
  const bool episodes = std::any_of(rows.begin(), rows.end(), [](const CurveRow& r) { return r.episodes.has_value(); });
  if (!table.source.empty()) out << "# source=" << table.source << '\n';
  if (epoch) out << "epoch,";
  out << "max_len,accuracy";
  if (se) out << ",stderr";
  if (expected) out << ",expected_accuracy";
  if (episodes) out << ",episodes";
  out << '\n';
  const auto old_precision = out.precision(17);
  for (const auto& r : rows) {
    if (epoch) out << r.epoch.value_or(0) << ',';
    out << r.max_length << ',' << r.accuracy;
    if (se) out << ',' << r.standard_error.value_or(0.0);
    if (expected) out << ',' << r.expected_accuracy.value_or(0.0);
    if (episodes) out << ',' << r.episodes.value_or(0);
    out << '\n';
  }
  out.precision(old_precision);
}

CurveTable read_curve_table(std::istream& in) {
  CurveTable table;
  std::vector<std::string> header;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kSource = "# source=";
      if (line.rfind(kSource, 0) == 0) table.source = line.substr(kSource.size());
      continue;
    }
    const std::string where = "curve line " + std::to_string(line_no) + ": ";
    auto fields = split_csv(line);
    if (header.empty()) {
      header = std::move(fields);
      if (std::find(header.begin(), header.end(), "max_len") == header.end() ||
          std::find(header.begin(), header.end(), "accuracy") == header.end()) {
        throw FormatError(where + "header must name max_len and accuracy");
      }
      continue;
    }
    if (fields.size() != header.size()) {
      throw FormatError(where + "expected " + std::to_string(header.size()) +
                        " fields, found " + std::to_string(fields.size()));
    }
    CurveRow row;
    for (std::size_t i = 0; i < header.size(); ++i) {
      const auto& name = header[i];
      const auto& value = fields[i];
      if (name == "max_len") {
        row.max_length = parse_number<int>(value, where);
      } else if (name == "accuracy") {
        row.accuracy = parse_number<double>(value, where);
      } else if (name == "epoch") {
        row.epoch = parse_number<int>(value, where);
      } else if (name == "stderr") {
        row.standard_error = parse_number<double>(value, where);
      } else if (name == "expected_accuracy") {
        row.expected_accuracy = parse_number<double>(value, where);
      } else if (name == "episodes") {
        row.episodes = parse_number<std::int64_t>(value, where);
      }
    }
    if (row.max_length < 1) throw FormatError(where + "max_len must be >= 1");
    table.rows.push_back(row);
  }
  if (header.empty()) throw FormatError("curve file has no header row");
  return table;
}

CurveTable read_curve_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return read_curve_table(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what(), e.kind());
  }
}

AccuracyCurve to_curve(const CurveTable& table, const CurveSelection& selection) {
  if (selection.column != "accuracy" &&
      selection.column != "expected_accuracy") {
    throw InvalidArgument("unknown curve column \"" + selection.column + "\"");
  }
  std::map<int, std::pair<int, double>> latest;  // L -> (epoch, value)
  for (const auto& row : table.rows) {
    const int epoch = row.epoch.value_or(0);
    if (selection.epoch && epoch != *selection.epoch) continue;
    double value = row.accuracy;
    if (selection.column == "expected_accuracy") {
      if (!row.expected_accuracy) {
        throw FormatError("curve has no expected_accuracy column");
      }
      value = *row.expected_accuracy;
    }
    auto [it, inserted] = latest.try_emplace(row.max_length, epoch, value);
    if (!inserted) {
      if (epoch == it->second.first) {
        throw FormatError("duplicate row for max_len " +
                          std::to_string(row.max_length));
      }
      if (epoch > it->second.first) it->second = {epoch, value};
    }
  }
  std::map<int, double> points;
  for (const auto& [length, ev] : latest) points[length] = ev.second;
  return AccuracyCurve(std::move(points), table.source);
}

std::optional<int> MessageStats::modal_length() const {
  std::optional<int> mode;
  std::int64_t best = 0;
  for (const auto& [length, count] : length_histogram) {
    if (count > best) {
      best = count;
      mode = length;
    }
  }
  return mode;
}

MessageStats message_length_stats(std::istream& log) {
  MessageStats stats;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(log, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    EpisodeLogRecord rec;
    try {
      rec = parse_episode_log_line(line);
    } catch (const FormatError& e) {
      throw FormatError("log line " + std::to_string(line_no) + ": " + e.what());
    }
    ++stats.total;
    ++stats.length_histogram[static_cast<int>(rec.symbols.size())];
    for (int s : rec.symbols) ++stats.symbol_histogram[s];
    if (rec.success) ++stats.successes;
  }
  return stats;
}

MessageStats message_length_stats(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return message_length_stats(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what(), e.kind());
  }
}

}  // namespace minsym
