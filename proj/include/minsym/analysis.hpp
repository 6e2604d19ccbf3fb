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

#ifndef MINSYM_ANALYSIS_HPP_
#define MINSYM_ANALYSIS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace minsym {

inline constexpr double kDefaultEpsilon = 0.02;

// Accuracy as a function of the maximum message length L.
class AccuracyCurve {
 public:
  AccuracyCurve() = default;
  explicit AccuracyCurve(std::map<int, double> points, std::string source = "");

  const std::map<int, double>& points() const { return points_; }
  const std::string& source() const { return source_; }
  bool empty() const { return points_.empty(); }
  double max_accuracy() const;
  std::optional<double> at(int max_length) const;

 private:
  std::map<int, double> points_;
  std::string source_;
};

// Smallest L whose accuracy is within epsilon of the best accuracy on the
// curve: lengths beyond it buy no meaningful improvement.
int effective_symbols(const AccuracyCurve& curve,
                      double epsilon = kDefaultEpsilon);

// Best accuracy minus acc(L). Throws DomainError if L is not on the curve.
double accuracy_gap(const AccuracyCurve& curve, int max_length);

// One row of a curve file. Per-epoch files carry an epoch column.
struct CurveRow {
  int max_length = 0;
  double accuracy = 0.0;
  std::optional<int> epoch;
  std::optional<double> standard_error;
  std::optional<double> expected_accuracy;
  std::optional<std::int64_t> episodes;
};

struct CurveTable {
  std::string source;
  std::vector<CurveRow> rows;
};

// Comma-separated, header row first, optional "# source=<label>" comment.
// Required columns: max_len, accuracy. Optional: epoch, stderr,
// expected_accuracy, episodes.
void write_curve_table(std::ostream& out, const CurveTable& table);
CurveTable read_curve_table(std::istream& in);
CurveTable read_curve_table(const std::filesystem::path& path);

struct CurveSelection {
  std::string column = "accuracy";  // or "expected_accuracy"
  // For per-epoch tables; nullopt takes each L's last epoch.
  std::optional<int> epoch;
};

AccuracyCurve to_curve(const CurveTable& table,
                       const CurveSelection& selection = {});

struct MessageStats {
  std::int64_t total = 0;
  std::map<int, std::int64_t> length_histogram;
  std::map<int, std::int64_t> symbol_histogram;
  std::int64_t successes = 0;

  std::optional<int> modal_length() const;
};

// Reads an episode log (see game.hpp). Errors carry the 1-based line number.
MessageStats message_length_stats(std::istream& log);
MessageStats message_length_stats(const std::filesystem::path& path);

}  // namespace minsym

#endif  // MINSYM_ANALYSIS_HPP_
