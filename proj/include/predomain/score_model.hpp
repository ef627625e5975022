#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace predomain {

// Which semantic class sits on the low-score side of the axis.
enum class Polarity { genuine_low, genuine_high };

// Position of a class on the score axis after polarity mapping.
enum class ScoreClass { lower, upper };

enum class InputFormat { csv, json };

std::string_view to_string(Polarity polarity);
Polarity parse_polarity(std::string_view text);

// Raised for anything wrong with the input data itself. `line` is 1-based
// (the record index for JSON); 0 when no single line is to blame.
class DataError : public std::runtime_error {
 public:
  DataError(std::string source, std::size_t line, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string detail_;
};

// Maps raw label tokens to axis classes. With genuine_low the live token
// lands in the lower class.
struct LabelMapping {
  std::string live_token = "live";
  std::string fake_token = "fake";
  Polarity polarity = Polarity::genuine_low;

  // Throws std::invalid_argument on an unknown token.
  ScoreClass class_of(std::string_view token) const;
  const std::string& token_for(ScoreClass cls) const;
};

struct ScoreRecord {
  std::string id;
  double score = 0.0;
  ScoreClass label = ScoreClass::lower;
};

// Ascending, finite, non-empty score vector for one class.
class ClassScores {
 public:
  // Throws std::invalid_argument for empty input or non-finite values.
  static ClassScores from_unsorted(std::vector<double> raw);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

  friend bool operator==(const ClassScores&, const ClassScores&) = default;

 private:
  explicit ClassScores(std::vector<double> sorted) : values_(std::move(sorted)) {}
  std::vector<double> values_;
};

ClassScores sort_scores(std::vector<double> raw);

struct LabeledDataset {
  ClassScores lower;
  ClassScores upper;
  Polarity polarity = Polarity::genuine_low;

  const ClassScores& genuine() const {
    return polarity == Polarity::genuine_low ? lower : upper;
  }
  const ClassScores& attack() const {
    return polarity == Polarity::genuine_low ? upper : lower;
  }
  // max(lower) <= min(upper)
  bool separable() const { return lower.max() <= upper.min(); }

  friend bool operator==(const LabeledDataset&, const LabeledDataset&) = default;
};

InputFormat format_from_path(std::string_view path);

// Parses records without requiring both classes to be present. Lines that
// are blank or start with '#' are skipped in CSV; a header row
// `id,score,label` is optional.
std::vector<ScoreRecord> parse_records(std::string_view text, InputFormat format,
                                       const LabelMapping& mapping,
                                       std::string_view source = "<input>");

// Throws DataError if either class ends up empty.
LabeledDataset partition(std::span<const ScoreRecord> records, Polarity polarity,
                         std::string_view source = "<input>");

LabeledDataset ingest(std::string_view text, InputFormat format,
                      const LabelMapping& mapping,
                      std::string_view source = "<input>");

// Emits ids `lower-<i>` / `upper-<i>` so that ingest(serialize(d)) == d.
std::string serialize(const LabeledDataset& data, InputFormat format,
                      const LabelMapping& mapping);

std::string read_file(const std::string& path);

}  // namespace predomain
