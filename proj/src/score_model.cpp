#include "predomain/score_model.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace predomain {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

// Full-field parse; accepts "nan"/"inf" so the caller can report them as
// non-finite rather than malformed.
bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::vector<ScoreRecord> parse_csv(std::string_view text, const LabelMapping& mapping,
                                   std::string_view source) {
  std::vector<ScoreRecord> records;
  std::size_t line_no = 0;
  bool first_row = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_fields(line);
    if (fields.size() != 3) {
      throw DataError(std::string(source), line_no,
                      "malformed row at line " + std::to_string(line_no) + ": expected 3 fields, got " +
                          std::to_string(fields.size()));
    }
    double score = 0.0;
    const bool numeric = parse_double(fields[1], score);
    if (first_row) {
      first_row = false;
      if (!numeric && iequals(fields[1], "score")) continue;
    }
    if (!numeric) {
      throw DataError(std::string(source), line_no,
                      "malformed row at line " + std::to_string(line_no) + ": score '" +
                          std::string(fields[1]) + "' is not a number");
    }
    if (!std::isfinite(score)) {
      throw DataError(std::string(source), line_no,
                      "non-finite score at line " + std::to_string(line_no));
    }
    ScoreClass label;
    try {
      label = mapping.class_of(fields[2]);
    } catch (const std::invalid_argument& e) {
      throw DataError(std::string(source), line_no,
                      std::string(e.what()) + " at line " + std::to_string(line_no));
    }
    records.push_back({std::string(fields[0]), score, label});
  }
  return records;
}

std::vector<ScoreRecord> parse_json(std::string_view text, const LabelMapping& mapping,
                                    std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string(source), 0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw DataError(std::string(source), 0, "expected a JSON array of score records");
  }
  std::vector<ScoreRecord> records;
  records.reserve(doc.size());
  std::size_t index = 0;
  for (const auto& item : doc) {
    ++index;
    const auto where = " in record " + std::to_string(index);
    if (!item.is_object() || !item.contains("id") || !item.contains("score") ||
        !item.contains("label") || !item["id"].is_string() || !item["label"].is_string()) {
      throw DataError(std::string(source), index, "malformed record" + where);
    }
    // nlohmann rejects NaN/Infinity literals at parse time; strings such as
    // "NaN" end up here.
    const auto& score_field = item["score"];
    double score = 0.0;
    if (score_field.is_number()) {
      score = score_field.get<double>();
    } else if (score_field.is_string() &&
               parse_double(score_field.get_ref<const std::string&>(), score)) {
      if (std::isfinite(score)) {
        throw DataError(std::string(source), index, "malformed record" + where + ": score is a string");
      }
    } else {
      throw DataError(std::string(source), index, "malformed record" + where + ": score is not a number");
    }
    if (!std::isfinite(score)) {
      throw DataError(std::string(source), index, "non-finite score" + where);
    }
    ScoreClass label;
    try {
      label = mapping.class_of(item["label"].get_ref<const std::string&>());
    } catch (const std::invalid_argument& e) {
      throw DataError(std::string(source), index, std::string(e.what()) + where);
    }
    records.push_back({item["id"].get<std::string>(), score, label});
  }
  return records;
}

std::string format_exact(double v) {
  char buf[32];
  return {buf, std::to_chars(buf, buf + sizeof buf, v).ptr};
}

}  // namespace

std::string_view to_string(Polarity polarity) {
  return polarity == Polarity::genuine_low ? "genuine-low" : "genuine-high";
}

Polarity parse_polarity(std::string_view text) {
  if (text == "genuine-low") return Polarity::genuine_low;
  if (text == "genuine-high") return Polarity::genuine_high;
  throw std::invalid_argument("unknown polarity '" + std::string(text) + "'");
}

DataError::DataError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " +
                         message),
      source_(std::move(source)),
      line_(line),
      detail_(message) {}

ScoreClass LabelMapping::class_of(std::string_view token) const {
  const bool genuine_low = polarity == Polarity::genuine_low;
  if (token == live_token) return genuine_low ? ScoreClass::lower : ScoreClass::upper;
  if (token == fake_token) return genuine_low ? ScoreClass::upper : ScoreClass::lower;
  throw std::invalid_argument("unknown label token '" + std::string(token) + "'");
}

const std::string& LabelMapping::token_for(ScoreClass cls) const {
  const bool lower_is_live = polarity == Polarity::genuine_low;
  return (cls == ScoreClass::lower) == lower_is_live ? live_token : fake_token;
}

ClassScores ClassScores::from_unsorted(std::vector<double> raw) {
  if (raw.empty()) throw std::invalid_argument("score vector is empty");
  for (double v : raw) {
    if (!std::isfinite(v)) throw std::invalid_argument("score vector contains a non-finite value");
  }
  std::stable_sort(raw.begin(), raw.end());
  return ClassScores(std::move(raw));
}

ClassScores sort_scores(std::vector<double> raw) { return ClassScores::from_unsorted(std::move(raw)); }

InputFormat format_from_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot != std::string_view::npos && iequals(path.substr(dot), ".json")) return InputFormat::json;
  return InputFormat::csv;
}

std::vector<ScoreRecord> parse_records(std::string_view text, InputFormat format,
                                       const LabelMapping& mapping, std::string_view source) {
  return format == InputFormat::csv ? parse_csv(text, mapping, source)
                                    : parse_json(text, mapping, source);
}

LabeledDataset partition(std::span<const ScoreRecord> records, Polarity polarity,
                         std::string_view source) {
  std::vector<double> lower;
  std::vector<double> upper;
  for (const auto& r : records) {
    (r.label == ScoreClass::lower ? lower : upper).push_back(r.score);
  }
  if (lower.empty() || upper.empty()) {
    throw DataError(std::string(source), 0,
                    std::string("class '") + (lower.empty() ? "lower" : "upper") +
                        "' has zero samples");
  }
  return {ClassScores::from_unsorted(std::move(lower)), ClassScores::from_unsorted(std::move(upper)),
          polarity};
}

LabeledDataset ingest(std::string_view text, InputFormat format, const LabelMapping& mapping,
                      std::string_view source) {
  const auto records = parse_records(text, format, mapping, source);
  return partition(records, mapping.polarity, source);
}

std::string serialize(const LabeledDataset& data, InputFormat format, const LabelMapping& mapping) {
  const std::pair<ScoreClass, const ClassScores*> classes[] = {{ScoreClass::lower, &data.lower},
                                                               {ScoreClass::upper, &data.upper}};
  if (format == InputFormat::json) {
    auto doc = nlohmann::json::array();
    for (const auto& [cls, scores] : classes) {
      const auto prefix = cls == ScoreClass::lower ? "lower-" : "upper-";
      for (std::size_t i = 0; i < scores->size(); ++i) {
        doc.push_back({{"id", prefix + std::to_string(i)},
                       {"score", (*scores)[i]},
                       {"label", mapping.token_for(cls)}});
      }
    }
    return doc.dump(1) + "\n";
  }
  std::ostringstream out;
  out << "id,score,label\n";
  for (const auto& [cls, scores] : classes) {
    const auto prefix = cls == ScoreClass::lower ? "lower-" : "upper-";
    for (std::size_t i = 0; i < scores->size(); ++i) {
      out << prefix << i << ',' << format_exact((*scores)[i]) << ',' << mapping.token_for(cls) << '\n';
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace predomain
