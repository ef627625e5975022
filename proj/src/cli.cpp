#include "predomain/cli.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "predomain/centers.hpp"
#include "predomain/geometry.hpp"
#include "predomain/report.hpp"
#include "predomain/score_model.hpp"
#include "predomain/svg.hpp"
#include "predomain/synth.hpp"
#include "predomain/thresholds.hpp"

namespace predomain {

namespace {

// Thrown for option values that parse but make no sense together.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string live_label = "live";
  std::string fake_label = "fake";
  std::string polarity = "genuine-low";
  std::string input_format = "auto";

  LabelMapping mapping() const { return {live_label, fake_label, parse_polarity(polarity)}; }

  void add_to(CLI::App& cmd) {
    cmd.add_option("--live-label", live_label, "Label token of genuine samples")->capture_default_str();
    cmd.add_option("--fake-label", fake_label, "Label token of attack samples")->capture_default_str();
    cmd.add_option("--polarity", polarity, "Which class sits on the low-score side")
        ->check(CLI::IsMember({"genuine-low", "genuine-high"}))
        ->capture_default_str();
    cmd.add_option("--input-format", input_format, "Input file format (auto: by extension)")
        ->check(CLI::IsMember({"auto", "csv", "json"}))
        ->capture_default_str();
  }

  void echo(ReportHeader& h) const {
    h.config.emplace_back("polarity", polarity);
    h.config.emplace_back("live_label", live_label);
    h.config.emplace_back("fake_label", fake_label);
  }

  InputFormat format_for(const std::string& path) const {
    if (input_format == "csv") return InputFormat::csv;
    if (input_format == "json") return InputFormat::json;
    return format_from_path(path);
  }

  std::vector<ScoreRecord> records(const std::string& path) const {
    return parse_records(read_file(path), format_for(path), mapping(), path);
  }

  LabeledDataset dataset(const std::string& path) const {
    const auto recs = records(path);
    return partition(recs, parse_polarity(polarity), path);
  }
};

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw DataError(path, 0, "cannot open output file");
  file << content;
  if (!file) throw DataError(path, 0, "write failed");
}

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    // Shortest text that reads back to the same double.
    char buf[32];
    const auto end = std::to_chars(buf, buf + sizeof buf, values[i]).ptr;
    s += (i ? "," : "") + std::string(buf, end);
  }
  return s;
}

std::string exact(double v) { return join({v}); }

std::string class_name(const LabelMapping& mapping, ScoreClass cls) { return mapping.token_for(cls); }

std::vector<ThresholdCandidate> viz_thresholds(const LabeledDataset& data, const std::string& which,
                                               CenterMethod center) {
  if (which == "none") return {};
  ThresholdOptions options;
  options.selection = parse_strategy_selection(which);
  options.center = center;
  std::vector<ThresholdCandidate> out;
  for (const auto& row : threshold_report(data, nullptr, options).rows) out.push_back(row.candidate);
  return out;
}

struct VizOptions {
  std::string in;
  std::string after;
  std::string out;
  std::string center = "balance";
  std::string thresholds = "all";
  std::string title;
  int width = 800;
  int height = 400;
  std::vector<double> rings = {0.25, 0.5, 0.75, 1.0};
  std::vector<double> viewport = {0.0, 1.0};
  bool no_rug = false;
  bool no_legend = false;
};

RenderSpec build_render_spec(const VizOptions& o, const InputOptions& io, const std::string& path,
                             const std::vector<ThresholdCandidate>& thresholds,
                             const std::vector<std::string>& comments) {
  const auto mapping = io.mapping();
  const auto method = parse_center_method(o.center);
  const auto records = io.records(path);
  std::map<ScoreClass, std::vector<double>> groups;
  for (const auto& r : records) groups[r.label].push_back(r.score);
  if (groups.empty()) throw DataError(path, 0, "no score records");

  RenderSpec spec;
  spec.width = o.width;
  spec.height = o.height;
  spec.viewport = {o.viewport[0], o.viewport[1]};
  spec.title = o.title.empty() ? path : o.title;
  spec.rug = !o.no_rug;
  spec.legend = !o.no_legend;
  spec.rings = o.rings;
  spec.comments = comments;
  for (auto& [cls, values] : groups) {
    auto scores = ClassScores::from_unsorted(std::move(values));
    DomainLayer layer{summarize_domain(scores, method),
                      std::vector<double>(scores.values().begin(), scores.values().end()),
                      default_class_style(cls, class_name(mapping, cls))};
    spec.domains.push_back(std::move(layer));
  }
  for (const auto& t : thresholds) {
    const bool dashed = t.strategy == Strategy::acer_left || t.strategy == Strategy::acer_right ||
                        t.strategy == Strategy::acer_mid;
    spec.thresholds.push_back({t, default_threshold_color(t.strategy), dashed});
  }
  return spec;
}

int run_viz(const VizOptions& o, const InputOptions& io, std::ostream& out) {
  if (o.viewport.size() != 2 || !(o.viewport[0] < o.viewport[1])) {
    throw UsageError("--viewport expects lo,hi with lo < hi");
  }
  if (o.width <= 0 || o.height <= 0) throw UsageError("--width and --height must be positive");
  for (double q : o.rings) {
    if (!(q > 0.0 && q <= 1.0)) throw UsageError("--rings fractions must lie in (0, 1]");
  }

  ReportHeader h{"viz", {{"in", o.in}}};
  if (!o.after.empty()) h.config.emplace_back("after", o.after);
  io.echo(h);
  h.config.emplace_back("center", o.center);
  h.config.emplace_back("thresholds", o.thresholds);
  h.config.emplace_back("width", std::to_string(o.width));
  h.config.emplace_back("height", std::to_string(o.height));
  h.config.emplace_back("viewport", join(o.viewport));
  h.config.emplace_back("rings", join(o.rings));
  h.config.emplace_back("rug", o.no_rug ? "false" : "true");
  h.config.emplace_back("legend", o.no_legend ? "false" : "true");

  // Thresholds always come from --in (the train side for a comparison).
  std::vector<ThresholdCandidate> thresholds;
  std::vector<std::string> comments = header_lines(h);
  if (o.thresholds != "none") {
    const auto records = io.records(o.in);
    bool has_lower = false;
    bool has_upper = false;
    for (const auto& r : records) (r.label == ScoreClass::lower ? has_lower : has_upper) = true;
    if (has_lower && has_upper) {
      thresholds = viz_thresholds(partition(records, parse_polarity(io.polarity), o.in), o.thresholds,
                                  parse_center_method(o.center));
    } else {
      comments.push_back("thresholds skipped: input has a single class");
    }
  }

  const auto before = build_render_spec(o, io, o.in, thresholds, comments);
  std::string svg;
  if (o.after.empty()) {
    svg = render(before);
  } else {
    auto after = build_render_spec(o, io, o.after, thresholds, {});
    svg = render_comparison(before, after);
  }
  write_output(o.out, svg, out);
  return kExitOk;
}

void add_common_output(CLI::App& cmd, std::string& format, std::string& out_path) {
  cmd.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  cmd.add_option("--out", out_path, "Output file (default: stdout)");
}

CLI::Option* add_center(CLI::App& cmd, std::string& center) {
  return cmd.add_option("--center", center, "Center estimator")
      ->check(CLI::IsMember({"mean", "median", "balance", "weighted-balance"}))
      ->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"predomain: prediction-score domain analysis and threshold selection", "predomain"};
  app.set_version_flag("--version", "predomain " + std::string(kVersion));
  app.require_subcommand(1);

  InputOptions io;
  std::string in_path;
  std::string out_path;
  std::string format = "text";
  std::string center = "balance";

  // analyze
  std::string variant = "orig";
  auto* analyze = app.add_subcommand("analyze", "Radius/Normalize/Density summary per class");
  analyze->add_option("--in", in_path, "Score file (csv or json)")->required()->check(CLI::ExistingFile);
  analyze->add_option("--variant", variant, "Variant label printed in each row")->capture_default_str();
  add_center(*analyze, center);
  io.add_to(*analyze);
  add_common_output(*analyze, format, out_path);
  analyze->footer("Example:\n  predomain analyze --in scores.csv --center balance --format text");

  // thresholds
  std::string dev_path;
  std::string strategy = "all";
  std::string tie_rule = "equal-is-genuine";
  auto* thresholds = app.add_subcommand("thresholds", "Threshold strategies evaluated on train (and dev)");
  thresholds->add_option("--in", in_path, "Train score file")->required()->check(CLI::ExistingFile);
  thresholds->add_option("--dev", dev_path, "Dev score file")->check(CLI::ExistingFile);
  thresholds->add_option("--strategy", strategy, "Strategies to report")
      ->check(CLI::IsMember({"all", "acer", "balance", "cross", "borders"}))
      ->capture_default_str();
  thresholds->add_option("--tie-rule", tie_rule, "Classification of scores equal to the threshold")
      ->check(CLI::IsMember({"equal-is-genuine", "equal-is-attack", "strict"}))
      ->capture_default_str();
  add_center(*thresholds, center);
  io.add_to(*thresholds);
  add_common_output(*thresholds, format, out_path);
  thresholds->footer("Example:\n  predomain thresholds --in train.csv --dev dev.csv --strategy all --format text");

  // roc
  auto* roc = app.add_subcommand("roc", "ROC points and trapezoidal AUC");
  roc->add_option("--in", in_path, "Score file")->required()->check(CLI::ExistingFile);
  io.add_to(*roc);
  add_common_output(*roc, format, out_path);
  roc->footer("Example:\n  predomain roc --in scores.csv --format csv --out roc.csv");

  // viz
  VizOptions viz_opts;
  auto* viz = app.add_subcommand("viz", "Render prediction domains as SVG");
  viz->add_option("--in", viz_opts.in, "Score file (thresholds are taken from it)")
      ->required()
      ->check(CLI::ExistingFile);
  viz->add_option("--after", viz_opts.after, "Second score file; renders a side-by-side comparison")
      ->check(CLI::ExistingFile);
  viz->add_option("--out", viz_opts.out, "Output SVG file")->required();
  add_center(*viz, viz_opts.center);
  viz->add_option("--thresholds", viz_opts.thresholds, "Threshold lines to draw")
      ->check(CLI::IsMember({"all", "acer", "balance", "cross", "borders", "none"}))
      ->capture_default_str();
  viz->add_option("--width", viz_opts.width, "Canvas width in pixels")->capture_default_str();
  viz->add_option("--height", viz_opts.height, "Minimum canvas height in pixels")->capture_default_str();
  viz->add_option("--rings", viz_opts.rings, "Sample fractions for the quantile rings")->delimiter(',');
  viz->add_option("--viewport", viz_opts.viewport, "Score interval lo,hi mapped onto the width")
      ->delimiter(',');
  viz->add_option("--title", viz_opts.title, "Panel title (default: input path)");
  viz->add_flag("--no-rug", viz_opts.no_rug, "Omit per-sample tick marks");
  viz->add_flag("--no-legend", viz_opts.no_legend, "Omit the R/N/D legend");
  io.add_to(*viz);
  viz->footer("Example:\n  predomain viz --in scores.csv --center balance --thresholds all --out figure.svg "
              "--width 800 --rings 0.25,0.5,0.75,1.0");

  // synth
  SynthSpec synth_spec;
  std::vector<double> clamp;
  std::string synth_label = "live";
  auto* synth = app.add_subcommand("synth", "Seeded Gaussian score generator");
  synth->add_option("--n", synth_spec.n, "Sample count")->capture_default_str();
  synth->add_option("--mean", synth_spec.mean, "Gaussian mean")->capture_default_str();
  synth->add_option("--std", synth_spec.std_dev, "Gaussian standard deviation")->capture_default_str();
  synth->add_option("--seed", synth_spec.seed, "PRNG seed (mt19937_64)")->capture_default_str();
  synth->add_option("--clamp", clamp, "Saturate scores into lo,hi")->delimiter(',')->expected(2);
  synth->add_option("--label", synth_label, "Label token written for every row")->capture_default_str();
  synth->add_option("--out", out_path, "Output CSV file (default: stdout)");
  synth->footer("Example:\n  predomain synth --n 500 --mean 0.5 --std 0.1 --seed 20240617 --out scores.csv");

  // compare
  std::string before_path;
  std::string after_path;
  auto* compare = app.add_subcommand("compare", "Before/after Radius/Normalize/Density deltas");
  compare->add_option("--before", before_path, "Score file before the change")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("--after", after_path, "Score file after the change")
      ->required()
      ->check(CLI::ExistingFile);
  add_center(*compare, center);
  io.add_to(*compare);
  add_common_output(*compare, format, out_path);
  compare->footer("Example:\n  predomain compare --before orig.csv --after extend.csv --format text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const auto method = parse_center_method(center);
      const auto data = io.dataset(in_path);
      const auto mapping = io.mapping();
      ReportHeader h{"analyze", {{"in", in_path}}};
      io.echo(h);
      h.config.emplace_back("center", center);
      h.config.emplace_back("variant", variant);
      const std::vector<SummaryRow> rows{
          {class_name(mapping, ScoreClass::lower), variant, summarize_domain(data.lower, method)},
          {class_name(mapping, ScoreClass::upper), variant, summarize_domain(data.upper, method)}};
      write_output(out_path, format_summaries(h, rows, parse_report_format(format)), out);
    } else if (thresholds->parsed()) {
      const auto train = io.dataset(in_path);
      std::optional<LabeledDataset> dev;
      if (!dev_path.empty()) dev = io.dataset(dev_path);
      ThresholdOptions options{parse_strategy_selection(strategy), parse_center_method(center),
                               parse_tie_rule(tie_rule)};
      ReportHeader h{"thresholds", {{"in", in_path}, {"dev", dev_path.empty() ? "none" : dev_path}}};
      io.echo(h);
      h.config.emplace_back("strategy", strategy);
      h.config.emplace_back("center", center);
      h.config.emplace_back("tie_rule", tie_rule);
      const auto report = threshold_report(train, dev ? &*dev : nullptr, options);
      write_output(out_path, format_thresholds(h, report, parse_report_format(format)), out);
    } else if (roc->parsed()) {
      const auto data = io.dataset(in_path);
      ReportHeader h{"roc", {{"in", in_path}}};
      io.echo(h);
      write_output(out_path, format_roc(h, roc_sweep(data), parse_report_format(format)), out);
    } else if (viz->parsed()) {
      return run_viz(viz_opts, io, out);
    } else if (synth->parsed()) {
      if (!clamp.empty()) synth_spec.clamp = ClampInterval{clamp[0], clamp[1]};
      if (synth_label.empty() || synth_label.find(',') != std::string::npos) {
        throw UsageError("--label must be a non-empty token without commas");
      }
      ReportHeader h{"synth",
                     {{"n", std::to_string(synth_spec.n)},
                      {"mean", exact(synth_spec.mean)},
                      {"std", exact(synth_spec.std_dev)},
                      {"seed", std::to_string(synth_spec.seed)},
                      {"clamp", clamp.empty() ? "none" : join(clamp)},
                      {"label", synth_label},
                      {"generator", "mt19937_64 + Box-Muller"}}};
      ClassScores scores = [&] {
        try {
          return generate(synth_spec);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }();
      std::string csv;
      for (const auto& line : header_lines(h)) csv += line + "\n";
      csv += "id,score,label\n";
      for (std::size_t i = 0; i < scores.size(); ++i) {
        char id[32];
        std::snprintf(id, sizeof id, "s%04zu", i);
        csv += std::string(id) + "," + exact(scores[i]) + "," + synth_label + "\n";
      }
      write_output(out_path, csv, out);
    } else if (compare->parsed()) {
      const auto method = parse_center_method(center);
      const auto before = io.dataset(before_path);
      const auto after = io.dataset(after_path);
      const auto mapping = io.mapping();
      ReportHeader h{"compare", {{"before", before_path}, {"after", after_path}}};
      io.echo(h);
      h.config.emplace_back("center", center);
      std::vector<ComparisonEntry> rows;
      for (const auto cls : {ScoreClass::lower, ScoreClass::upper}) {
        const auto& b = cls == ScoreClass::lower ? before.lower : before.upper;
        const auto& a = cls == ScoreClass::lower ? after.lower : after.upper;
        rows.push_back({class_name(mapping, cls),
                        compare_domains(summarize_domain(b, method), summarize_domain(a, method))});
      }
      write_output(out_path, format_comparison(h, rows, parse_report_format(format)), out);
    }
  } catch (const DataError& e) {
    err << "predomain: error[data] file=" << e.source() << " line=" << e.line() << ": " << e.detail()
        << '\n';
    return kExitDataError;
  } catch (const UsageError& e) {
    err << "predomain: error[usage]: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "predomain: error[data]: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace predomain
