#include <sstream>

#include "ocn/experiment.hpp"
#include "ocn/json_io.hpp"

namespace ocn {
namespace {

std::string csv_report(const ExperimentResult& result) {
  std::ostringstream out;
  out << "sample,seed,source_a,source_b,bypass_cost,rwca_cost,bypass_status,"
         "rwca_status,rwca_lower_bound,relative_gain_pct,relative_gain_max_pct\n";
  for (const GainRecord& r : result.records) {
    out << r.sample << ',' << r.seed << ',' << r.source_a << ',' << r.source_b << ',';
    if (r.bypass_cost) out << *r.bypass_cost;
    out << ',';
    if (r.rwca_cost) out << *r.rwca_cost;
    out << ',' << to_string(r.bypass_status) << ',' << to_string(r.rwca_status) << ','
        << format_fixed(r.rwca_lower_bound, 2) << ',';
    if (r.relative_gain_pct) out << format_fixed(*r.relative_gain_pct, 4);
    out << ',';
    if (r.relative_gain_max_pct) out << format_fixed(*r.relative_gain_max_pct, 4);
    out << '\n';
  }
  const ExperimentSummary& s = result.summary;
  out << "summary,,,," << s.total_bypass_cost << ',' << s.total_rwca_cost << ",,,,"
      << format_fixed(s.mean_gain_pct, 4) << ',' << format_fixed(s.max_gain_pct, 4) << '\n';
  return out.str();
}

nlohmann::ordered_json json_report(const ExperimentResult& result) {
  nlohmann::ordered_json j;
  j["config"] = {{"topology", result.config.topology},
                 {"samples", result.config.samples},
                 {"seed", result.config.seed},
                 {"k_paths", result.config.k_paths},
                 {"wavelength_capacity", result.config.wavelength_capacity},
                 {"solver", to_string(result.config.solver)},
                 {"time_budget_seconds", result.config.time_budget_seconds}};
  j["topology"] = result.topology_name;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const GainRecord& r : result.records) {
    nlohmann::ordered_json rec;
    rec["sample"] = r.sample;
    rec["seed"] = r.seed;
    rec["source_a"] = r.source_a;
    rec["source_b"] = r.source_b;
    if (r.bypass_cost) rec["bypass_cost"] = *r.bypass_cost;
    if (r.rwca_cost) rec["rwca_cost"] = *r.rwca_cost;
    rec["bypass_status"] = to_string(r.bypass_status);
    rec["rwca_status"] = to_string(r.rwca_status);
    rec["rwca_lower_bound"] = r.rwca_lower_bound;
    if (r.relative_gain_pct) rec["relative_gain_pct"] = *r.relative_gain_pct;
    if (r.relative_gain_max_pct) rec["relative_gain_max_pct"] = *r.relative_gain_max_pct;
    if (!r.error.empty()) rec["error"] = r.error;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  j["summary"] = {{"gain_samples", result.summary.gain_samples},
                  {"mean_gain_pct", result.summary.mean_gain_pct},
                  {"max_gain_pct", result.summary.max_gain_pct},
                  {"pooled_gain_pct", result.summary.pooled_gain_pct},
                  {"total_bypass_cost", result.summary.total_bypass_cost},
                  {"total_rwca_cost", result.summary.total_rwca_cost}};
  return j;
}

// Bar chart of per-sample relative gain, one bar per record, with the mean as
// a dashed rule. Plain hand-assembled SVG so the bytes are reproducible.
std::string svg_report(const ExperimentResult& result) {
  const double width = 720, height = 420;
  const double left = 70, right = 20, top = 48, bottom = 56;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double max_gain = 0;
  for (const GainRecord& r : result.records) {
    if (r.relative_gain_pct) max_gain = std::max(max_gain, *r.relative_gain_pct);
  }
  double y_max = 10;
  while (y_max < max_gain) y_max += 10;

  auto x_of = [&](int i, int n) {
    const double slot = plot_w / n;
    return left + slot * i + slot * 0.2;
  };
  auto y_of = [&](double gain) { return top + plot_h * (1.0 - gain / y_max); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2
      << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
      << "Relative gain in wavelength-link utilization, " << result.topology_name
      << " (%)</text>\n";

  for (int tick = 0; tick <= 5; ++tick) {
    const double value = y_max * tick / 5.0;
    const double y = y_of(value);
    svg << "<line x1=\"" << left << "\" y1=\"" << format_fixed(y, 1) << "\" x2=\""
        << width - right << "\" y2=\"" << format_fixed(y, 1)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << left - 8 << "\" y=\"" << format_fixed(y + 4, 1)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_fixed(value, 0) << "</text>\n";
  }

  const int n = std::max<int>(1, static_cast<int>(result.records.size()));
  const double bar_w = plot_w / n * 0.6;
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const GainRecord& r = result.records[i];
    const double x = x_of(static_cast<int>(i), n);
    const double gain = r.relative_gain_pct.value_or(0.0);
    const double y = y_of(gain);
    svg << "<rect x=\"" << format_fixed(x, 1) << "\" y=\"" << format_fixed(y, 1)
        << "\" width=\"" << format_fixed(bar_w, 1) << "\" height=\""
        << format_fixed(top + plot_h - y, 1) << "\" fill=\"#4878a8\"/>\n";
    if (r.relative_gain_pct) {
      svg << "<text x=\"" << format_fixed(x + bar_w / 2, 1) << "\" y=\""
          << format_fixed(y - 4, 1)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
          << format_fixed(gain, 1) << "</text>\n";
    }
    svg << "<text x=\"" << format_fixed(x + bar_w / 2, 1) << "\" y=\""
        << format_fixed(top + plot_h + 16, 1)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << r.sample
        << "</text>\n";
  }

  if (result.summary.gain_samples > 0) {
    const double y = y_of(result.summary.mean_gain_pct);
    svg << "<line x1=\"" << left << "\" y1=\"" << format_fixed(y, 1) << "\" x2=\""
        << width - right << "\" y2=\"" << format_fixed(y, 1)
        << "\" stroke=\"#c05050\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
    svg << "<text x=\"" << width - right - 4 << "\" y=\"" << format_fixed(y - 6, 1)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
           "fill=\"#c05050\">mean "
        << format_fixed(result.summary.mean_gain_pct, 1) << "%</text>\n";
  }

  svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">traffic "
         "sample</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string timing_log(const ExperimentResult& result) {
  std::ostringstream out;
  for (const GainRecord& r : result.records) {
    out << "sample " << r.sample << ": bypass " << format_fixed(r.bypass_seconds, 3)
        << "s, rwca " << format_fixed(r.rwca_seconds, 3) << "s\n";
  }
  return out.str();
}

}  // namespace

std::vector<std::filesystem::path> emit_report(const ExperimentResult& result,
                                               const std::filesystem::path& out_dir,
                                               const std::set<ReportFormat>& formats) {
  if (result.records.empty()) {
    throw ValidationError("emit_report: no records to report");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  }

  std::vector<std::filesystem::path> written;
  if (formats.count(ReportFormat::kCsv)) {
    const auto path = out_dir / "report.csv";
    write_text_file(path, csv_report(result));
    written.push_back(path);
  }
  if (formats.count(ReportFormat::kJson)) {
    const auto path = out_dir / "report.json";
    write_text_file(path, json_report(result).dump(2) + "\n");
    written.push_back(path);
  }
  if (formats.count(ReportFormat::kSvg)) {
    const auto path = out_dir / "gains.svg";
    write_text_file(path, svg_report(result));
    written.push_back(path);
  }
  const auto timings = out_dir / "timings.log";
  write_text_file(timings, timing_log(result));
  written.push_back(timings);
  return written;
}

}  // namespace ocn
