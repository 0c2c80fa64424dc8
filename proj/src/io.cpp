#include "bulgaria/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bulgaria::io {

std::string format_double(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::string partition_label(const Partition& p) {
  std::string label;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i > 0) label += '+';
    label += std::to_string(p.parts()[i]);
  }
  return label;
}

namespace {

void append_row(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += fields[i];
  }
  out += '\n';
}

}  // namespace

std::string deviation_report_csv(const DeviationReport& report) {
  std::string out = "trial,seed,sup_distance,within_epsilon\n";
  for (std::uint64_t t = 0; t < report.trials; ++t) {
    append_row(out, {std::to_string(t), std::to_string(report.trial_seeds[t]),
                     format_double(report.sup_distances[t]),
                     report.sup_distances[t] <= report.epsilon ? "1" : "0"});
  }
  return out;
}

std::string distribution_csv(const PartitionIndex& index, const DistributionVector& d) {
  if (d.probs.size() != index.size())
    throw std::invalid_argument("distribution_csv: vector does not match index");
  std::string out = "index,partition,probability\n";
  for (std::size_t i = 0; i < index.size(); ++i)
    append_row(out, {std::to_string(i), partition_label(index.partition(i)),
                     format_double(d.probs[i])});
  return out;
}

std::string matrix_csv(const PartitionIndex& index, const Matrix& t) {
  if (t.size() != index.size()) throw std::invalid_argument("matrix_csv: size mismatch");
  std::string out = "partition";
  for (std::size_t j = 0; j < index.size(); ++j) out += ',' + partition_label(index.partition(j));
  out += '\n';
  for (std::size_t i = 0; i < index.size(); ++i) {
    out += partition_label(index.partition(i));
    for (std::size_t j = 0; j < index.size(); ++j) out += ',' + format_double(t.at(i, j));
    out += '\n';
  }
  return out;
}

std::string marginals_csv(const std::vector<MarginalStat>& stats) {
  std::string out = "k,expected_mean,mean,mean_z,expected_var,variance,var_ratio\n";
  for (const MarginalStat& s : stats)
    append_row(out, {std::to_string(s.k), format_double(s.expected_mean), format_double(s.mean),
                     format_double(s.mean_z), format_double(s.expected_var),
                     format_double(s.variance), format_double(s.var_ratio)});
  return out;
}

std::string cycle_csv(const CycleReport& report) {
  std::string out = "position,partition,near_triangular\n";
  for (std::size_t i = 0; i < report.cycle_states.size(); ++i)
    append_row(out, {std::to_string(i), partition_label(report.cycle_states[i]),
                     report.near_triangular_flags[i] ? "1" : "0"});
  return out;
}

std::string trajectory_csv(const Trajectory& trajectory) {
  std::string out = "round,new_pile_size\n";
  for (std::size_t r = 0; r < trajectory.new_pile_sizes.size(); ++r)
    append_row(out, {std::to_string(r + 1), std::to_string(trajectory.new_pile_sizes[r])});
  return out;
}

std::string snapshots_csv(const std::vector<ShapeSnapshot>& snapshots) {
  std::string out = "trial,seed,partition\n";
  for (const ShapeSnapshot& s : snapshots)
    append_row(out, {std::to_string(s.trial), std::to_string(s.seed),
                     partition_label(s.terminal)});
  return out;
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string_view::npos) {
        fields.emplace_back(line.substr(start));
        break;
      }
      fields.emplace_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      table.rows.push_back(std::move(fields));
    }
  }
  return table;
}

std::string emit_csv(const CsvTable& table) {
  std::string out;
  append_row(out, table.header);
  for (const auto& row : table.rows) append_row(out, row);
  return out;
}

json envelope(json config, json results, std::uint64_t master_seed) {
  json root;
  root["schema_version"] = kSchemaVersion;
  root["config"] = std::move(config);
  root["results"] = std::move(results);
  root["provenance"] = {{"master_seed", master_seed}, {"build_id", kBuildId}};
  return root;
}

json partition_json(const Partition& p) { return json(p.parts()); }

json quantiles_json(const Quantiles& q) {
  return json{{"min", q.min}, {"q25", q.q25}, {"median", q.median}, {"q75", q.q75}, {"max", q.max}};
}

json bound_json(const DeviationBound& bound) {
  return json{{"epsilon", bound.epsilon},
              {"n", bound.n},
              {"p", bound.p},
              {"m", bound.m},
              {"regime1", bound.regime1},
              {"regime2", bound.regime2},
              {"combined", bound.combined},
              {"asymptotic_rate", bound.asymptotic_rate}};
}

json deviation_results_json(const DeviationReport& report) {
  json results;
  results["variant"] = variant_name(report.params.variant);
  results["n"] = report.params.n;
  results["p"] = report.params.p;
  results["m"] = report.m;
  results["epsilon"] = report.epsilon;
  results["trials"] = report.trials;
  results["count_within"] = report.count_within;
  results["empirical_prob"] = report.empirical_prob;
  results["sup_distance_quantiles"] = quantiles_json(report.quantiles);
  results["finite_n_bound"] = bound_json(report.bound);
  return results;
}

json stationary_results_json(const StationaryReport& report, std::optional<double> tv_to_exact) {
  json results;
  results["variant"] = variant_name(report.params.variant);
  results["n"] = report.params.n;
  results["p"] = report.params.p;
  results["burn_in"] = report.options.burn_in;
  results["samples"] = report.options.samples;
  results["thinning"] = report.options.thinning;
  results["has_empirical"] = report.has_empirical;
  if (tv_to_exact) results["tv_to_exact"] = *tv_to_exact;
  results["distance_mean"] = report.distance_mean;
  results["distance_quantiles"] = quantiles_json(report.distance_quantiles);
  return results;
}

json cycle_results_json(const CycleReport& report) {
  json states = json::array();
  for (std::size_t i = 0; i < report.cycle_states.size(); ++i)
    states.push_back({{"partition", partition_json(report.cycle_states[i])},
                      {"near_triangular", static_cast<bool>(report.near_triangular_flags[i])}});
  return json{{"initial", partition_json(report.initial)},
              {"tail_length", report.tail_length},
              {"cycle_length", report.cycle_length},
              {"all_near_triangular", report.all_near_triangular},
              {"cycle", std::move(states)}};
}

json marginal_results_json(const std::vector<MarginalStat>& stats) {
  json rows = json::array();
  for (const MarginalStat& s : stats)
    rows.push_back({{"k", s.k},
                    {"expected_mean", s.expected_mean},
                    {"mean", s.mean},
                    {"mean_z", s.mean_z},
                    {"expected_var", s.expected_var},
                    {"variance", s.variance},
                    {"var_ratio", s.var_ratio}});
  return json{{"bowls", std::move(rows)}};
}

std::string dump_json(const json& value) { return value.dump(2) + "\n"; }

namespace {

double nice_tick(double span, int target) {
  if (span <= 0.0) return 1.0;
  const double raw = span / target;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  const double scaled = raw / magnitude;
  double nice = 10.0;
  if (scaled <= 1.0) nice = 1.0;
  else if (scaled <= 2.0) nice = 2.0;
  else if (scaled <= 5.0) nice = 5.0;
  return nice * magnitude;
}

std::string fmt_coord(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", v);
  return buffer;
}

std::string fmt_tick(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%g", v);
  return buffer;
}

}  // namespace

std::string svg_plot(const StepFunction& step, const DecreasingReference* reference,
                     std::string_view title) {
  constexpr double kWidth = 720, kHeight = 480;
  constexpr double kLeft = 64, kRight = 16, kTop = 40, kBottom = 48;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  const double xmax = std::max(step.support_end(), 6.0);
  double peak = 0.0;
  for (double v : step.values()) peak = std::max(peak, v);
  const double ymax = std::max(1.1, peak);

  auto px = [&](double x) { return kLeft + x / xmax * plot_w; };
  auto py = [&](double y) { return kTop + (1.0 - y / ymax) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  svg << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";

  // axes
  svg << "  <line x1=\"" << fmt_coord(px(0)) << "\" y1=\"" << fmt_coord(py(0)) << "\" x2=\""
      << fmt_coord(px(xmax)) << "\" y2=\"" << fmt_coord(py(0)) << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << fmt_coord(px(0)) << "\" y1=\"" << fmt_coord(py(0)) << "\" x2=\""
      << fmt_coord(px(0)) << "\" y2=\"" << fmt_coord(py(ymax)) << "\" stroke=\"black\"/>\n";

  const double xtick = nice_tick(xmax, 8);
  for (double x = 0.0; x <= xmax * (1.0 + 1e-9); x += xtick) {
    svg << "  <line x1=\"" << fmt_coord(px(x)) << "\" y1=\"" << fmt_coord(py(0)) << "\" x2=\""
        << fmt_coord(px(x)) << "\" y2=\"" << fmt_coord(py(0) + 5) << "\" stroke=\"black\"/>\n";
    svg << "  <text x=\"" << fmt_coord(px(x)) << "\" y=\"" << fmt_coord(py(0) + 20)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << fmt_tick(x) << "</text>\n";
  }
  const double ytick = nice_tick(ymax, 6);
  for (double y = 0.0; y <= ymax * (1.0 + 1e-9); y += ytick) {
    svg << "  <line x1=\"" << fmt_coord(px(0) - 5) << "\" y1=\"" << fmt_coord(py(y)) << "\" x2=\""
        << fmt_coord(px(0)) << "\" y2=\"" << fmt_coord(py(y)) << "\" stroke=\"black\"/>\n";
    svg << "  <text x=\"" << fmt_coord(px(0) - 8) << "\" y=\"" << fmt_coord(py(y) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
        << fmt_tick(y) << "</text>\n";
  }

  // reference curve, 512 sample points
  if (reference != nullptr) {
    svg << "  <polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\"";
    for (int i = 0; i < 512; ++i) {
      const double x = xmax * static_cast<double>(i) / 511.0;
      if (i > 0) svg << ' ';
      svg << fmt_coord(px(x)) << ',' << fmt_coord(py(std::min((*reference)(x), ymax)));
    }
    svg << "\"/>\n";
  }

  // step function: horizontals with vertical connectors, then the zero tail
  svg << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  if (step.segment_count() == 0) {
    svg << fmt_coord(px(0)) << ',' << fmt_coord(py(0)) << ' ' << fmt_coord(px(xmax)) << ','
        << fmt_coord(py(0));
  } else {
    const auto& breaks = step.breaks();
    const auto& values = step.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) svg << ' ';
      svg << fmt_coord(px(breaks[i])) << ',' << fmt_coord(py(values[i])) << ' '
          << fmt_coord(px(breaks[i + 1])) << ',' << fmt_coord(py(values[i]));
    }
    svg << ' ' << fmt_coord(px(step.support_end())) << ',' << fmt_coord(py(0));
    if (step.support_end() < xmax) svg << ' ' << fmt_coord(px(xmax)) << ',' << fmt_coord(py(0));
  }
  svg << "\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace bulgaria::io
