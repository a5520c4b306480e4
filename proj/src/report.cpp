#include "combweyl/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace combweyl {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string json_number(double value) {
  return std::isfinite(value) ? format_double(value) : "null";
}

std::string json_string(const std::string& text) { return nlohmann::json(text).dump(); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (const char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

template <typename T, typename Fmt>
std::string json_array(const std::vector<T>& values, Fmt&& fmt) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += fmt(values[i]);
  }
  return out + "]";
}

std::string count_or_null(const SweepRecord& r, std::int64_t value) {
  return r.ok() ? std::to_string(value) : "null";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

SweepReport build_report(const ExperimentConfig& config, std::vector<SweepRecord> records) {
  SweepReport report;
  report.config = config;
  report.records = std::move(records);
  const std::set<double> mus(config.mu_list.begin(), config.mu_list.end());
  for (const double mu : mus) {
    report.constants.push_back(constant_report(mu, config.h));
    std::vector<SweepRecord> subset;
    for (const SweepRecord& r : report.records)
      if (r.mu == mu) subset.push_back(r);
    try {
      report.fits.push_back(fit_constant(subset));
    } catch (const std::exception&) {
      // too few q for a fit at this mu
    }
  }
  return report;
}

std::string render_csv(std::span<const SweepRecord> records) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const SweepRecord& r : records) {
    const bool ok = r.ok();
    out += format_double(r.mu) + ',' + format_double(r.h) + ',' + std::to_string(r.q) + ',' +
           std::to_string(r.s) + ',' + format_double(r.lambda) + ',' +
           (ok ? std::to_string(r.n_fd) : "") + ',' + (ok ? std::to_string(r.n_square) : "") + ',' +
           (ok ? std::to_string(r.n_teeth) : "") + ',' + (ok ? std::to_string(r.defect) : "") + ',' +
           format_double(r.h_snapped) + ',' + format_double(r.wall_time_s) + ',' +
           csv_field(r.error) + '\n';
  }
  return out;
}

std::string render_json(const SweepReport& report) {
  std::ostringstream out;
  const ExperimentConfig& c = report.config;
  out << "{\n  \"config\": {\"mu_list\": " << json_array(c.mu_list, json_number)
      << ", \"h\": " << json_number(c.h)
      << ", \"q_list\": " << json_array(c.q_list, [](int v) { return std::to_string(v); })
      << ", \"s_list\": " << json_array(c.s_list, [](int v) { return std::to_string(v); })
      << ", \"out_path\": " << json_string(c.out_path) << "},\n";

  out << "  \"records\": [";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const SweepRecord& r = report.records[i];
    out << (i ? ",\n    " : "\n    ") << "{\"mu\": " << json_number(r.mu)
        << ", \"h\": " << json_number(r.h) << ", \"q\": " << r.q << ", \"s\": " << r.s
        << ", \"lambda\": " << json_number(r.lambda) << ", \"n_fd\": " << count_or_null(r, r.n_fd)
        << ", \"n_square\": " << count_or_null(r, r.n_square)
        << ", \"n_teeth\": " << count_or_null(r, r.n_teeth)
        << ", \"defect\": " << count_or_null(r, r.defect)
        << ", \"h_snapped\": " << json_number(r.h_snapped)
        << ", \"wall_time_s\": " << json_number(r.wall_time_s)
        << ", \"error\": " << (r.ok() ? "null" : json_string(r.error)) << "}";
  }
  out << (report.records.empty() ? "],\n" : "\n  ],\n");

  out << "  \"fits\": [";
  for (std::size_t i = 0; i < report.fits.size(); ++i) {
    const FitResult& f = report.fits[i];
    out << (i ? ",\n    " : "\n    ") << "{\"mu\": " << json_number(f.mu)
        << ", \"s\": " << f.s << ", \"q_min\": " << f.q_min << ", \"q_max\": " << f.q_max
        << ", \"c_hat\": " << json_number(f.c_hat) << ", \"beta_hat\": " << json_number(f.beta_hat)
        << ", \"residual_max\": " << json_number(f.residual_max) << "}";
  }
  out << (report.fits.empty() ? "],\n" : "\n  ],\n");

  out << "  \"constants\": [";
  for (std::size_t i = 0; i < report.constants.size(); ++i) {
    const ConstantReport& k = report.constants[i];
    out << (i ? ",\n    " : "\n    ") << "{\"mu\": " << json_number(k.mu)
        << ", \"c\": " << json_number(k.c) << ", \"c_weyl\": " << json_number(k.c_weyl)
        << ", \"delta\": " << json_number(k.delta) << ", \"cutoff_m\": " << k.cutoff_m << "}";
  }
  out << (report.constants.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return out.str();
}

std::vector<std::filesystem::path> write_report(const SweepReport& report,
                                                const std::filesystem::path& stem) {
  std::filesystem::path csv = stem;
  std::filesystem::path json = stem;
  csv += ".csv";
  json += ".json";
  const std::string csv_text = render_csv(report.records);
  const std::string json_text = render_json(report);
  write_file(csv, csv_text);
  write_file(json, json_text);
  return {csv, json};
}

}  // namespace combweyl
