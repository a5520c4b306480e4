#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "combweyl/analytic.hpp"
#include "combweyl/asymptotics.hpp"
#include "combweyl/config.hpp"

namespace combweyl {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCsvHeader =
    "mu,h,q,s,lambda,n_fd,n_square,n_teeth,defect,h_snapped,wall_time_s,error";

/// Shortest-free fixed format used everywhere: printf %.17g.
std::string format_double(double value);

struct SweepReport {
  ExperimentConfig config;
  std::vector<SweepRecord> records;
  std::vector<FitResult> fits;             // per mu, where >= 3 distinct q succeeded
  std::vector<ConstantReport> constants;   // per mu
};

/// Joins records with per-mu fits and analytic constants.
SweepReport build_report(const ExperimentConfig& config, std::vector<SweepRecord> records);

std::string render_csv(std::span<const SweepRecord> records);
std::string render_json(const SweepReport& report);

/// Writes <stem>.csv and <stem>.json; returns the two paths.
std::vector<std::filesystem::path> write_report(const SweepReport& report,
                                                const std::filesystem::path& stem);

}  // namespace combweyl
