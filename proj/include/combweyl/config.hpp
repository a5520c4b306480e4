#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace combweyl {

/// A malformed experiment config; field() names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error("config field '" + field + "': " + what), field_(std::move(field)) {}
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ExperimentConfig {
  std::vector<double> mu_list;
  double h = 1.0;
  std::vector<int> q_list;
  std::vector<int> s_list;
  std::string out_path;

  /// Checks value ranges and the q * s grid guard; with require_nonempty,
  /// also that every list has at least one entry.
  void validate(bool require_nonempty) const;
};

/// Parses the JSON form {"mu_list": [..], "h": .., "q_list": [..],
/// "s_list": [..], "out_path": ".."}; out_path is optional.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace combweyl
