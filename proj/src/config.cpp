#include "combweyl/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "combweyl/fdlap.hpp"

namespace combweyl {

namespace {

using nlohmann::json;

template <typename T>
std::vector<T> read_list(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ConfigError(key, "missing");
  const json& node = doc.at(key);
  if (!node.is_array()) throw ConfigError(key, "expected an array");
  std::vector<T> out;
  for (const json& item : node) {
    if constexpr (std::is_integral_v<T>) {
      if (!item.is_number_integer()) throw ConfigError(key, "expected integers");
    } else {
      if (!item.is_number()) throw ConfigError(key, "expected numbers");
    }
    out.push_back(item.get<T>());
  }
  return out;
}

}  // namespace

void ExperimentConfig::validate(bool require_nonempty) const {
  if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("h", "must be a positive number");
  for (const double mu : mu_list)
    if (!(mu > 0.0) || !std::isfinite(mu)) throw ConfigError("mu_list", "entries must be positive");
  for (const int q : q_list)
    if (q < 1) throw ConfigError("q_list", "entries must be >= 1");
  for (const int s : s_list)
    if (s < 1) throw ConfigError("s_list", "entries must be >= 1");
  for (const int q : q_list)
    for (const int s : s_list)
      if (static_cast<long long>(q) * s > kMaxTeethTimesRefine)
        throw ConfigError("s_list", "q * s exceeds " + std::to_string(kMaxTeethTimesRefine) +
                                        " for q = " + std::to_string(q) + ", s = " +
                                        std::to_string(s));
  if (require_nonempty) {
    if (mu_list.empty()) throw ConfigError("mu_list", "must not be empty");
    if (q_list.empty()) throw ConfigError("q_list", "must not be empty");
    if (s_list.empty()) throw ConfigError("s_list", "must not be empty");
  }
}

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", e.what());
  }
  if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");

  ExperimentConfig config;
  config.mu_list = read_list<double>(doc, "mu_list");
  if (!doc.contains("h")) throw ConfigError("h", "missing");
  if (!doc.at("h").is_number()) throw ConfigError("h", "expected a number");
  config.h = doc.at("h").get<double>();
  config.q_list = read_list<int>(doc, "q_list");
  config.s_list = read_list<int>(doc, "s_list");
  if (doc.contains("out_path")) {
    if (!doc.at("out_path").is_string()) throw ConfigError("out_path", "expected a string");
    config.out_path = doc.at("out_path").get<std::string>();
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "mu_list" && key != "h" && key != "q_list" && key != "s_list" && key != "out_path")
      throw ConfigError(key, "unknown field");
  }
  config.validate(false);
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace combweyl
