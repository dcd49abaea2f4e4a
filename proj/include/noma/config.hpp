#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "noma/experiments.hpp"

namespace noma {

// Flat sectioned key = value text, '#' comments, lists space- or
// comma-separated. Sections mirror the library modules so experiment records
// diff cleanly.
class KeyValueConfig {
 public:
  static KeyValueConfig parse_string(const std::string& text);
  static KeyValueConfig parse_file(const std::filesystem::path& path);

  bool has(const std::string& section, const std::string& key) const;
  void set(const std::string& section, const std::string& key, const std::string& value);

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key,
                    double fallback) const;
  long get_long(const std::string& section, const std::string& key, long fallback) const;
  std::uint64_t get_u64(const std::string& section, const std::string& key,
                        std::uint64_t fallback) const;
  std::vector<double> get_double_list(const std::string& section, const std::string& key,
                                      const std::vector<double>& fallback) const;
  std::vector<std::string> get_string_list(const std::string& section,
                                           const std::string& key,
                                           const std::vector<std::string>& fallback) const;

  std::string serialize() const;

 private:
  // section -> key -> raw value, both maps ordered for stable serialization
  std::map<std::string, std::map<std::string, std::string>> values_;
};

// Experiment settings from / to the [deployment] and [experiment] sections.
// Defaults are the study baseline: 5000 runs, 200 BSs on average at
// lambda = 1e-4 / m^2, alpha = 4, mu = 0.1, eps = 1e-2.
ExperimentConfig experiment_from_config(const KeyValueConfig& config);
KeyValueConfig config_from_experiment(const ExperimentConfig& config);

SchemeKind scheme_from_string(const std::string& name);
Objective objective_from_string(const std::string& name);

}  // namespace noma
