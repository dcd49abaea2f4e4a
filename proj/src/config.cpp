#include "noma/config.hpp"

#include <charconv>
#include <type_traits>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace noma {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& raw) {
  std::vector<std::string> items;
  std::string current;
  for (char c : raw) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!current.empty()) {
        items.push_back(current);
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) items.push_back(current);
  return items;
}

double parse_double(const std::string& raw, const std::string& what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value '" + raw + "' for " + what);
  }
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_string(const std::string& text) {
  KeyValueConfig config;
  std::istringstream stream(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::invalid_argument("config: malformed section at line " +
                                    std::to_string(line_no));
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: expected key = value at line " +
                                  std::to_string(line_no));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config: empty key at line " + std::to_string(line_no));
    }
    config.values_[section][key] = value;
  }
  return config;
}

KeyValueConfig KeyValueConfig::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_string(buffer.str());
}

bool KeyValueConfig::has(const std::string& section, const std::string& key) const {
  const auto sec = values_.find(section);
  return sec != values_.end() && sec->second.count(key) > 0;
}

void KeyValueConfig::set(const std::string& section, const std::string& key,
                         const std::string& value) {
  values_[section][key] = value;
}

std::string KeyValueConfig::get_string(const std::string& section, const std::string& key,
                                       const std::string& fallback) const {
  const auto sec = values_.find(section);
  if (sec == values_.end()) return fallback;
  const auto it = sec->second.find(key);
  return it == sec->second.end() ? fallback : it->second;
}

double KeyValueConfig::get_double(const std::string& section, const std::string& key,
                                  double fallback) const {
  if (!has(section, key)) return fallback;
  return parse_double(get_string(section, key, ""), section + "." + key);
}

long KeyValueConfig::get_long(const std::string& section, const std::string& key,
                              long fallback) const {
  if (!has(section, key)) return fallback;
  const std::string raw = get_string(section, key, "");
  long value = 0;
  const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
  if (ec != std::errc() || ptr != raw.data() + raw.size()) {
    throw std::invalid_argument("config: bad integer '" + raw + "' for " + section +
                                "." + key);
  }
  return value;
}

std::uint64_t KeyValueConfig::get_u64(const std::string& section, const std::string& key,
                                      std::uint64_t fallback) const {
  if (!has(section, key)) return fallback;
  const std::string raw = get_string(section, key, "");
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
  if (ec != std::errc() || ptr != raw.data() + raw.size()) {
    throw std::invalid_argument("config: bad unsigned integer '" + raw + "' for " +
                                section + "." + key);
  }
  return value;
}

std::vector<double> KeyValueConfig::get_double_list(
    const std::string& section, const std::string& key,
    const std::vector<double>& fallback) const {
  if (!has(section, key)) return fallback;
  std::vector<double> values;
  for (const std::string& item : split_list(get_string(section, key, ""))) {
    values.push_back(parse_double(item, section + "." + key));
  }
  return values;
}

std::vector<std::string> KeyValueConfig::get_string_list(
    const std::string& section, const std::string& key,
    const std::vector<std::string>& fallback) const {
  if (!has(section, key)) return fallback;
  return split_list(get_string(section, key, ""));
}

std::string KeyValueConfig::serialize() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [section, entries] : values_) {
    if (!first) out << "\n";
    first = false;
    out << "[" << section << "]\n";
    for (const auto& [key, value] : entries) {
      out << key << " = " << value << "\n";
    }
  }
  return out.str();
}

SchemeKind scheme_from_string(const std::string& name) {
  if (name == "noma-csifree") return SchemeKind::NomaCsiFree;
  if (name == "oma-csifree") return SchemeKind::OmaCsiFree;
  if (name == "noma-benchmark") return SchemeKind::NomaBenchmark;
  if (name == "oma-benchmark") return SchemeKind::OmaBenchmark;
  throw std::invalid_argument("config: unknown scheme '" + name + "'");
}

Objective objective_from_string(const std::string& name) {
  if (name == "equal-rate") return Objective::EqualRate;
  if (name == "max-sum-rate") return Objective::MaxSumRate;
  throw std::invalid_argument("config: unknown objective '" + name + "'");
}

ExperimentConfig experiment_from_config(const KeyValueConfig& config) {
  ExperimentConfig experiment;
  experiment.runs = static_cast<int>(config.get_long("experiment", "runs", 5000));
  experiment.seed = config.get_u64("experiment", "seed", 1);
  experiment.eps_1 = config.get_double("experiment", "eps_1",
                                       config.get_double("experiment", "eps", 0.01));
  experiment.eps_2 = config.get_double("experiment", "eps_2",
                                       config.get_double("experiment", "eps", 0.01));
  experiment.mu_grid = config.get_double_list("experiment", "mu_grid", {0.1});
  experiment.alpha_grid = config.get_double_list("experiment", "alpha_grid", {4.0});
  experiment.lambda_grid = config.get_double_list("experiment", "lambda_grid", {1e-4});
  experiment.co_cell_max_tries =
      static_cast<int>(config.get_long("experiment", "co_cell_max_tries", 20000));

  const std::string objective = config.get_string("experiment", "objective", "both");
  if (objective == "both") {
    experiment.objective.reset();
  } else {
    experiment.objective = objective_from_string(objective);
  }

  experiment.schemes.clear();
  for (const std::string& name : config.get_string_list(
           "experiment", "schemes", {"noma-csifree", "oma-csifree"})) {
    experiment.schemes.insert(scheme_from_string(name));
  }

  const double density = config.get_double("deployment", "density", 1e-4);
  const double mean_bs = config.get_double("deployment", "mean_bs", 200.0);
  const double guard = config.get_double("deployment", "guard_fraction", 0.2);
  experiment.deployment = DeploymentConfig::with_mean_count(mean_bs, density, guard);
  if (config.has("deployment", "half_width")) {
    experiment.deployment.half_width = config.get_double("deployment", "half_width", 0.0);
  }
  experiment.deployment.seed = experiment.seed;
  experiment.validate();
  return experiment;
}

namespace {

// shortest representation that parses back to the same double
std::string format_value(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  (void)ec;
  return std::string(buffer, end);
}

}  // namespace

KeyValueConfig config_from_experiment(const ExperimentConfig& experiment) {
  KeyValueConfig config;
  const auto put = [&](const std::string& section, const std::string& key, auto value) {
    if constexpr (std::is_floating_point_v<decltype(value)>) {
      config.set(section, key, format_value(value));
    } else {
      config.set(section, key, std::to_string(value));
    }
  };
  const auto put_list = [&](const std::string& section, const std::string& key,
                            const std::vector<double>& values) {
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) joined += " ";
      joined += format_value(values[i]);
    }
    config.set(section, key, joined);
  };

  put("experiment", "runs", experiment.runs);
  put("experiment", "seed", experiment.seed);
  put("experiment", "eps_1", experiment.eps_1);
  put("experiment", "eps_2", experiment.eps_2);
  put_list("experiment", "mu_grid", experiment.mu_grid);
  put_list("experiment", "alpha_grid", experiment.alpha_grid);
  put_list("experiment", "lambda_grid", experiment.lambda_grid);
  put("experiment", "co_cell_max_tries", experiment.co_cell_max_tries);
  config.set("experiment", "objective",
             experiment.objective ? to_string(*experiment.objective) : "both");
  fmt.str("");
  bool first = true;
  for (SchemeKind scheme : experiment.schemes) {
    if (!first) fmt << " ";
    first = false;
    fmt << to_string(scheme);
  }
  config.set("experiment", "schemes", fmt.str());

  put("deployment", "density", experiment.deployment.density);
  put("deployment", "half_width", experiment.deployment.half_width);
  put("deployment", "mean_bs", experiment.deployment.mean_bs_count());
  put("deployment", "guard_fraction", experiment.deployment.guard_fraction);
  return config;
}

}  // namespace noma
