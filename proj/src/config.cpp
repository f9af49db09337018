#include "fcpsim/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fcpsim/csv.hpp"

namespace fcpsim {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& where, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value for " + where + ": '" + text + "'");
  }
}

long parse_long(const std::string& where, const std::string& text) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer value for " + where + ": '" + text + "'");
  }
}

std::uint64_t parse_u64(const std::string& where, const std::string& text) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad seed value for " + where + ": '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line, section;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config: unterminated section header at line " +
                          std::to_string(line_no));
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError("config: empty section name at line " +
                          std::to_string(line_no));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: expected 'key = value' at line " +
                        std::to_string(line_no));
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config: empty key at line " + std::to_string(line_no));
    if (section.empty())
      throw ConfigError("config: key outside any [section] at line " +
                        std::to_string(line_no));
    cfg.values_[section + "." + key] = value;
  }
  return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
  return values_.count(section + "." + key) != 0;
}

std::string Config::raw(const std::string& section, const std::string& key) const {
  const auto it = values_.find(section + "." + key);
  if (it == values_.end())
    throw ConfigError("config: missing required key [" + section + "] " + key);
  return it->second;
}

void Config::note(const std::string& section, const std::string& key,
                  const std::string& value) const {
  const std::string full = section + "." + key;
  for (auto& kv : resolved_) {
    if (kv.first == full) {
      kv.second = value;
      return;
    }
  }
  resolved_.emplace_back(full, value);
}

std::string Config::get_string(const std::string& section,
                               const std::string& key) const {
  const std::string v = raw(section, key);
  note(section, key, v);
  return v;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
  const std::string v = has(section, key) ? raw(section, key) : fallback;
  note(section, key, v);
  return v;
}

double Config::get_double(const std::string& section, const std::string& key) const {
  const double v = parse_double(section + "." + key, raw(section, key));
  note(section, key, format_sig(v));
  return v;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
  if (!has(section, key)) {
    note(section, key, format_sig(fallback));
    return fallback;
  }
  return get_double(section, key);
}

long Config::get_long(const std::string& section, const std::string& key) const {
  const long v = parse_long(section + "." + key, raw(section, key));
  note(section, key, std::to_string(v));
  return v;
}

long Config::get_long(const std::string& section, const std::string& key,
                      long fallback) const {
  if (!has(section, key)) {
    note(section, key, std::to_string(fallback));
    return fallback;
  }
  return get_long(section, key);
}

std::uint64_t Config::get_u64(const std::string& section, const std::string& key,
                              std::uint64_t fallback) const {
  if (!has(section, key)) {
    note(section, key, std::to_string(fallback));
    return fallback;
  }
  const std::uint64_t v = parse_u64(section + "." + key, raw(section, key));
  note(section, key, std::to_string(v));
  return v;
}

std::vector<double> Config::get_double_list(const std::string& section,
                                            const std::string& key) const {
  const std::string text = raw(section, key);
  note(section, key, text);
  std::vector<double> out;
  for (const auto& item : split_list(text))
    out.push_back(parse_double(section + "." + key, item));
  return out;
}

std::vector<std::uint64_t> Config::get_u64_list(const std::string& section,
                                                const std::string& key) const {
  const std::string text = raw(section, key);
  note(section, key, text);
  std::vector<std::uint64_t> out;
  for (const auto& item : split_list(text))
    out.push_back(parse_u64(section + "." + key, item));
  return out;
}

void Config::override_resolved(const std::string& section,
                               const std::string& key,
                               const std::string& value) const {
  const std::string full = section + "." + key;
  for (auto& entry : resolved_) {
    if (entry.first == full) {
      entry.second = value;
      return;
    }
  }
  resolved_.emplace_back(full, value);
}

TrafficSpec traffic_spec_from_config(const Config& cfg,
                                     std::optional<std::uint64_t> seed_override) {
  TrafficSpec spec;
  spec.beta_a = cfg.get_double("traffic", "beta_a", 3.0);
  spec.beta_b = cfg.get_double("traffic", "beta_b", 4.0);
  spec.hurst = cfg.get_double("traffic", "hurst", 0.8);
  spec.ar_order = static_cast<int>(cfg.get_long("traffic", "ar_order", 10));
  spec.purchased_rate = cfg.get_double("traffic", "purchased_rate", 0.6);
  spec.n_slots = cfg.get_long("traffic", "n_slots", 10000);
  spec.seed = cfg.get_u64("traffic", "seed", 42);
  if (seed_override) {
    spec.seed = *seed_override;
    cfg.override_resolved("traffic", "seed", std::to_string(spec.seed));
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(std::string("config: ") + ex.what());
  }
  return spec;
}

Scenario scenario_from_config(const Config& cfg,
                              std::optional<std::uint64_t> seed_override) {
  Scenario sc;
  sc.isp.total_bw_per_user = cfg.get_double("isp", "total_bw_per_user", 1.0);
  sc.isp.plan.price_s = cfg.get_double("isp", "price_s", 0.4);
  sc.isp.plan.qos_min = cfg.get_double("isp", "qos_min", 0.8);
  sc.isp.plan.price_p = cfg.get_double("isp", "price_p", 0.1);
  sc.isp.r_min = cfg.get_double("isp", "r_min", 0.2);
  sc.isp.lambda_penalty = cfg.get_double("isp", "lambda_penalty", 1.0);
  sc.isp.tau_cost = cfg.get_double("isp", "tau_cost", 0.0);
  sc.isp.window_t = static_cast<int>(cfg.get_long("isp", "window_t", 10));

  PrimaryUserSetup user;
  user.traffic = traffic_spec_from_config(cfg, std::nullopt);
  user.contract.purchased_rate = user.traffic.purchased_rate;
  user.contract.theta = cfg.get_double("primary", "theta", 0.9);
  user.contract.price_p = sc.isp.plan.price_p;
  user.contract.lambda_penalty = sc.isp.lambda_penalty;

  const long n_users = cfg.get_long("sim", "n_users", 1);
  if (n_users < 1) throw ConfigError("config: [sim] n_users must be >= 1");
  sc.users.assign(static_cast<std::size_t>(n_users), user);

  sc.n_slots = cfg.get_long("sim", "n_slots", user.traffic.n_slots);
  sc.seed = cfg.get_u64("sim", "seed", 42);
  if (seed_override) {
    sc.seed = *seed_override;
    cfg.override_resolved("sim", "seed", std::to_string(sc.seed));
  }

  sc.estimator.step_rho = cfg.get_double("estimator", "step_rho", 0.05);
  sc.estimator.gamma_init = cfg.get_double("estimator", "gamma_init", 0.5);
  sc.estimator.omega_init = cfg.get_double("estimator", "omega_init", 0.5);
  sc.estimator.gamma_min = cfg.get_double("estimator", "gamma_min", 0.05);

  try {
    sc.validate();
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(std::string("config: ") + ex.what());
  }
  return sc;
}

}  // namespace fcpsim
