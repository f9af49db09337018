#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fcpsim/sim.hpp"

namespace fcpsim {

// Raised for unreadable, malformed, or inconsistent configuration;
// mapped to exit code 2 by the command-line driver.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat INI-style configuration: `[section]` headers and `key = value`
// lines; '#' starts a comment; unknown keys are tolerated.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;

  double get_double(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key,
                    double fallback) const;

  long get_long(const std::string& section, const std::string& key) const;
  long get_long(const std::string& section, const std::string& key,
                long fallback) const;

  std::uint64_t get_u64(const std::string& section, const std::string& key,
                        std::uint64_t fallback) const;

  // Comma-separated numeric lists.
  std::vector<double> get_double_list(const std::string& section,
                                      const std::string& key) const;
  std::vector<std::uint64_t> get_u64_list(const std::string& section,
                                          const std::string& key) const;

  // Every key touched by a getter, in touch order, as
  // "section.key" -> value-as-written pairs (defaults included).
  // Used to echo the resolved configuration into output files.
  const std::vector<std::pair<std::string, std::string>>& resolved() const {
    return resolved_;
  }

  // Overwrite a resolved entry (used when a command-line flag
  // supersedes a config value, so the echo matches what actually ran).
  void override_resolved(const std::string& section, const std::string& key,
                         const std::string& value) const;

 private:
  std::string raw(const std::string& section, const std::string& key) const;
  void note(const std::string& section, const std::string& key,
            const std::string& value) const;

  std::map<std::string, std::string> values_;  // "section.key" -> value
  mutable std::vector<std::pair<std::string, std::string>> resolved_;
};

// Assemble domain objects from a parsed config.  Seed overrides
// replace the corresponding config seeds when present.
TrafficSpec traffic_spec_from_config(const Config& cfg,
                                     std::optional<std::uint64_t> seed_override);
Scenario scenario_from_config(const Config& cfg,
                              std::optional<std::uint64_t> seed_override);

}  // namespace fcpsim
