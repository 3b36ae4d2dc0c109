// SPDX-License-Identifier: Apache-2.0
#ifndef STRATITO_CONFIG_HPP
#define STRATITO_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

namespace stratito {

/// Invalid or unresolvable experiment configuration; CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat key = value configuration with [section] grouping; keys are
/// addressed as "section.key".  The raw text is kept so the manifest can
/// capture the experiment verbatim.
class ExperimentConfig {
  public:
    static ExperimentConfig parse_file(const std::filesystem::path& path);
    static ExperimentConfig parse_string(const std::string& text);

    bool has(const std::string& key) const { return values_.count(key) > 0; }
    std::string get(const std::string& key) const;
    std::string get(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    const std::map<std::string, std::string>& values() const { return values_; }
    const std::string& raw_text() const { return raw_; }

  private:
    std::map<std::string, std::string> values_;
    std::string raw_;
};

}  // namespace stratito

#endif
