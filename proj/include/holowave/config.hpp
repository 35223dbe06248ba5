#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "holowave/timestepper.hpp"
#include "holowave/waterwave.hpp"

namespace hw {

// INI-style experiment configuration: [section] headers, key = value lines,
// '#' comments, comma-separated lists.  Typed accessors throw ConfigError
// with the offending section/key on parse failure.
class ExperimentConfig {
  public:
    static ExperimentConfig parse_file(const std::string& path);
    static ExperimentConfig parse_string(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    long get_int(const std::string& section, const std::string& key) const;
    long get_int(const std::string& section, const std::string& key, long fallback) const;
    std::vector<double> get_doubles(const std::string& section, const std::string& key) const;
    std::vector<long> get_ints(const std::string& section, const std::string& key) const;

    // Assembled pieces used by every experiment.
    Grid grid() const;
    Params params() const;
    StepConfig step_config() const;
    // Initial data per the [init] section (family = single_mode |
    // random_bandlimited); seed_override, when nonzero, replaces [init] seed.
    Field make_initial(const Grid& g, std::uint64_t seed_override = 0) const;

    std::string experiment_name() const;

  private:
    std::map<std::string, std::map<std::string, std::string>> data_;
};

}  // namespace hw
