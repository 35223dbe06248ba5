#include "holowave/config.hpp"

#include <fstream>
#include <sstream>

#include "holowave/initdata.hpp"

namespace hw {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& where, const std::string& v) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ConfigError(where + ": not a number: '" + v + "'");
    }
}

long to_long(const std::string& where, const std::string& v) {
    try {
        size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ConfigError(where + ": not an integer: '" + v + "'");
    }
}

}  // namespace

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

ExperimentConfig ExperimentConfig::parse_string(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError("line " + std::to_string(lineno) + ": empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
        cfg.data_[section][key] = val;
    }
    return cfg;
}

bool ExperimentConfig::has(const std::string& section, const std::string& key) const {
    const auto s = data_.find(section);
    return s != data_.end() && s->second.count(key) > 0;
}

std::string ExperimentConfig::get_string(const std::string& section,
                                         const std::string& key) const {
    const auto s = data_.find(section);
    if (s == data_.end() || !s->second.count(key))
        throw ConfigError("missing config entry [" + section + "] " + key);
    return s->second.at(key);
}

std::string ExperimentConfig::get_string(const std::string& section, const std::string& key,
                                         const std::string& fallback) const {
    return has(section, key) ? get_string(section, key) : fallback;
}

double ExperimentConfig::get_double(const std::string& section, const std::string& key) const {
    return to_double("[" + section + "] " + key, get_string(section, key));
}

double ExperimentConfig::get_double(const std::string& section, const std::string& key,
                                    double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

long ExperimentConfig::get_int(const std::string& section, const std::string& key) const {
    return to_long("[" + section + "] " + key, get_string(section, key));
}

long ExperimentConfig::get_int(const std::string& section, const std::string& key,
                               long fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

std::vector<double> ExperimentConfig::get_doubles(const std::string& section,
                                                  const std::string& key) const {
    const std::string raw = get_string(section, key);
    std::vector<double> out;
    std::istringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(to_double("[" + section + "] " + key, item));
    }
    return out;
}

std::vector<long> ExperimentConfig::get_ints(const std::string& section,
                                             const std::string& key) const {
    const std::string raw = get_string(section, key);
    std::vector<long> out;
    std::istringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(to_long("[" + section + "] " + key, item));
    }
    return out;
}

Grid ExperimentConfig::grid() const {
    const int n = static_cast<int>(get_int("grid", "n", 128));
    const double period = get_double("grid", "period", kTwoPi);
    try {
        return Grid(n, period);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("[grid]: ") + e.what());
    }
}

Params ExperimentConfig::params() const {
    Params p;
    p.g = get_double("params", "g", 1.0);
    p.gamma = get_double("params", "gamma", 0.0);
    p.delta = get_double("params", "delta", 0.1);
    try {
        p.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("[params]: ") + e.what());
    }
    return p;
}

StepConfig ExperimentConfig::step_config() const {
    StepConfig c;
    c.dt = get_double("step", "dt", 1e-3);
    c.t_end = get_double("step", "t_end", 1.0);
    c.reproject_every = static_cast<int>(get_int("step", "reproject_every", 1));
    c.observer_stride = static_cast<int>(get_int("step", "observer_stride", 1));
    const std::string scheme = get_string("step", "scheme", "rk4");
    if (scheme == "rk4")
        c.scheme = Scheme::rk4;
    else if (scheme == "rk4_integrating_factor")
        c.scheme = Scheme::rk4_integrating_factor;
    else
        throw ConfigError("[step] scheme: unknown scheme '" + scheme + "'");
    try {
        c.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("[step]: ") + e.what());
    }
    return c;
}

Field ExperimentConfig::make_initial(const Grid& g, std::uint64_t seed_override) const {
    const std::string family = get_string("init", "family", "random_bandlimited");
    const double amplitude = get_double("init", "amplitude", 1e-2);
    if (family == "single_mode") {
        const int mode = static_cast<int>(get_int("init", "mode", -1));
        try {
            return single_mode(g, mode, amplitude);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("[init]: ") + e.what());
        }
    }
    if (family == "random_bandlimited") {
        const auto seed = seed_override != 0
                              ? seed_override
                              : static_cast<std::uint64_t>(get_int("init", "seed", 1));
        const int band = static_cast<int>(get_int("init", "band", 8));
        try {
            return random_bandlimited(g, seed, amplitude, band);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("[init]: ") + e.what());
        }
    }
    throw ConfigError("[init] family: unknown family '" + family + "'");
}

std::string ExperimentConfig::experiment_name() const {
    return get_string("experiment", "name", "");
}

}  // namespace hw
