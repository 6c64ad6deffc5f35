#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ep3sim/errors.hpp"

namespace ep3sim::cli {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

const std::set<std::string>& Config::known_keys() {
    static const std::set<std::string> keys = {
        // parameter model
        "eta", "g1", "delta1_sign", "kappa_int", "port_split", "delta_k",
        "gamma2_mhz",
        // spectrum / dips grids
        "window_lo", "window_hi", "n_points",
        // eigenvalue sweep
        "g1_min", "g1_max", "g1_count", "delta_cp",
        // enhancement grid
        "eta_list", "xi_list", "xi_min", "xi_max", "xi_count",
        // puiseux
        "xi", "xi_fit_min", "xi_fit_max", "xi_fit_count",
        // kerr drive sweep
        "delta_cd", "kerr_k1", "omega_d_min", "omega_d_max", "omega_d_count",
        // ep3 bracket
        "bracket_lo", "bracket_hi",
    };
    return keys;
}

Config Config::parse_text(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("config line " + std::to_string(lineno)
                                  + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ValidationError("config line " + std::to_string(lineno)
                                  + ": empty key or value");
        }
        if (!known_keys().count(key)) {
            throw ValidationError("config line " + std::to_string(lineno)
                                  + ": unknown key '" + key + "'");
        }
        if (cfg.values_.count(key)) {
            throw ValidationError("config line " + std::to_string(lineno)
                                  + ": duplicate key '" + key + "'");
        }
        cfg.values_[key] = value;
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

double Config::get_double(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) {
        throw ValidationError("missing required config key: " + key);
    }
    char* end = nullptr;
    const double v = std::strtod(it->second.c_str(), &end);
    if (end == it->second.c_str() || *end != '\0') {
        throw ValidationError("config key '" + key + "': not a number: '"
                              + it->second + "'");
    }
    return v;
}

double Config::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

int Config::get_int(const std::string& key) const {
    const double v = get_double(key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ValidationError("config key '" + key + "': expected an integer");
    }
    return i;
}

int Config::get_int(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::vector<double> Config::get_list(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) {
        throw ValidationError("missing required config key: " + key);
    }
    std::vector<double> out;
    std::istringstream in(it->second);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0') {
            throw ValidationError("config key '" + key + "': bad list entry '"
                                  + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ValidationError("config key '" + key + "': empty list");
    }
    return out;
}

std::optional<double> Config::get_optional(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return get_double(key);
}

void Config::require_keys(const std::vector<std::string>& keys) const {
    for (const auto& k : keys) {
        if (!has(k)) throw ValidationError("missing required config key: " + k);
    }
}

}  // namespace ep3sim::cli
