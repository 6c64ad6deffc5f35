#pragma once

// Flat "key = value" run configuration. '#' starts a comment, blank lines
// are ignored, keys are validated against the documented schema so a typo
// fails loudly instead of silently running with a default.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ep3sim::cli {

class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text);  // for tests

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    double get_double(const std::string& key) const;                  // required
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    std::vector<double> get_list(const std::string& key) const;       // comma-separated
    std::optional<double> get_optional(const std::string& key) const;

    // Throws ValidationError naming the first missing key.
    void require_keys(const std::vector<std::string>& keys) const;

    // Keys any command accepts; parse rejects everything else.
    static const std::set<std::string>& known_keys();

private:
    std::map<std::string, std::string> values_;
};

}  // namespace ep3sim::cli
