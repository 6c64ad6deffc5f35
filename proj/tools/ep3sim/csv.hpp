#pragma once

// Deterministic CSV emission: fixed %.12g formatting, '\n' line ends, no
// locale involvement. Identical inputs must give byte-identical files.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ep3sim/errors.hpp"

namespace ep3sim::cli {

inline std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) {
        for (size_t i = 0; i < header.size(); ++i) {
            if (i) out_ << ',';
            out_ << header[i];
        }
        out_ << '\n';
        width_ = header.size();
    }

    void row(const std::vector<double>& values) {
        if (values.size() != width_) {
            throw ValidationError("csv row width mismatch");
        }
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) out_ << ',';
            out_ << fmt_g(values[i]);
        }
        out_ << '\n';
    }

    void kv(const std::string& key, double value) {
        out_ << key << ',' << fmt_g(value) << '\n';
    }

    std::string str() const { return out_.str(); }

    void save(const std::string& path) const {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ValidationError("cannot write output file: " + path);
        f << out_.str();
    }

private:
    std::ostringstream out_;
    size_t width_ = 0;
};

}  // namespace ep3sim::cli
