#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lambdaforge/complexfn.hpp"
#include "lambdaforge/errors.hpp"

namespace lforge {

// key/value job description with [section] headers, '#' comments, decimal
// numerics; raw text is kept verbatim for the report echo
struct Config {
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> entries;
    };
    std::string raw_text;
    std::vector<Section> sections;

    std::optional<std::string> find(const std::string& section, const std::string& key) const;
    bool has(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    std::string require_string(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    long long get_int(const std::string& section, const std::string& key,
                      long long fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
    cplx get_complex(const std::string& section, const std::string& key, cplx fallback) const;
    std::vector<cplx> get_complex_list(const std::string& section, const std::string& key) const;
    std::vector<double> get_double_list(const std::string& section, const std::string& key) const;
};

Config parse_config_text(const std::string& text);
Config load_config(const std::string& path);

double parse_double_strict(const std::string& text, const std::string& what);
// accepts "2", "-1.5", "0.4i", "4+0.4i", "-3-0.4e-1i", "i", "-i"
cplx parse_complex(const std::string& text);
std::vector<std::string> split_list(const std::string& text, char sep);

}  // namespace lforge
