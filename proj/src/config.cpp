#include "lambdaforge/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lforge {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            std::string t = trim(current);
            if (!t.empty()) out.push_back(t);
            current.clear();
        } else {
            current += c;
        }
    }
    std::string t = trim(current);
    if (!t.empty()) out.push_back(t);
    return out;
}

double parse_double_strict(const std::string& text, const std::string& what) {
    std::string t = trim(text);
    if (t.empty()) fail(errc::config, what + ": empty numeric value");
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        fail(errc::config, what + ": cannot parse number '" + t + "'");
    return v;
}

cplx parse_complex(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) fail(errc::config, "empty complex value");
    if (t.back() != 'i' && t.back() != 'I')
        return cplx(parse_double_strict(t, "complex real part"), 0.0);
    std::string body = t.substr(0, t.size() - 1);
    // split at the last +/- that is neither leading nor an exponent sign
    size_t split = std::string::npos;
    for (size_t j = body.size(); j-- > 1;) {
        if (body[j] != '+' && body[j] != '-') continue;
        char prev = body[j - 1];
        if (prev == 'e' || prev == 'E') continue;
        split = j;
        break;
    }
    auto imag_of = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_double_strict(s, "complex imaginary part");
    };
    if (split == std::string::npos) return cplx(0.0, imag_of(body));
    return cplx(parse_double_strict(body.substr(0, split), "complex real part"),
                imag_of(body.substr(split)));
}

Config parse_config_text(const std::string& text) {
    Config cfg;
    cfg.raw_text = text;
    cfg.sections.push_back({"", {}});
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<std::string> problems;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']' || t.size() < 3) {
                problems.push_back("line " + std::to_string(line_no) + ": malformed section header");
                continue;
            }
            cfg.sections.push_back({trim(t.substr(1, t.size() - 2)), {}});
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos) {
            problems.push_back("line " + std::to_string(line_no) + ": expected key = value");
            continue;
        }
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty()) {
            problems.push_back("line " + std::to_string(line_no) + ": empty key");
            continue;
        }
        cfg.sections.back().entries.emplace_back(key, value);
    }
    if (!problems.empty()) {
        std::string joined;
        for (const auto& p : problems) joined += (joined.empty() ? "" : "; ") + p;
        fail(errc::config, joined);
    }
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::config, "cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::optional<std::string> Config::find(const std::string& section, const std::string& key) const {
    std::optional<std::string> found;
    for (const auto& s : sections) {
        if (s.name != section) continue;
        for (const auto& [k, v] : s.entries)
            if (k == key) found = v;  // last assignment wins
    }
    return found;
}

bool Config::has(const std::string& section, const std::string& key) const {
    return find(section, key).has_value();
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    auto v = find(section, key);
    return v ? *v : fallback;
}

std::string Config::require_string(const std::string& section, const std::string& key) const {
    auto v = find(section, key);
    if (!v) fail(errc::config, "missing required key [" + section + "] " + key);
    return *v;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    auto v = find(section, key);
    if (!v) return fallback;
    return parse_double_strict(*v, "[" + section + "] " + key);
}

long long Config::get_int(const std::string& section, const std::string& key,
                          long long fallback) const {
    auto v = find(section, key);
    if (!v) return fallback;
    std::string t = trim(*v);
    char* end = nullptr;
    long long parsed = std::strtoll(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size())
        fail(errc::config, "[" + section + "] " + key + ": cannot parse integer '" + t + "'");
    return parsed;
}

bool Config::get_bool(const std::string& section, const std::string& key, bool fallback) const {
    auto v = find(section, key);
    if (!v) return fallback;
    std::string t = trim(*v);
    std::string lower = t;
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "true" || lower == "1" || lower == "yes" || lower == "on") return true;
    if (lower == "false" || lower == "0" || lower == "no" || lower == "off") return false;
    fail(errc::config, "[" + section + "] " + key + ": cannot parse boolean '" + t + "'");
}

cplx Config::get_complex(const std::string& section, const std::string& key, cplx fallback) const {
    auto v = find(section, key);
    if (!v) return fallback;
    return parse_complex(*v);
}

std::vector<cplx> Config::get_complex_list(const std::string& section,
                                           const std::string& key) const {
    auto v = find(section, key);
    if (!v) return {};
    std::vector<cplx> out;
    for (const auto& item : split_list(*v, ',')) out.push_back(parse_complex(item));
    return out;
}

std::vector<double> Config::get_double_list(const std::string& section,
                                            const std::string& key) const {
    auto v = find(section, key);
    if (!v) return {};
    std::vector<double> out;
    for (const auto& item : split_list(*v, ','))
        out.push_back(parse_double_strict(item, "[" + section + "] " + key));
    return out;
}

}  // namespace lforge
