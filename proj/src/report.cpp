#include "lambdaforge/report.hpp"

#include <cstdio>

namespace lforge {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(cplx v) {
    std::string im = format_double(v.imag());
    std::string joiner = (!im.empty() && im.front() == '-') ? "" : "+";
    return format_double(v.real()) + joiner + im + "i";
}

Report::Section& Report::add_section(const std::string& name) {
    sections.push_back({name, {}});
    return sections.back();
}

void Report::add(Section& s, const std::string& key, const std::string& value) {
    s.entries.emplace_back(key, value);
}

void Report::add(Section& s, const std::string& key, double value) {
    s.entries.emplace_back(key, format_double(value));
}

void Report::add(Section& s, const std::string& key, cplx value) {
    s.entries.emplace_back(key, format_complex(value));
}

void Report::add(Section& s, const std::string& key, long long value) {
    s.entries.emplace_back(key, std::to_string(value));
}

void Report::add(Section& s, const std::string& key, bool value) {
    s.entries.emplace_back(key, value ? "true" : "false");
}

std::string Report::to_text() const {
    std::string out;
    for (const auto& s : sections) {
        out += "[" + s.name + "]\n";
        for (const auto& [k, v] : s.entries) out += k + " = " + v + "\n";
        out += "\n";
    }
    out += "--- config ---\n";
    out += config_echo;
    if (!config_echo.empty() && config_echo.back() != '\n') out += "\n";
    out += "--- end config ---\n\n";
    out += "--- summary ---\n";
    for (const auto& line : summary) out += line + "\n";
    return out;
}

}  // namespace lforge
