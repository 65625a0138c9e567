#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lambdaforge/complexfn.hpp"

namespace lforge {

std::string format_double(double v);
std::string format_complex(cplx v);

// Plain-text run report. Sections appear in insertion order; the raw config
// text is echoed verbatim so a report fully determines its inputs. Everything
// except the [timing] section must be reproducible for a fixed config + seed.
struct Report {
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> entries;
    };

    std::vector<Section> sections;
    std::vector<std::string> summary;
    std::string config_echo;

    Section& add_section(const std::string& name);
    void add(Section& s, const std::string& key, const std::string& value);
    void add(Section& s, const std::string& key, double value);
    void add(Section& s, const std::string& key, cplx value);
    void add(Section& s, const std::string& key, long long value);
    void add(Section& s, const std::string& key, bool value);

    std::string to_text() const;
};

}  // namespace lforge
