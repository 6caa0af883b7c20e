// config.hpp — sectioned key/value run-configuration files (grammar in
// docs/config-grammar.md)
#pragma once

#include <map>
#include <string>
#include <vector>

#include "slgen/errors.hpp"

namespace slgen {

// Flat view of a sectioned config: keys are "section.subsection.key".
class Config {
public:
    static Config parse(const std::string& text, const std::string& origin = "<string>");
    static Config parse_file(const std::string& path);

    bool has(const std::string& key) const;

    double get_double(const std::string& key) const;
    long get_long(const std::string& key) const;
    bool get_bool(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const;
    std::vector<std::string> get_string_list(const std::string& key) const;

    double get_double_or(const std::string& key, double fallback) const;
    long get_long_or(const std::string& key, long fallback) const;
    bool get_bool_or(const std::string& key, bool fallback) const;
    std::string get_string_or(const std::string& key, const std::string& fallback) const;

    // sorted keys below a section prefix ("density." -> density.g0.form, ...)
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const;
    // sorted immediate child section names below a prefix
    std::vector<std::string> subsections(const std::string& prefix) const;

    const std::string& origin() const { return origin_; }

private:
    struct Raw {
        std::string text;
        bool is_list{false};
        std::vector<std::string> items;
        long line{0};
    };

    const Raw& raw(const std::string& key) const;
    [[noreturn]] void fail(const std::string& key, const std::string& why) const;

    std::map<std::string, Raw> values_;
    std::string origin_;
};

} // namespace slgen
