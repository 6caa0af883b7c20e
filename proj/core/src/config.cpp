#include "slgen/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace slgen {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool valid_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

// strips quotes from a quoted scalar; leaves bare tokens alone
std::string unquote(const std::string& s, const std::string& origin, long line) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    if (!s.empty() && (s.front() == '"' || s.back() == '"'))
        throw ConfigParseError(origin + ":" + std::to_string(line) + ": unbalanced quotes");
    return s;
}

std::vector<std::string> split_list(const std::string& body, const std::string& origin,
                                    long line) {
    std::vector<std::string> items;
    std::string cur;
    bool in_quotes = false;
    for (char c : body) {
        if (c == '"') in_quotes = !in_quotes;
        if (c == ',' && !in_quotes) {
            items.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (in_quotes)
        throw ConfigParseError(origin + ":" + std::to_string(line) + ": unbalanced quotes");
    const std::string last = trim(cur);
    if (!last.empty()) items.push_back(last);
    for (const std::string& s : items)
        if (s.empty())
            throw ConfigParseError(origin + ":" + std::to_string(line) + ": empty list item");
    return items;
}

double parse_double_token(const std::string& tok, const std::string& context) {
    try {
        size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigParseError(context + ": '" + tok + "' is not a number");
    }
}

} // namespace

Config Config::parse(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::string section;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigParseError(origin + ":" + std::to_string(lineno) +
                                       ": section header missing ']'");
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty())
                throw ConfigParseError(origin + ":" + std::to_string(lineno) +
                                       ": empty section name");
            std::istringstream parts(section);
            std::string part;
            while (std::getline(parts, part, '.'))
                if (!valid_ident(part))
                    throw ConfigParseError(origin + ":" + std::to_string(lineno) +
                                           ": bad section name '" + section + "'");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigParseError(origin + ":" + std::to_string(lineno) +
                                   ": expected 'key = value'");
        const std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (!valid_ident(key))
            throw ConfigParseError(origin + ":" + std::to_string(lineno) + ": bad key '" + key +
                                   "'");
        if (value.empty())
            throw ConfigParseError(origin + ":" + std::to_string(lineno) + ": empty value for '" +
                                   key + "'");
        Raw raw;
        raw.line = lineno;
        if (value.front() == '[') {
            if (value.back() != ']')
                throw ConfigParseError(origin + ":" + std::to_string(lineno) +
                                       ": list missing ']'");
            raw.is_list = true;
            for (const std::string& item :
                 split_list(value.substr(1, value.size() - 2), origin, lineno))
                raw.items.push_back(unquote(item, origin, lineno));
        } else {
            raw.text = unquote(value, origin, lineno);
        }
        const std::string full = section.empty() ? key : section + "." + key;
        if (cfg.values_.count(full))
            throw ConfigParseError(origin + ":" + std::to_string(lineno) + ": duplicate key '" +
                                   full + "'");
        cfg.values_.emplace(full, std::move(raw));
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigParseError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

const Config::Raw& Config::raw(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        throw ValidationError(origin_ + ": missing required key '" + key + "'");
    return it->second;
}

void Config::fail(const std::string& key, const std::string& why) const {
    const auto it = values_.find(key);
    const std::string at =
        it == values_.end() ? origin_ : origin_ + ":" + std::to_string(it->second.line);
    throw ValidationError(at + ": key '" + key + "' " + why);
}

double Config::get_double(const std::string& key) const {
    const Raw& r = raw(key);
    if (r.is_list) fail(key, "is a list, expected a number");
    return parse_double_token(r.text, origin_ + ": key '" + key + "'");
}

long Config::get_long(const std::string& key) const {
    const double v = get_double(key);
    const long l = static_cast<long>(v);
    if (double(l) != v) fail(key, "must be an integer");
    return l;
}

bool Config::get_bool(const std::string& key) const {
    const Raw& r = raw(key);
    if (r.is_list) fail(key, "is a list, expected a boolean");
    if (r.text == "true") return true;
    if (r.text == "false") return false;
    fail(key, "must be 'true' or 'false'");
}

std::string Config::get_string(const std::string& key) const {
    const Raw& r = raw(key);
    if (r.is_list) fail(key, "is a list, expected a scalar");
    return r.text;
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    const Raw& r = raw(key);
    std::vector<double> out;
    if (!r.is_list) {
        out.push_back(parse_double_token(r.text, origin_ + ": key '" + key + "'"));
        return out;
    }
    out.reserve(r.items.size());
    for (const std::string& item : r.items)
        out.push_back(parse_double_token(item, origin_ + ": key '" + key + "'"));
    return out;
}

std::vector<std::string> Config::get_string_list(const std::string& key) const {
    const Raw& r = raw(key);
    if (!r.is_list) return {r.text};
    return r.items;
}

double Config::get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

long Config::get_long_or(const std::string& key, long fallback) const {
    return has(key) ? get_long(key) : fallback;
}

bool Config::get_bool_or(const std::string& key, bool fallback) const {
    return has(key) ? get_bool(key) : fallback;
}

std::string Config::get_string_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? get_string(key) : fallback;
}

std::vector<std::string> Config::keys_with_prefix(const std::string& prefix) const {
    std::vector<std::string> keys;
    for (const auto& [k, v] : values_) {
        (void)v;
        if (k.rfind(prefix, 0) == 0) keys.push_back(k);
    }
    return keys;
}

std::vector<std::string> Config::subsections(const std::string& prefix) const {
    std::vector<std::string> names;
    for (const auto& [k, v] : values_) {
        (void)v;
        if (k.rfind(prefix, 0) != 0) continue;
        const std::string rest = k.substr(prefix.size());
        const auto dot = rest.find('.');
        if (dot == std::string::npos) continue;
        const std::string name = rest.substr(0, dot);
        if (names.empty() || names.back() != name) names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

} // namespace slgen
