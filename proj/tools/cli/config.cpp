#include "cli/config.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "trevi/errors.hpp"

namespace trevi::cli {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        out.push_back(strip(item));
    return out;
}

} // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open config " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::int64_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::ConfigError,
                        origin + ":" + std::to_string(row) + ": expected 'key = value'");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty())
            throw Error(ErrorCode::ConfigError, origin + ":" + std::to_string(row) + ": empty key");
        if (cfg.values_.count(key))
            throw Error(ErrorCode::ConfigError,
                        origin + ":" + std::to_string(row) + ": duplicate key '" + key + "'");
        cfg.values_[key] = value;
    }
    return cfg;
}

const std::string* Config::find(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        return nullptr;
    consumed_.insert(key);
    return &it->second;
}

bool Config::has(const std::string& key) const { return values_.count(key) != 0; }

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    const std::string* v = find(key);
    return v ? *v : fallback;
}

std::int64_t Config::get_int(const std::string& key, std::int64_t fallback) const {
    const std::string* v = find(key);
    if (!v)
        return fallback;
    errno = 0;
    char* end = nullptr;
    const long long parsed = std::strtoll(v->c_str(), &end, 10);
    if (errno != 0 || *v == "" || end != v->c_str() + v->size())
        throw Error(ErrorCode::ConfigError, "key '" + key + "': expected integer, got '" + *v + "'");
    return parsed;
}

std::uint64_t Config::get_uint(const std::string& key, std::uint64_t fallback) const {
    const std::string* v = find(key);
    if (!v)
        return fallback;
    errno = 0;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v->c_str(), &end, 10);
    if (errno != 0 || *v == "" || end != v->c_str() + v->size() || v->front() == '-')
        throw Error(ErrorCode::ConfigError,
                    "key '" + key + "': expected unsigned integer, got '" + *v + "'");
    return parsed;
}

double Config::get_double(const std::string& key, double fallback) const {
    const std::string* v = find(key);
    if (!v)
        return fallback;
    errno = 0;
    char* end = nullptr;
    const double parsed = std::strtod(v->c_str(), &end);
    if (errno != 0 || *v == "" || end != v->c_str() + v->size())
        throw Error(ErrorCode::ConfigError, "key '" + key + "': expected real, got '" + *v + "'");
    return parsed;
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    const std::string* v = find(key);
    if (!v)
        throw Error(ErrorCode::ConfigError, "missing required list key '" + key + "'");
    std::vector<double> out;
    for (const std::string& item : split_commas(*v)) {
        errno = 0;
        char* end = nullptr;
        const double parsed = std::strtod(item.c_str(), &end);
        if (errno != 0 || item.empty() || end != item.c_str() + item.size())
            throw Error(ErrorCode::ConfigError,
                        "key '" + key + "': expected real list entry, got '" + item + "'");
        out.push_back(parsed);
    }
    return out;
}

std::vector<std::int64_t> Config::get_int_list(const std::string& key) const {
    const std::string* v = find(key);
    if (!v)
        throw Error(ErrorCode::ConfigError, "missing required list key '" + key + "'");
    std::vector<std::int64_t> out;
    for (const std::string& item : split_commas(*v)) {
        errno = 0;
        char* end = nullptr;
        const long long parsed = std::strtoll(item.c_str(), &end, 10);
        if (errno != 0 || item.empty() || end != item.c_str() + item.size())
            throw Error(ErrorCode::ConfigError,
                        "key '" + key + "': expected integer list entry, got '" + item + "'");
        out.push_back(parsed);
    }
    return out;
}

std::vector<std::string> Config::get_string_list(const std::string& key) const {
    const std::string* v = find(key);
    if (!v)
        throw Error(ErrorCode::ConfigError, "missing required list key '" + key + "'");
    return split_commas(*v);
}

void Config::set(const std::string& key, const std::string& value) { values_[key] = value; }

void Config::ensure_all_consumed() const {
    for (const auto& [key, value] : values_)
        if (!consumed_.count(key))
            throw Error(ErrorCode::ConfigError, origin_ + ": unknown key '" + key + "'");
}

} // namespace trevi::cli
