#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace trevi::cli {

/// Flat key-value configuration: one `key = value` per line, '#' comments.
/// Getters record which keys were consumed; ensure_all_consumed() turns
/// leftover (unknown) keys into errors.
class Config {
public:
    Config() = default;

    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin = "<config>");

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::vector<double> get_double_list(const std::string& key) const; // key must exist
    std::vector<std::int64_t> get_int_list(const std::string& key) const;
    std::vector<std::string> get_string_list(const std::string& key) const;

    /// Inject or override a value (CLI flags take precedence over the file).
    void set(const std::string& key, const std::string& value);

    void ensure_all_consumed() const;

    /// Resolved key-value view, for echoing into outputs.
    const std::map<std::string, std::string>& entries() const { return values_; }

private:
    std::string origin_ = "<config>";
    std::map<std::string, std::string> values_;
    mutable std::set<std::string> consumed_;

    const std::string* find(const std::string& key) const;
};

} // namespace trevi::cli
