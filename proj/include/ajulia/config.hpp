#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "ajulia/error.hpp"
#include "ajulia/rational.hpp"

namespace ajulia {

/// Flat key/value settings for one CLI subcommand. Keys are flag names without the
/// leading dashes ("max-iter"); values are the raw flag text.
struct RunConfig {
    std::map<std::string, std::string> values;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;

    [[nodiscard]] bool has(const std::string& key) const { return values.count(key) != 0; }

    /// Canonical text: one `key = "value"` line per entry, keys sorted.
    [[nodiscard]] std::string serialize() const
    {
        std::string out;
        for (const auto& [key, value] : values) {
            out += key + " = \"" + value + "\"\n";
        }
        return out;
    }
};

/// Parses `key = value` lines. Blank lines and lines starting with '#' are skipped; one
/// pair of surrounding double quotes is stripped from a value.
[[nodiscard]] inline RunConfig parse_config(std::string_view text)
{
    RunConfig config;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string_view s = detail::trim(line);
        if (s.empty() || s.front() == '#') {
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::Parse, "config line " + std::to_string(number) + ": expected key = value");
        }
        const std::string_view key = detail::trim(s.substr(0, eq));
        std::string_view value = detail::trim(s.substr(eq + 1));
        const bool valid_key = !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '-' || c == '_';
        });
        if (!valid_key) {
            throw Error(ErrorKind::Parse, "config line " + std::to_string(number) + ": bad key");
        }
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        config.values[std::string(key)] = std::string(value);
    }
    return config;
}

[[nodiscard]] inline RunConfig load_config(const std::string& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw Error(ErrorKind::IoFailure, "cannot read config '" + path + "'");
    }
    std::ostringstream text;
    text << file.rdbuf();
    return parse_config(text.str());
}

} // namespace ajulia
