#include "flyq/cli/config_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace flyq::cli {

namespace {

std::string trim(const std::string& s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    auto b = std::find_if(s.begin(), s.end(), not_space);
    auto e = std::find_if(s.rbegin(), s.rend(), not_space).base();
    return b < e ? std::string(b, e) : std::string();
}

bool valid_key(const std::string& key) {
    if (key.empty()) {
        return false;
    }
    return std::all_of(key.begin(), key.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '-' || c == '_';
    });
}

} // namespace

ConfigEntries parse_config(std::istream& in, const std::string& source) {
    ConfigEntries entries;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        const std::string where = source + ":" + std::to_string(number);
        if (eq == std::string::npos) {
            throw ConfigError(where + ": expected 'key = value'");
        }
        std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (!valid_key(key)) {
            throw ConfigError(where + ": malformed key '" + key + "'");
        }
        if (value.empty()) {
            throw ConfigError(where + ": missing value for '" + key + "'");
        }
        std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) {
            return c == '_' ? '-' : static_cast<char>(std::tolower(c));
        });
        entries.emplace_back(std::move(key), value);
    }
    return entries;
}

ConfigEntries load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse_config(in, path);
}

} // namespace flyq::cli
