#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flyq::cli {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Plain-text `key = value` lines. `#` starts a comment (whole line or
/// trailing), blank lines are ignored, keys are normalized to lower case with
/// '_' replaced by '-'. Throws ConfigError naming `source` and the line.
ConfigEntries parse_config(std::istream& in, const std::string& source = "<config>");

ConfigEntries load_config_file(const std::string& path);

} // namespace flyq::cli
