#include <fstream>
#include <sstream>

#include "aid/linter.hpp"
#include "aid/text.hpp"

namespace aid {

namespace {

std::string unquote(std::string_view value, std::size_t line) {
    value = text::trim(value);
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'')) {
        if (value.back() != value.front()) {
            throw ConfigError("line " + std::to_string(line) + ": unterminated string");
        }
        return std::string(value.substr(1, value.size() - 2));
    }
    return std::string(value);
}

std::string_view strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

}  // namespace

LintConfig parse_config(std::string_view source) {
    LintConfig config;
    std::string section;
    std::size_t number = 0;
    std::istringstream in{std::string(source)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++number;
        const std::string_view line = text::trim(strip_comment(raw));
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(number) + ": ";
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where + "malformed section header");
            section = std::string(text::trim(line.substr(1, line.size() - 2)));
            if (section != "lint" && section != "rules") throw ConfigError(where + "unknown section [" + section + "]");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
        const std::string key = unquote(line.substr(0, eq), number);
        const std::string value = text::to_lower(unquote(line.substr(eq + 1), number));

        if (section == "rules") {
            if (!find_rule(key)) throw ConfigError(where + "unknown rule code '" + key + "'");
            if (value == "off") {
                config.severity_overrides[key] = std::nullopt;
            } else if (value == "error") {
                config.severity_overrides[key] = Severity::Error;
            } else if (value == "warning" || value == "warn") {
                config.severity_overrides[key] = Severity::Warning;
            } else {
                throw ConfigError(where + "severity must be off, error, or warning");
            }
        } else if (section == "lint") {
            if (key == "mode") {
                if (value == "strict") {
                    config.mode = ParseMode::Strict;
                } else if (value == "lenient") {
                    config.mode = ParseMode::Lenient;
                } else {
                    throw ConfigError(where + "mode must be strict or lenient");
                }
            } else if (key == "max_suggestions") {
                try {
                    std::size_t used = 0;
                    const long n = std::stol(value, &used);
                    if (used != value.size() || n <= 0) throw ConfigError(where + "max_suggestions must be positive");
                    config.max_suggestions = static_cast<std::size_t>(n);
                } catch (const std::logic_error&) {
                    throw ConfigError(where + "max_suggestions must be an integer");
                }
            } else {
                throw ConfigError(where + "unknown key '" + key + "'");
            }
        } else {
            throw ConfigError(where + "key outside of a section");
        }
    }
    config.validate();
    return config;
}

LintConfig load_config(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace aid
