#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aid/model.hpp"
#include "aid/parser.hpp"

namespace aid {

struct RuleInfo {
    std::string_view code;
    Severity default_severity;
    std::string_view description;
};

// Every rule, errors before warnings. Codes are never reused.
std::span<const RuleInfo> rule_catalog();
const RuleInfo* find_rule(std::string_view code);

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LintConfig {
    ParseMode mode = ParseMode::Lenient;
    // std::nullopt switches the rule off.
    std::map<std::string, std::optional<Severity>> severity_overrides;
    std::size_t max_suggestions = 3;

    // Throws ConfigError for uncataloged codes, a zero suggestion limit, or
    // grammar rules switched off in Strict mode.
    void validate() const;
};

// Reads the INI/TOML-style config:
//
//   [lint]
//   mode = "strict"          # or "lenient"
//   max_suggestions = 3
//
//   [rules]
//   AID-W102 = "off"         # or "error" / "warning"
LintConfig parse_config(std::string_view source);
LintConfig load_config(const std::filesystem::path& path);

enum class Verdict { Pass, Fail };

struct LintReport {
    std::vector<Diagnostic> diagnostics;
    std::size_t error_count = 0;
    std::size_t warning_count = 0;
    Verdict verdict = Verdict::Pass;
};

LintReport lint(const AidStatement& statement, std::span<const Diagnostic> parse_diagnostics,
                const LintConfig& config);

// Parses `input` leniently and lints the result under `config`. Input
// without any statement yields a failing report. Throws ParseError on
// invalid UTF-8.
LintReport lint_text(std::string_view input, const LintConfig& config);

// Applies overrides, sorts, and tallies an arbitrary diagnostic list.
LintReport make_report(std::vector<Diagnostic> diagnostics, const LintConfig& config);

}  // namespace aid
