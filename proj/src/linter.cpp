#include "aid/linter.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include "aid/taxonomy.hpp"
#include "aid/text.hpp"
#include "rules.hpp"

namespace aid {

namespace {

constexpr std::array<RuleInfo, 14> kCatalog{{
    {codes::kMissingLabel, Severity::Error, "The statement must open with the 'AID Statement:' label."},
    {codes::kToolNotFirst, Severity::Error,
     "The first pair must be the 'Artificial Intelligence Tool' section; every statement begins with it."},
    {codes::kMissingTerminator, Severity::Error, "The last pair must end with a period."},
    {codes::kColonInText, Severity::Error, "Statement text may not contain ':'; colons separate headings."},
    {codes::kMissingSeparator, Severity::Error, "Each ';'-separated segment must read 'Heading: statement'."},
    {codes::kEmpty, Severity::Error, "Statement text is empty, or two separators enclose an empty segment."},
    {codes::kUnknownHeading, Severity::Error,
     "Heading is not in the taxonomy. Error in strict mode, warning with suggestions in lenient mode."},
    {codes::kDuplicateHeading, Severity::Warning, "The same heading appears more than once."},
    {codes::kOutOfOrder, Severity::Warning, "Pairs after the tool section are not in taxonomy order."},
    {codes::kAliasHeading, Severity::Warning, "Heading uses a non-canonical spelling of a taxonomy heading."},
    {codes::kShortText, Severity::Warning, "Statement text is shorter than 3 characters; likely a placeholder."},
    {codes::kConfusablePunctuation, Severity::Warning,
     "Statement text contains punctuation that looks like ':' or ';' (fullwidth or compatibility forms)."},
    {codes::kTrailingContent, Severity::Warning, "Prose follows the terminal period in the same paragraph."},
    {codes::kLabelCasing, Severity::Warning, "The label is not written exactly 'AID Statement'."},
}};

constexpr std::array<std::string_view, 9> kConfusables{
    "\xEF\xBC\x9A",  // U+FF1A fullwidth colon
    "\xEF\xBC\x9B",  // U+FF1B fullwidth semicolon
    "\xEF\xB9\x95",  // U+FE55 small colon
    "\xEF\xB9\x94",  // U+FE54 small semicolon
    "\xEF\xB8\x93",  // U+FE13 presentation form colon
    "\xEF\xB8\x94",  // U+FE14 presentation form semicolon
    "\xCD\xBE",      // U+037E greek question mark
    "\xE2\x88\xB6",  // U+2236 ratio
    "\xEA\x9E\x89",  // U+A789 modifier letter colon
};

bool is_grammar_rule(std::string_view code) {
    return code >= "AID-E001" && code <= "AID-E007";
}

class StatementLinter {
public:
    StatementLinter(const AidStatement& statement, std::span<const Diagnostic> parse_diagnostics,
                    const LintConfig& config)
        : statement_(statement), parse_diagnostics_(parse_diagnostics), config_(config) {}

    std::vector<Diagnostic> run();

private:
    SourceSpan text_span(const DisclosurePair& pair, std::size_t offset, std::size_t length) const {
        if (statement_.origin == Origin::Built) return pair.statement_span;
        return rules::span_within(pair.statement_span, pair.statement, offset, length);
    }

    void add(std::string_view code, Severity severity, std::string message, SourceSpan span,
             std::optional<std::string> suggestion = std::nullopt) {
        found_.push_back(Diagnostic{std::string(code), severity, std::move(message), span, std::move(suggestion)});
    }

    void check_pair(const DisclosurePair& pair);
    void check_sequence();

    const AidStatement& statement_;
    std::span<const Diagnostic> parse_diagnostics_;
    const LintConfig& config_;
    std::vector<Diagnostic> found_;
};

std::vector<Diagnostic> StatementLinter::run() {
    if (auto d = rules::tool_first(statement_)) found_.push_back(std::move(*d));

    const bool parser_saw_terminator = std::any_of(parse_diagnostics_.begin(), parse_diagnostics_.end(),
                                                   [](const Diagnostic& d) { return d.code == codes::kMissingTerminator; });
    if (!statement_.terminated && !parser_saw_terminator && !statement_.pairs.empty()) {
        const SourceSpan& last = statement_.pairs.back().statement_span;
        add(codes::kMissingTerminator, Severity::Error, "statement must end with a period",
            {last.end_byte, last.end_byte, last.start_line, last.start_col}, ".");
    }

    for (const auto& pair : statement_.pairs) check_pair(pair);
    check_sequence();

    // Findings computed here win over the parser's copy of the same finding.
    std::set<std::tuple<std::string, std::size_t, std::size_t>> seen;
    for (const auto& d : found_) seen.emplace(d.code, d.span.start_byte, d.span.end_byte);
    for (const auto& d : parse_diagnostics_) {
        if (seen.emplace(d.code, d.span.start_byte, d.span.end_byte).second) found_.push_back(d);
    }
    return std::move(found_);
}

void StatementLinter::check_pair(const DisclosurePair& pair) {
    const std::string& body = pair.statement;
    for (std::size_t i = body.find(':'); i != std::string::npos; i = body.find(':', i + 1)) {
        add(codes::kColonInText, Severity::Error, "':' is not allowed inside statement text", text_span(pair, i, 1));
    }

    const std::string_view trimmed = text::trim(body);
    if (trimmed.empty()) {
        add(codes::kEmpty, Severity::Error, "empty statement text", text_span(pair, 0, 0));
    } else if (text::codepoint_count(trimmed) < 3) {
        add(codes::kShortText, Severity::Warning, "statement text '" + std::string(trimmed) + "' looks like a placeholder",
            pair.statement_span);
    }

    for (std::string_view confusable : kConfusables) {
        for (std::size_t i = body.find(confusable); i != std::string::npos; i = body.find(confusable, i + 1)) {
            add(codes::kConfusablePunctuation, Severity::Warning,
                "'" + std::string(confusable) + "' looks like structural punctuation", text_span(pair, i, confusable.size()));
        }
    }

    if (!pair.heading) {
        const Severity severity = config_.mode == ParseMode::Strict ? Severity::Error : Severity::Warning;
        found_.push_back(rules::unknown_heading(pair, severity, config_.max_suggestions));
    } else if (Taxonomy::instance().resolve(pair.heading_raw).outcome == MatchOutcome::Alias) {
        found_.push_back(rules::alias_heading(pair));
    }
}

void StatementLinter::check_sequence() {
    std::set<HeadingId> seen;
    int highest = 0;
    for (const auto& pair : statement_.pairs) {
        if (!pair.heading) continue;
        const HeadingId id = *pair.heading;
        if (!seen.insert(id).second) {
            add(codes::kDuplicateHeading, Severity::Warning, "heading '" + display_name(id) + "' appears more than once",
                pair.heading_span);
        }
        // The tool section's placement is governed by AID-E002.
        if (id == HeadingId::ArtificialIntelligenceTool) continue;
        if (ordinal(id) < highest) {
            add(codes::kOutOfOrder, Severity::Warning,
                "'" + display_name(id) + "' is out of taxonomy order", pair.heading_span);
        }
        highest = std::max(highest, ordinal(id));
    }
}

}  // namespace

std::span<const RuleInfo> rule_catalog() { return kCatalog; }

const RuleInfo* find_rule(std::string_view code) {
    for (const auto& rule : kCatalog) {
        if (rule.code == code) return &rule;
    }
    return nullptr;
}

void LintConfig::validate() const {
    if (max_suggestions == 0) throw ConfigError("max_suggestions must be positive");
    for (const auto& [code, severity] : severity_overrides) {
        if (!find_rule(code)) throw ConfigError("unknown rule code '" + code + "'");
        if (!severity && mode == ParseMode::Strict && is_grammar_rule(code)) {
            throw ConfigError("rule " + code + " cannot be switched off in strict mode");
        }
    }
}

LintReport make_report(std::vector<Diagnostic> diagnostics, const LintConfig& config) {
    LintReport report;
    for (auto& d : diagnostics) {
        if (auto it = config.severity_overrides.find(d.code); it != config.severity_overrides.end()) {
            if (!it->second) {
                if (!(config.mode == ParseMode::Strict && is_grammar_rule(d.code))) continue;
            } else {
                d.severity = *it->second;
            }
        }
        report.diagnostics.push_back(std::move(d));
    }
    rules::sort_by_span(report.diagnostics);
    for (const auto& d : report.diagnostics) {
        (d.severity == Severity::Error ? report.error_count : report.warning_count) += 1;
    }
    report.verdict = report.error_count > 0 ? Verdict::Fail : Verdict::Pass;
    return report;
}

LintReport lint(const AidStatement& statement, std::span<const Diagnostic> parse_diagnostics,
                const LintConfig& config) {
    return make_report(StatementLinter(statement, parse_diagnostics, config).run(), config);
}

LintReport lint_text(std::string_view input, const LintConfig& config) {
    ParseOutcome outcome;
    try {
        outcome = parse_statement(input, ParseMode::Lenient);
    } catch (const ParseError& e) {
        if (e.kind() != ParseErrorKind::NotAStatement) throw;
        return make_report({Diagnostic{std::string(codes::kMissingLabel), Severity::Error,
                                       "no AID Statement found", SourceSpan{}, "AID Statement:"}},
                           config);
    }
    if (!outcome.statement) return make_report(std::move(outcome.diagnostics), config);
    return lint(*outcome.statement, outcome.diagnostics, config);
}

}  // namespace aid
