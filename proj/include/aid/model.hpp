#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aid/taxonomy.hpp"

namespace aid {

struct SourceSpan {
    std::size_t start_byte = 0;
    std::size_t end_byte = 0;
    std::size_t start_line = 1;
    std::size_t start_col = 1;

    std::size_t length() const { return end_byte - start_byte; }
    bool operator==(const SourceSpan&) const = default;
};

struct DisclosurePair {
    std::string heading_raw;
    std::optional<HeadingId> heading;
    std::string statement;
    SourceSpan heading_span;
    SourceSpan statement_span;
};

enum class Origin { Parsed, Built };

struct AidStatement {
    std::vector<DisclosurePair> pairs;
    SourceSpan label_span;
    bool terminated = true;
    Origin origin = Origin::Built;
};

// Same headings, texts, and termination; spans, origin, and the raw spelling
// of resolved headings are ignored.
bool equivalent(const AidStatement& a, const AidStatement& b);

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);

struct Diagnostic {
    std::string code;
    Severity severity = Severity::Error;
    std::string message;
    SourceSpan span;
    std::optional<std::string> suggestion;
};

namespace codes {
inline constexpr std::string_view kMissingLabel = "AID-E001";
inline constexpr std::string_view kToolNotFirst = "AID-E002";
inline constexpr std::string_view kMissingTerminator = "AID-E003";
inline constexpr std::string_view kColonInText = "AID-E004";
inline constexpr std::string_view kMissingSeparator = "AID-E006";
inline constexpr std::string_view kEmpty = "AID-E007";
inline constexpr std::string_view kUnknownHeading = "AID-E008";
inline constexpr std::string_view kDuplicateHeading = "AID-W101";
inline constexpr std::string_view kOutOfOrder = "AID-W102";
inline constexpr std::string_view kAliasHeading = "AID-W103";
inline constexpr std::string_view kShortText = "AID-W104";
inline constexpr std::string_view kConfusablePunctuation = "AID-W105";
inline constexpr std::string_view kTrailingContent = "AID-W106";
inline constexpr std::string_view kLabelCasing = "AID-W107";
}  // namespace codes

enum class BuildErrorKind { EmptyStatementText, ForbiddenCharacter, ToolSectionDuplicated };

class BuildError : public std::invalid_argument {
public:
    BuildError(BuildErrorKind kind, std::string message, char forbidden = '\0')
        : std::invalid_argument(std::move(message)), kind_(kind), forbidden_(forbidden) {}

    BuildErrorKind kind() const { return kind_; }
    // The offending character for ForbiddenCharacter, otherwise '\0'.
    char forbidden() const { return forbidden_; }

private:
    BuildErrorKind kind_;
    char forbidden_;
};

// Validates statement text against the character rule. Returns the trimmed
// text or throws BuildError.
std::string checked_statement_text(std::string_view text);

// Programmatic construction of statements. The tool section is always the
// first pair and cannot be added again.
class StatementBuilder {
public:
    explicit StatementBuilder(std::string_view tool_description);

    StatementBuilder& add(HeadingId heading, std::string_view statement);

    // Headings added more than once, in order of their first repetition.
    const std::vector<HeadingId>& duplicate_headings() const { return duplicates_; }
    std::size_t size() const { return pairs_.size(); }

    AidStatement finish() const;

private:
    std::vector<DisclosurePair> pairs_;
    std::vector<HeadingId> duplicates_;
};

}  // namespace aid
