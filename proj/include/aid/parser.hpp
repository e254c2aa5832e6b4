#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "aid/model.hpp"
#include "aid/text.hpp"

namespace aid {

enum class ParseMode { Strict, Lenient };

struct ParseOutcome {
    std::optional<AidStatement> statement;
    // Sorted by span start.
    std::vector<Diagnostic> diagnostics;
};

enum class ParseErrorKind { NotAStatement, InvalidUtf8 };

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    ParseErrorKind kind() const { return kind_; }

private:
    ParseErrorKind kind_;
};

// Parses one statement. Strict mode drops the statement when any error-level
// diagnostic fires; Lenient keeps a best-effort statement. Throws ParseError
// for invalid UTF-8 and for input with neither a label nor a colon.
ParseOutcome parse_statement(std::string_view input, ParseMode mode);

// First "AID Statement:" label (any case, optional * or _ emphasis).
std::optional<SourceSpan> locate_label(std::string_view input);

struct LabelMatch {
    std::size_t begin = 0;  // includes leading emphasis
    std::size_t end = 0;    // one past the colon and any closing emphasis
    std::size_t word_begin = 0;
    std::size_t word_end = 0;
};

// Label search starting at byte `from`; used by the extractor.
std::optional<LabelMatch> find_label(std::string_view document, std::size_t from);

// Parses document[begin, end) with spans in document coordinates.
ParseOutcome parse_range(std::string_view document, std::size_t begin, std::size_t end, ParseMode mode,
                         const text::LineIndex& lines);

}  // namespace aid
