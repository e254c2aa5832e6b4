#include "rules.hpp"

#include <algorithm>

#include "aid/taxonomy.hpp"

namespace aid::rules {

std::optional<Diagnostic> tool_first(const AidStatement& statement) {
    if (statement.pairs.empty()) return std::nullopt;
    const DisclosurePair& first = statement.pairs.front();
    if (first.heading == HeadingId::ArtificialIntelligenceTool) return std::nullopt;
    if (!first.heading) {
        // A misspelt tool heading is reported as unknown, not as misplaced.
        auto nearest = Taxonomy::instance().suggest(first.heading_raw, 1);
        if (!nearest.empty() && nearest.front().entry->id == HeadingId::ArtificialIntelligenceTool) {
            return std::nullopt;
        }
    }
    const std::string& tool = display_name(HeadingId::ArtificialIntelligenceTool);
    return Diagnostic{std::string(codes::kToolNotFirst), Severity::Error,
                      "statement must begin with the '" + tool + "' section, found '" + first.heading_raw + "'",
                      first.heading_span, tool};
}

Diagnostic unknown_heading(const DisclosurePair& pair, Severity severity, std::size_t max_suggestions) {
    Diagnostic d{std::string(codes::kUnknownHeading), severity, "unknown heading '" + pair.heading_raw + "'",
                 pair.heading_span, std::nullopt};
    const auto candidates = Taxonomy::instance().suggest(pair.heading_raw, max_suggestions);
    if (!candidates.empty()) {
        d.message += "; did you mean ";
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (i > 0) d.message += i + 1 == candidates.size() ? " or " : ", ";
            d.message += "'" + candidates[i].entry->display + "'";
        }
        d.message += "?";
        d.suggestion = candidates.front().entry->display;
    }
    return d;
}

Diagnostic alias_heading(const DisclosurePair& pair) {
    const std::string& canonical = display_name(*pair.heading);
    return Diagnostic{std::string(codes::kAliasHeading), Severity::Warning,
                      "non-canonical heading '" + pair.heading_raw + "'; the canonical form is '" + canonical + "'",
                      pair.heading_span, canonical};
}

SourceSpan span_within(const SourceSpan& base, std::string_view base_text, std::size_t offset, std::size_t length) {
    SourceSpan span{base.start_byte + offset, base.start_byte + offset + length, base.start_line, base.start_col};
    for (std::size_t i = 0; i < offset && i < base_text.size(); ++i) {
        const char c = base_text[i];
        if (c == '\n') {
            ++span.start_line;
            span.start_col = 1;
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            ++span.start_col;
        }
    }
    return span;
}

void sort_by_span(std::vector<Diagnostic>& diagnostics) {
    std::stable_sort(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (a.span.start_byte != b.span.start_byte) return a.span.start_byte < b.span.start_byte;
        return a.code < b.code;
    });
}

}  // namespace aid::rules
