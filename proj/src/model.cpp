#include "aid/model.hpp"

#include <algorithm>

#include "aid/text.hpp"

namespace aid {

bool equivalent(const AidStatement& a, const AidStatement& b) {
    if (a.terminated != b.terminated || a.pairs.size() != b.pairs.size()) return false;
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        const auto& x = a.pairs[i];
        const auto& y = b.pairs[i];
        if (x.heading != y.heading || x.statement != y.statement) return false;
        if (!x.heading && x.heading_raw != y.heading_raw) return false;
    }
    return true;
}

std::string_view to_string(Severity severity) { return severity == Severity::Error ? "error" : "warning"; }

std::string checked_statement_text(std::string_view text) {
    for (char c : text) {
        if (c == ':' || c == ';') {
            throw BuildError(BuildErrorKind::ForbiddenCharacter,
                             std::string("statement text may not contain '") + c + "'", c);
        }
    }
    const std::string_view trimmed = text::trim(text);
    if (trimmed.empty()) throw BuildError(BuildErrorKind::EmptyStatementText, "statement text is empty");
    return std::string(trimmed);
}

StatementBuilder::StatementBuilder(std::string_view tool_description) {
    pairs_.push_back({display_name(HeadingId::ArtificialIntelligenceTool), HeadingId::ArtificialIntelligenceTool,
                      checked_statement_text(tool_description), {}, {}});
}

StatementBuilder& StatementBuilder::add(HeadingId heading, std::string_view statement) {
    if (heading == HeadingId::ArtificialIntelligenceTool) {
        throw BuildError(BuildErrorKind::ToolSectionDuplicated, "the tool section is set at construction");
    }
    std::string text = checked_statement_text(statement);
    const bool seen = std::any_of(pairs_.begin(), pairs_.end(), [&](const auto& p) { return p.heading == heading; });
    if (seen && std::find(duplicates_.begin(), duplicates_.end(), heading) == duplicates_.end()) {
        duplicates_.push_back(heading);
    }
    pairs_.push_back({display_name(heading), heading, std::move(text), {}, {}});
    return *this;
}

AidStatement StatementBuilder::finish() const {
    AidStatement statement;
    statement.pairs = pairs_;
    statement.terminated = true;
    statement.origin = Origin::Built;
    return statement;
}

}  // namespace aid
