#pragma once

// Checks shared by the parser and the linter.

#include <cstddef>
#include <optional>
#include <string_view>

#include "aid/model.hpp"

namespace aid::rules {

std::optional<Diagnostic> tool_first(const AidStatement& statement);

Diagnostic unknown_heading(const DisclosurePair& pair, Severity severity, std::size_t max_suggestions);

Diagnostic alias_heading(const DisclosurePair& pair);

// Span of `length` bytes at `offset` inside the text covered by `base`.
// Line and column are advanced through `base_text`.
SourceSpan span_within(const SourceSpan& base, std::string_view base_text, std::size_t offset, std::size_t length);

void sort_by_span(std::vector<Diagnostic>& diagnostics);

}  // namespace aid::rules
