#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "aid/parser.hpp"

namespace aid {

enum class DocumentFormat { PlainText, Markdown };

struct ExtractedStatement {
    ParseOutcome outcome;
    SourceSpan document_span;
    std::size_t block_index = 0;
};

// Finds every labelled statement block in a document and parses each one
// leniently. A block runs from its label to the end of the paragraph, the
// next label, or (Markdown) the next heading, rule, or code fence. Labels
// inside Markdown code fences are ignored. Throws ParseError on invalid UTF-8.
std::vector<ExtractedStatement> extract(std::string_view document, DocumentFormat format);

}  // namespace aid
