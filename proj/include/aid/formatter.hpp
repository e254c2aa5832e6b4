#pragma once

#include <string>

#include "aid/model.hpp"

namespace aid {

enum class FormatStyle { Plain, Markdown };

// Single-line canonical rendering:
//   AID Statement: Heading: text; Heading: text.
// Markdown style wraps each heading in single asterisks.
std::string format_text(const AidStatement& statement, FormatStyle style = FormatStyle::Plain);

// Replaces resolved headings with their canonical display and optionally
// sorts pairs by ordinal. Unresolved pairs travel with the resolved pair
// they follow.
AidStatement canonicalize(const AidStatement& statement, bool reorder);

}  // namespace aid
