#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "aid/model.hpp"
#include "json.hpp"

namespace aid {

inline constexpr std::string_view kInterchangeVersion = "1.0";

enum class InterchangeErrorKind { Malformed, UnsupportedVersion, EmptyPairs, SchemaViolation };

class InterchangeError : public std::runtime_error {
public:
    InterchangeError(InterchangeErrorKind kind, std::string pointer, const std::string& message)
        : std::runtime_error(pointer.empty() ? message : pointer + ": " + message),
          kind_(kind),
          pointer_(std::move(pointer)) {}

    InterchangeErrorKind kind() const { return kind_; }
    // JSON pointer to the offending value ("" for the document root).
    const std::string& pointer() const { return pointer_; }

private:
    InterchangeErrorKind kind_;
    std::string pointer_;
};

// {"aid_version":"1.0","pairs":[{"ordinal":..,"slug":..,"display":..,"raw":..,"text":..}]}
// Unresolved headings carry null ordinal, slug, and display. Spans, when
// requested, are added per pair as "heading_span" and "text_span".
nlohmann::ordered_json to_json_value(const AidStatement& statement, bool include_spans = false);

// Compact, no trailing newline.
std::string to_json(const AidStatement& statement, bool include_spans = false);

AidStatement from_json(std::string_view document);
AidStatement from_json_value(const nlohmann::json& document);

// JSON Schema (draft 2020-12) describing to_json output.
std::string json_schema();

}  // namespace aid
