#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace aid::text {

bool is_valid_utf8(std::string_view bytes);

// Decodes well-formed UTF-8 into code points. Malformed sequences decode
// byte-by-byte, so the result is defined for any input.
std::u32string decode_utf8(std::string_view bytes);

std::size_t codepoint_count(std::string_view bytes);

constexpr bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

constexpr bool is_emphasis(char c) { return c == '*' || c == '_'; }

constexpr char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }
constexpr char ascii_upper(char c) { return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c; }

constexpr bool is_ascii_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);

// Replaces every run of ASCII whitespace with one space and trims both ends.
std::string collapse_whitespace(std::string_view s);

bool iequals(std::string_view a, std::string_view b);

// Maps byte offsets to 1-based line and column numbers. Columns count code
// points, not bytes.
class LineIndex {
public:
    explicit LineIndex(std::string_view source);

    std::size_t line_of(std::size_t offset) const;
    std::size_t column_of(std::size_t offset) const;

private:
    std::string_view source_;
    std::vector<std::size_t> line_starts_;
};

}  // namespace aid::text
