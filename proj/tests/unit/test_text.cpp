#include "aid/text.hpp"

#include "doctest.h"

using namespace aid::text;

TEST_CASE("utf8 validation") {
    CHECK(is_valid_utf8(""));
    CHECK(is_valid_utf8("plain ascii"));
    CHECK(is_valid_utf8("Writing \xE2\x80\x93 Review"));
    CHECK(is_valid_utf8("\xF0\x9F\x98\x80"));
    CHECK_FALSE(is_valid_utf8("\xC0\xAF"));          // overlong
    CHECK_FALSE(is_valid_utf8("\xED\xA0\x80"));      // surrogate
    CHECK_FALSE(is_valid_utf8("\xE2\x80"));          // truncated
    CHECK_FALSE(is_valid_utf8("\xF5\x80\x80\x80"));  // beyond U+10FFFF
    CHECK_FALSE(is_valid_utf8("abc\xFF"));
}

TEST_CASE("decode and count code points") {
    CHECK(decode_utf8("a\xE2\x80\x93" "b") == std::u32string{U'a', U'–', U'b'});
    CHECK(codepoint_count("caf\xC3\xA9") == 4);
    CHECK(decode_utf8("\xFF").size() == 1);
}

TEST_CASE("whitespace helpers") {
    CHECK(trim("  x y \n") == "x y");
    CHECK(trim("   ").empty());
    CHECK(collapse_whitespace("  a \t\n b  c ") == "a b c");
    CHECK(iequals("AID Statement", "aid STATEMENT"));
    CHECK_FALSE(iequals("aid", "aids"));
}

TEST_CASE("line index reports 1-based lines and code point columns") {
    const std::string src = "ab\ncd\xC3\xA9" "f\n\nx";
    LineIndex index(src);
    CHECK(index.line_of(0) == 1);
    CHECK(index.column_of(0) == 1);
    CHECK(index.line_of(3) == 2);
    CHECK(index.column_of(7) == 4);  // 'f' after the two-byte e-acute
    CHECK(index.line_of(10) == 4);
    CHECK(index.column_of(10) == 1);
}
