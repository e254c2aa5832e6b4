#include "aid/parser.hpp"

#include <algorithm>
#include <random>

#include "aid/formatter.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace aid;
using aid::testing::education_example;
using aid::testing::research_example;

namespace {

std::vector<int> ordinals(const AidStatement& s) {
    std::vector<int> out;
    for (const auto& p : s.pairs) out.push_back(p.heading ? ordinal(*p.heading) : 0);
    return out;
}

std::vector<std::string> codes_of(const ParseOutcome& o) {
    std::vector<std::string> out;
    for (const auto& d : o.diagnostics) out.push_back(d.code);
    return out;
}

std::size_t errors(const ParseOutcome& o) {
    return static_cast<std::size_t>(std::count_if(o.diagnostics.begin(), o.diagnostics.end(),
                                                  [](const Diagnostic& d) { return d.severity == Severity::Error; }));
}

ParseErrorKind parse_error_kind(std::string_view input) {
    try {
        parse_statement(input, ParseMode::Lenient);
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("expected ParseError");
    return ParseErrorKind::NotAStatement;
}

}  // namespace

TEST_CASE("research example parses to seven pairs") {
    for (auto mode : {ParseMode::Strict, ParseMode::Lenient}) {
        const auto out = parse_statement(research_example(), mode);
        REQUIRE(out.statement);
        CHECK(ordinals(*out.statement) == std::vector<int>{1, 2, 5, 8, 9, 12, 14});
        CHECK(errors(out) == 0);
        REQUIRE(out.diagnostics.size() == 1);
        CHECK(out.diagnostics[0].code == "AID-W103");
        CHECK(out.statement->pairs[2].heading_raw == "Data Collection Methods");
        CHECK(out.statement->pairs[0].statement ==
              "ChatGPT v.4o and Microsoft Copilot (University of Waterloo institutional instance)");
        CHECK(out.statement->terminated);
        CHECK(out.statement->origin == Origin::Parsed);
    }
}

TEST_CASE("education example parses to five pairs without findings") {
    const auto out = parse_statement(education_example(), ParseMode::Strict);
    REQUIRE(out.statement);
    CHECK(ordinals(*out.statement) == std::vector<int>{1, 2, 4, 11, 12});
    CHECK(out.diagnostics.empty());
    // Emphasis that encloses the colon is trivia on both sides.
    CHECK(out.statement->pairs[0].heading_raw == "Artificial Intelligence Tool");
    CHECK(out.statement->pairs[0].statement == "Microsoft Copilot (University of Waterloo institutional instance)");
    CHECK(out.statement->pairs[1].statement.starts_with("Microsoft Copilot was used to identify key motor-performance"));
}

TEST_CASE("the verbatim education caption is not a bare label") {
    const std::string verbatim = aid::testing::read_fixture("education_example_verbatim.txt");
    const auto out = parse_statement(verbatim, ParseMode::Lenient);
    CHECK(codes_of(out).front() == "AID-E001");
}

TEST_CASE("minimal statement") {
    const auto out = parse_statement("AID Statement: Artificial Intelligence Tool: ToolX.", ParseMode::Strict);
    REQUIRE(out.statement);
    CHECK(out.statement->pairs.size() == 1);
    CHECK(out.statement->terminated);
    CHECK(out.diagnostics.empty());
    CHECK(out.statement->label_span.start_byte == 0);
    CHECK(out.statement->label_span.end_byte == 14);
}

TEST_CASE("first pair must be the tool section") {
    const auto strict = parse_statement("AID Statement: Conceptualization: help.", ParseMode::Strict);
    CHECK_FALSE(strict.statement);
    CHECK(codes_of(strict) == std::vector<std::string>{"AID-E002"});
    CHECK(strict.diagnostics[0].span.start_byte == 15);
    CHECK(strict.diagnostics[0].span.end_byte == 32);

    const auto lenient = parse_statement("AID Statement: Conceptualization: help.", ParseMode::Lenient);
    REQUIRE(lenient.statement);
    CHECK(codes_of(lenient) == std::vector<std::string>{"AID-E002"});
}

TEST_CASE("missing terminator") {
    std::string text = research_example();
    text.pop_back();
    const auto strict = parse_statement(text, ParseMode::Strict);
    CHECK_FALSE(strict.statement);
    const auto lenient = parse_statement(text, ParseMode::Lenient);
    REQUIRE(lenient.statement);
    CHECK(lenient.statement->pairs.size() == 7);
    CHECK_FALSE(lenient.statement->terminated);
    CHECK(codes_of(lenient) == std::vector<std::string>{"AID-W103", "AID-E003"});
    CHECK(lenient.diagnostics[1].span.start_byte == text.size());
}

TEST_CASE("extra colon and missing separator") {
    const auto out = parse_statement("AID Statement: Artificial Intelligence Tool: a: b; stray words; Visualization: c.",
                                     ParseMode::Lenient);
    REQUIRE(out.statement);
    CHECK(codes_of(out) == std::vector<std::string>{"AID-E004", "AID-E006"});
    CHECK(out.diagnostics[0].span.start_byte == 46);
    CHECK(out.statement->pairs.size() == 2);
    CHECK(out.statement->pairs[0].statement == "a: b");
}

TEST_CASE("empty segments") {
    const auto out = parse_statement("AID Statement: Artificial Intelligence Tool: ToolX;; Visualization: chart; .",
                                     ParseMode::Lenient);
    REQUIRE(out.statement);
    CHECK(out.statement->pairs.size() == 2);
    CHECK(codes_of(out) == std::vector<std::string>{"AID-E007", "AID-E007"});
    CHECK(out.diagnostics[0].span.start_byte == 51);
    CHECK(out.diagnostics[0].span.length() == 0);

    const auto blank = parse_statement("AID Statement: Artificial Intelligence Tool:   .", ParseMode::Lenient);
    REQUIRE(blank.statement);
    CHECK(codes_of(blank) == std::vector<std::string>{"AID-E007"});
}

TEST_CASE("unknown headings are errors in strict mode and warnings in lenient mode") {
    const std::string text = "AID Statement: Artificial Intelligence Tool: ToolX; Visualisation: a chart.";
    const auto strict = parse_statement(text, ParseMode::Strict);
    CHECK_FALSE(strict.statement);
    REQUIRE(strict.diagnostics.size() == 1);
    CHECK(strict.diagnostics[0].code == "AID-E008");
    CHECK(strict.diagnostics[0].severity == Severity::Error);

    const auto lenient = parse_statement(text, ParseMode::Lenient);
    REQUIRE(lenient.statement);
    REQUIRE(lenient.diagnostics.size() == 1);
    CHECK(lenient.diagnostics[0].severity == Severity::Warning);
    CHECK(lenient.diagnostics[0].suggestion == "Visualization");
    CHECK_FALSE(lenient.statement->pairs[1].heading);
}

TEST_CASE("misspelt tool heading is reported as unknown only") {
    const auto out = parse_statement("AID Statement: Artifical Inteligence Tool: ToolX.", ParseMode::Lenient);
    CHECK(codes_of(out) == std::vector<std::string>{"AID-E008"});
}

TEST_CASE("label handling") {
    auto out = parse_statement("\xEF\xBB\xBF  \n**AID Statement:** *Artificial Intelligence Tool*: ToolX.  \n",
                               ParseMode::Strict);
    REQUIRE(out.statement);
    CHECK(out.diagnostics.empty());
    CHECK(out.statement->label_span.start_byte == 6);
    CHECK(out.statement->label_span.start_line == 2);

    out = parse_statement("aid statement: Artificial Intelligence Tool: ToolX.", ParseMode::Strict);
    REQUIRE(out.statement);
    CHECK(codes_of(out) == std::vector<std::string>{"AID-W107"});

    out = parse_statement("Artificial Intelligence Tool: ToolX.", ParseMode::Lenient);
    REQUIRE(out.statement);
    CHECK(codes_of(out) == std::vector<std::string>{"AID-E001"});
    CHECK_FALSE(parse_statement("Artificial Intelligence Tool: ToolX.", ParseMode::Strict).statement);
}

TEST_CASE("rejections") {
    CHECK(parse_error_kind("This paper has no disclosure.") == ParseErrorKind::NotAStatement);
    CHECK(parse_error_kind("") == ParseErrorKind::NotAStatement);
    CHECK(parse_error_kind("AID Statement: \xFF\xFE") == ParseErrorKind::InvalidUtf8);

    const auto label_only = parse_statement("AID Statement:", ParseMode::Lenient);
    CHECK_FALSE(label_only.statement);
    CHECK_FALSE(label_only.diagnostics.empty());
}

TEST_CASE("locate_label") {
    auto span = locate_label("AID Statement: ...");
    REQUIRE(span);
    CHECK(span->start_byte == 0);
    CHECK(span->end_byte == 14);

    span = locate_label("See below.\n**AID Statement:** ...");
    REQUIRE(span);
    CHECK(span->start_byte == 11);
    CHECK(span->end_byte == 29);
    CHECK(span->start_line == 2);

    CHECK_FALSE(locate_label("This paper has no disclosure."));
    CHECK_FALSE(locate_label("an aid statement of purpose"));
    CHECK_FALSE(locate_label("maid statement: x"));
    CHECK(locate_label("first AID\tStatement: x")->start_byte == 6);
}

TEST_CASE("spans cover the original bytes") {
    for (const std::string* text : {&research_example(), &education_example()}) {
        const auto out = parse_statement(*text, ParseMode::Lenient);
        REQUIRE(out.statement);
        std::size_t cursor = out.statement->label_span.end_byte;
        for (const auto& p : out.statement->pairs) {
            CHECK(text->substr(p.heading_span.start_byte, p.heading_span.length()) == p.heading_raw);
            CHECK(text->substr(p.statement_span.start_byte, p.statement_span.length()) == p.statement);
            // Gaps hold only whitespace, emphasis, and the structural characters.
            for (std::size_t i = cursor; i < p.heading_span.start_byte; ++i) CHECK(std::string(" *_;").find((*text)[i]) != std::string::npos);
            for (std::size_t i = p.heading_span.end_byte; i < p.statement_span.start_byte; ++i)
                CHECK(std::string(" *_:").find((*text)[i]) != std::string::npos);
            cursor = p.statement_span.end_byte;
        }
        CHECK(text->substr(cursor) == ".");
    }
}

TEST_CASE("property: segments equal semicolons plus one") {
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i) {
        std::string body;
        std::size_t semicolons = rng() % 6;
        body = "Artificial Intelligence Tool: t";
        for (std::size_t k = 0; k < semicolons; ++k) body += (rng() % 3 == 0) ? ";" : "; Data Curation: x";
        const auto out = parse_statement("AID Statement: " + body + ".", ParseMode::Lenient);
        REQUIRE(out.statement);
        const std::size_t empties = static_cast<std::size_t>(
            std::count_if(out.diagnostics.begin(), out.diagnostics.end(), [](const Diagnostic& d) { return d.code == "AID-E007"; }));
        CHECK(out.statement->pairs.size() + empties == semicolons + 1);
    }
}

TEST_CASE("property: canonical text round-trips through the parser") {
    std::mt19937 rng(9);
    for (int i = 0; i < 300; ++i) {
        const auto g = aid::testing::random_statement(rng);
        for (auto style : {FormatStyle::Plain, FormatStyle::Markdown}) {
            const std::string text = format_text(g.statement, style);
            const auto out = parse_statement(text, ParseMode::Strict);
            REQUIRE_MESSAGE(out.statement, text);
            CHECK(equivalent(*out.statement, g.statement));
            const auto again = parse_statement(format_text(*out.statement, style), ParseMode::Strict);
            REQUIRE(again.statement);
            CHECK(equivalent(*again.statement, *out.statement));
        }
    }
}

TEST_CASE("property: arbitrary input never escapes as anything but ParseError") {
    std::mt19937 rng(13);
    const std::string alphabet = "AIDStatemn :;.*_\n\t-x\xC3\xA9";
    for (int i = 0; i < 3000; ++i) {
        std::string input;
        const std::size_t n = rng() % 80;
        for (std::size_t k = 0; k < n; ++k) input += alphabet[rng() % alphabet.size()];
        if (rng() % 2) input = "AID Statement: " + input;
        for (auto mode : {ParseMode::Strict, ParseMode::Lenient}) {
            try {
                const auto out = parse_statement(input, mode);
                CHECK(std::is_sorted(out.diagnostics.begin(), out.diagnostics.end(), [](const auto& a, const auto& b) {
                    return a.span.start_byte < b.span.start_byte;
                }));
                for (const auto& d : out.diagnostics) CHECK(d.span.end_byte <= input.size());
                if (out.statement) {
                    CHECK_FALSE(out.statement->pairs.empty());
                    if (mode == ParseMode::Strict) CHECK(errors(out) == 0);
                }
            } catch (const ParseError&) {
            }
        }
    }
}
