#include "aid/extractor.hpp"

#include "corpus.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace aid;
using aid::testing::education_example;
using aid::testing::research_example;

namespace {

bool has_code(const ExtractedStatement& e, std::string_view code) {
    for (const auto& d : e.outcome.diagnostics)
        if (d.code == code) return true;
    return false;
}

}  // namespace

TEST_CASE("statement inside a manuscript") {
    const std::string doc = "Introduction text here.\n\nMethods were standard.\n\n" + education_example() +
                            "\n\nReferences\nSmith, J. (2020).";
    const auto found = extract(doc, DocumentFormat::PlainText);
    REQUIRE(found.size() == 1);
    REQUIRE(found[0].outcome.statement);
    CHECK(found[0].outcome.statement->pairs.size() == 5);
    CHECK(found[0].document_span.start_byte == 49);
    CHECK(found[0].document_span.end_byte == 49 + education_example().size());
    CHECK(found[0].document_span.start_line == 5);
    CHECK(found[0].outcome.diagnostics.empty());
}

TEST_CASE("empty and label-free documents") {
    CHECK(extract("", DocumentFormat::PlainText).empty());
    CHECK(extract("No disclosure here.", DocumentFormat::Markdown).empty());
    CHECK(extract("This aid statement of purpose is unrelated.", DocumentFormat::PlainText).empty());
    CHECK_THROWS_AS(extract("bad \xFF byte", DocumentFormat::PlainText), ParseError);
}

TEST_CASE("two statements in one document") {
    const std::string doc = research_example() + "\n\n" + education_example();
    const auto found = extract(doc, DocumentFormat::PlainText);
    REQUIRE(found.size() == 2);
    CHECK(found[0].block_index == 0);
    CHECK(found[1].block_index == 1);
    CHECK(found[0].outcome.statement->pairs.size() == 7);
    CHECK(found[1].outcome.statement->pairs.size() == 5);
    CHECK(found[1].document_span.start_byte == research_example().size() + 2);

    // Back to back in one paragraph, the second label ends the first block.
    const std::string joined = "AID Statement: Artificial Intelligence Tool: A. AID Statement: Artificial Intelligence Tool: B.";
    const auto both = extract(joined, DocumentFormat::PlainText);
    REQUIRE(both.size() == 2);
    CHECK(both[0].outcome.statement->pairs[0].statement == "A");
    CHECK(both[1].outcome.statement->pairs[0].statement == "B");
}

TEST_CASE("trailing prose and label casing") {
    const auto found = extract("AID Statement: Artificial Intelligence Tool: ToolX. The authors take full responsibility.",
                               DocumentFormat::PlainText);
    REQUIRE(found.size() == 1);
    REQUIRE(found[0].outcome.statement);
    CHECK(found[0].outcome.statement->terminated);
    CHECK(found[0].outcome.statement->pairs[0].statement == "ToolX");
    CHECK(has_code(found[0], "AID-W106"));

    const auto lower = extract("aid statement: Artificial Intelligence Tool: ToolX.", DocumentFormat::PlainText);
    REQUIRE(lower.size() == 1);
    CHECK(has_code(lower[0], "AID-W107"));

    // Abbreviations and versions do not end the statement early.
    const auto dotted = extract("AID Statement: Artificial Intelligence Tool: ChatGPT v.4o, e.g. Drafts.",
                                DocumentFormat::PlainText);
    REQUIRE(dotted.size() == 1);
    CHECK_FALSE(has_code(dotted[0], "AID-W106"));
}

TEST_CASE("markdown boundaries") {
    const std::string doc =
        "```\nAID Statement: Artificial Intelligence Tool: Fenced.\n```\n"
        "**AID Statement:** *Artificial Intelligence Tool*: Real; *Visualization*: charts.\n"
        "## Next section\nAID Statement: Artificial Intelligence Tool: Second.\n---\ntrailing";
    const auto md = extract(doc, DocumentFormat::Markdown);
    REQUIRE(md.size() == 2);
    CHECK(md[0].outcome.statement->pairs.size() == 2);
    CHECK(md[0].outcome.diagnostics.empty());
    CHECK(md[1].outcome.statement->pairs[0].statement == "Second");
    CHECK(md[1].outcome.diagnostics.empty());

    // Treated as plain text, the fenced label counts too.
    CHECK(extract(doc, DocumentFormat::PlainText).size() == 3);
}

TEST_CASE("planted and negative corpora") {
    for (const auto& doc : aid::testing::planted_corpus(research_example(), education_example())) {
        CAPTURE(doc.name);
        const auto found = extract(doc.text, doc.format);
        REQUIRE(found.size() == doc.label_offsets.size());
        std::size_t previous_end = 0;
        for (std::size_t k = 0; k < found.size(); ++k) {
            CHECK(found[k].document_span.start_byte == doc.label_offsets[k]);
            CHECK(found[k].document_span.start_byte >= previous_end);
            CHECK(found[k].outcome.statement);
            previous_end = found[k].document_span.end_byte;
        }
    }
    for (const auto& doc : aid::testing::negative_corpus()) {
        CAPTURE(doc.name);
        CHECK(extract(doc.text, doc.format).empty());
    }
}
