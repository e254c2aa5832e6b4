#include "aid/extractor.hpp"

#include <algorithm>
#include <array>

#include "aid/text.hpp"
#include "rules.hpp"

namespace aid {

namespace {

struct Line {
    std::size_t begin;
    std::size_t end;  // excludes the newline
    bool fenced = false;
};

std::vector<Line> split_lines(std::string_view doc) {
    std::vector<Line> lines;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= doc.size(); ++i) {
        if (i == doc.size() || doc[i] == '\n') {
            lines.push_back({begin, i});
            begin = i + 1;
        }
    }
    return lines;
}

std::string_view indented_body(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && i < 3 && line[i] == ' ') ++i;
    return line.substr(i);
}

bool is_fence(std::string_view line) {
    const std::string_view body = indented_body(line);
    return body.starts_with("```") || body.starts_with("~~~");
}

bool is_heading(std::string_view line) {
    const std::string_view body = indented_body(line);
    std::size_t hashes = 0;
    while (hashes < body.size() && body[hashes] == '#') ++hashes;
    return hashes >= 1 && hashes <= 6 && (hashes == body.size() || body[hashes] == ' ' || body[hashes] == '\t');
}

bool is_rule(std::string_view line) {
    const std::string_view body = text::trim(line);
    if (body.empty() || (body.front() != '-' && body.front() != '*' && body.front() != '_')) return false;
    std::size_t marks = 0;
    for (char c : body) {
        if (c == body.front()) {
            ++marks;
        } else if (c != ' ' && c != '\t') {
            return false;
        }
    }
    return marks >= 3;
}

void mark_fences(std::string_view doc, std::vector<Line>& lines) {
    bool open = false;
    for (auto& line : lines) {
        const bool delimiter = is_fence(doc.substr(line.begin, line.end - line.begin));
        line.fenced = open || delimiter;
        if (delimiter) open = !open;
    }
}

bool is_abbreviation(std::string_view word) {
    static constexpr std::array<std::string_view, 22> kAbbreviations{
        "etc", "vs", "al", "cf", "approx", "fig", "no", "dr", "mr", "mrs", "ms",
        "prof", "inc", "ltd", "jr", "sr", "st", "vol", "ed", "eds", "pp", "ca",
    };
    if (word.size() <= 1 || word.find('.') != std::string_view::npos) return true;
    const std::string lower = text::to_lower(word);
    return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) != kAbbreviations.end();
}

// Position of a sentence-ending period in the last pair that is followed by
// more prose, e.g. "...for the study. Thanks to our reviewers".
std::optional<std::size_t> find_early_terminator(std::string_view doc, std::size_t body_begin, std::size_t end) {
    const std::string_view body = doc.substr(body_begin, end - body_begin);
    const std::size_t semicolon = body.rfind(';');
    const std::size_t tail = semicolon == std::string_view::npos ? 0 : semicolon + 1;
    const std::size_t colon = body.find(':', tail);
    if (colon == std::string_view::npos) return std::nullopt;
    for (std::size_t p = colon + 1; p + 1 < body.size(); ++p) {
        if (body[p] != '.' || !text::is_space(body[p + 1])) continue;
        std::size_t next = p + 1;
        while (next < body.size() && text::is_space(body[next])) ++next;
        if (next == body.size()) return std::nullopt;
        const char c = body[next];
        if (!((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'))) continue;
        std::size_t word = p;
        while (word > colon + 1 && !text::is_space(body[word - 1]) && body[word - 1] != '(') --word;
        if (is_abbreviation(body.substr(word, p - word))) continue;
        return body_begin + p;
    }
    return std::nullopt;
}

}  // namespace

std::vector<ExtractedStatement> extract(std::string_view document, DocumentFormat format) {
    if (!text::is_valid_utf8(document)) throw ParseError(ParseErrorKind::InvalidUtf8, "document is not valid UTF-8");

    const bool markdown = format == DocumentFormat::Markdown;
    const text::LineIndex index(document);
    std::vector<Line> lines = split_lines(document);
    if (markdown) mark_fences(document, lines);

    auto line_number = [&](std::size_t offset) { return index.line_of(offset) - 1; };
    auto line_text = [&](const Line& l) { return document.substr(l.begin, l.end - l.begin); };

    std::vector<ExtractedStatement> found;
    std::size_t pos = 0;
    while (auto label = find_label(document, pos)) {
        const std::size_t first = line_number(label->begin);
        if (markdown && lines[first].fenced) {
            pos = label->end;
            continue;
        }

        std::size_t end = document.size();
        for (std::size_t k = first + 1; k < lines.size(); ++k) {
            const std::string_view l = line_text(lines[k]);
            const bool blank = text::trim(l).empty();
            if (blank || (markdown && (lines[k].fenced || is_heading(l) || is_rule(l)))) {
                end = lines[k].begin;
                break;
            }
        }
        if (auto next = find_label(document.substr(0, end), label->end)) end = next->begin;
        while (end > label->end && text::is_space(document[end - 1])) --end;

        const auto early = find_early_terminator(document, label->end, end);
        const std::size_t statement_end = early ? *early + 1 : end;

        ExtractedStatement item;
        item.outcome = parse_range(document, label->begin, statement_end, ParseMode::Lenient, index);
        if (early) {
            std::size_t trailing = statement_end;
            while (trailing < end && text::is_space(document[trailing])) ++trailing;
            item.outcome.diagnostics.push_back(Diagnostic{
                std::string(codes::kTrailingContent), Severity::Warning,
                "text after the terminal period is not part of the statement",
                SourceSpan{trailing, end, index.line_of(trailing), index.column_of(trailing)}, std::nullopt});
            rules::sort_by_span(item.outcome.diagnostics);
        }
        item.document_span = SourceSpan{label->begin, end, index.line_of(label->begin), index.column_of(label->begin)};
        item.block_index = found.size();
        found.push_back(std::move(item));
        pos = std::max(end, label->end);
    }
    return found;
}

}  // namespace aid
