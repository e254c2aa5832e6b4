#include "aid/parser.hpp"

#include <algorithm>

#include "aid/taxonomy.hpp"
#include "rules.hpp"

namespace aid {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";
constexpr std::string_view kCanonicalLabel = "AID Statement";

bool match_word(std::string_view doc, std::size_t at, std::size_t end, std::string_view word) {
    return at + word.size() <= end && text::iequals(doc.substr(at, word.size()), word);
}

std::optional<LabelMatch> match_label_at(std::string_view doc, std::size_t pos, std::size_t end) {
    std::size_t i = pos;
    while (i < end && text::is_emphasis(doc[i])) ++i;
    const std::size_t word_begin = i;
    if (!match_word(doc, i, end, "aid")) return std::nullopt;
    i += 3;
    const std::size_t gap = i;
    while (i < end && (doc[i] == ' ' || doc[i] == '\t')) ++i;
    if (i == gap || !match_word(doc, i, end, "statement")) return std::nullopt;
    i += 9;
    const std::size_t word_end = i;
    while (i < end && text::is_emphasis(doc[i])) ++i;
    const bool emphasized = word_begin > pos || i > word_end;
    if (i >= end || doc[i] != ':') return std::nullopt;
    ++i;
    if (emphasized) {
        while (i < end && text::is_emphasis(doc[i])) ++i;
    }
    return LabelMatch{pos, i, word_begin, word_end};
}

class RangeParser {
public:
    RangeParser(std::string_view doc, std::size_t begin, std::size_t end, ParseMode mode,
                const text::LineIndex& lines)
        : doc_(doc), begin_(begin), end_(end), mode_(mode), lines_(lines) {}

    ParseOutcome run();

private:
    SourceSpan span(std::size_t b, std::size_t e) const {
        return SourceSpan{b, e, lines_.line_of(b), lines_.column_of(b)};
    }

    void report(std::string_view code, Severity severity, std::string message, SourceSpan where,
                std::optional<std::string> suggestion = std::nullopt) {
        outcome_.diagnostics.push_back(
            Diagnostic{std::string(code), severity, std::move(message), where, std::move(suggestion)});
    }

    void parse_segment(std::size_t b, std::size_t e);

    std::string_view doc_;
    std::size_t begin_;
    std::size_t end_;
    ParseMode mode_;
    const text::LineIndex& lines_;
    ParseOutcome outcome_;
    AidStatement statement_;
};

ParseOutcome RangeParser::run() {
    const std::string_view input = doc_.substr(begin_, end_ - begin_);
    if (!text::is_valid_utf8(input)) {
        throw ParseError(ParseErrorKind::InvalidUtf8, "input is not valid UTF-8");
    }

    std::size_t pos = begin_;
    if (doc_.substr(pos, kBom.size()) == kBom && pos + kBom.size() <= end_) pos += kBom.size();
    while (pos < end_ && text::is_space(doc_[pos])) ++pos;
    std::size_t end = end_;
    while (end > pos && text::is_space(doc_[end - 1])) --end;

    std::size_t body_begin = pos;
    if (auto label = match_label_at(doc_, pos, end)) {
        statement_.label_span = span(label->begin, label->end);
        body_begin = label->end;
        const std::string_view words = doc_.substr(label->word_begin, label->word_end - label->word_begin);
        if (words != kCanonicalLabel) {
            report(codes::kLabelCasing, Severity::Warning,
                   "label '" + std::string(words) + "' should be written '" + std::string(kCanonicalLabel) + "'",
                   span(label->word_begin, label->word_end), std::string(kCanonicalLabel));
        }
    } else {
        if (doc_.substr(pos, end - pos).find(':') == std::string_view::npos) {
            throw ParseError(ParseErrorKind::NotAStatement, "input contains no AID Statement");
        }
        statement_.label_span = span(pos, pos);
        report(codes::kMissingLabel, Severity::Error, "missing 'AID Statement:' label", span(pos, pos),
               "AID Statement:");
    }

    std::size_t body_end = end;
    if (body_end > body_begin && doc_[body_end - 1] == '.') {
        statement_.terminated = true;
        --body_end;
    } else {
        statement_.terminated = false;
        report(codes::kMissingTerminator, Severity::Error, "statement must end with a period", span(end, end), ".");
    }

    std::size_t segment_begin = body_begin;
    for (std::size_t i = body_begin; i <= body_end; ++i) {
        if (i == body_end || doc_[i] == ';') {
            parse_segment(segment_begin, i);
            segment_begin = i + 1;
        }
    }

    if (auto d = rules::tool_first(statement_)) outcome_.diagnostics.push_back(std::move(*d));

    rules::sort_by_span(outcome_.diagnostics);
    const bool has_error = std::any_of(outcome_.diagnostics.begin(), outcome_.diagnostics.end(),
                                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
    if (!statement_.pairs.empty() && !(mode_ == ParseMode::Strict && has_error)) {
        statement_.origin = Origin::Parsed;
        outcome_.statement = std::move(statement_);
    }
    return std::move(outcome_);
}

void RangeParser::parse_segment(std::size_t b, std::size_t e) {
    std::size_t ts = b;
    std::size_t te = e;
    while (ts < te && text::is_space(doc_[ts])) ++ts;
    while (te > ts && text::is_space(doc_[te - 1])) --te;
    if (ts == te) {
        report(codes::kEmpty, Severity::Error, "empty segment", span(b, b));
        return;
    }

    const std::size_t colon = doc_.substr(ts, te - ts).find(':');
    if (colon == std::string_view::npos) {
        report(codes::kMissingSeparator, Severity::Error, "segment has no 'heading: statement' separator",
               span(ts, te));
        return;
    }
    const std::size_t sep = ts + colon;

    std::size_t hs = ts;
    std::size_t he = sep;
    for (;;) {
        const std::size_t before = he - hs;
        while (hs < he && (text::is_space(doc_[hs]) || text::is_emphasis(doc_[hs]))) ++hs;
        while (he > hs && (text::is_space(doc_[he - 1]) || text::is_emphasis(doc_[he - 1]))) --he;
        if (he - hs == before) break;
    }
    if (hs == he) {
        report(codes::kMissingSeparator, Severity::Error, "segment has no heading before ':'", span(sep, sep + 1));
        return;
    }

    // Emphasis that closes over the separator, as in "*Heading:* text".
    std::size_t ss = sep + 1;
    std::size_t run = ss;
    while (run < te && text::is_emphasis(doc_[run])) ++run;
    if (run > ss && (run == te || text::is_space(doc_[run]))) ss = run;
    while (ss < te && text::is_space(doc_[ss])) ++ss;
    const std::size_t se = te;

    for (std::size_t i = ss; i < se; ++i) {
        if (doc_[i] == ':') {
            report(codes::kColonInText, Severity::Error, "':' is not allowed inside statement text", span(i, i + 1));
        }
    }
    if (ss == se) {
        report(codes::kEmpty, Severity::Error, "empty statement text", span(ss, ss));
    }

    DisclosurePair pair;
    pair.heading_raw = std::string(doc_.substr(hs, he - hs));
    pair.statement = std::string(doc_.substr(ss, se - ss));
    pair.heading_span = span(hs, he);
    pair.statement_span = span(ss, se);

    const MatchResult match = Taxonomy::instance().resolve(pair.heading_raw);
    pair.heading = match.id;
    if (match.outcome == MatchOutcome::Alias) {
        outcome_.diagnostics.push_back(rules::alias_heading(pair));
    } else if (match.outcome == MatchOutcome::None) {
        const Severity severity = mode_ == ParseMode::Strict ? Severity::Error : Severity::Warning;
        outcome_.diagnostics.push_back(rules::unknown_heading(pair, severity, 3));
    }
    statement_.pairs.push_back(std::move(pair));
}

}  // namespace

ParseOutcome parse_range(std::string_view document, std::size_t begin, std::size_t end, ParseMode mode,
                         const text::LineIndex& lines) {
    return RangeParser(document, begin, end, mode, lines).run();
}

ParseOutcome parse_statement(std::string_view input, ParseMode mode) {
    const text::LineIndex lines(input);
    return parse_range(input, 0, input.size(), mode, lines);
}

std::optional<LabelMatch> find_label(std::string_view document, std::size_t from) {
    for (std::size_t i = from; i + 3 <= document.size(); ++i) {
        if (text::ascii_lower(document[i]) != 'a') continue;
        if (i > 0 && text::is_ascii_alnum(document[i - 1])) continue;
        std::size_t start = i;
        while (start > from && text::is_emphasis(document[start - 1])) --start;
        if (auto m = match_label_at(document, start, document.size())) return m;
    }
    return std::nullopt;
}

std::optional<SourceSpan> locate_label(std::string_view input) {
    auto m = find_label(input, 0);
    if (!m) return std::nullopt;
    const text::LineIndex lines(input);
    return SourceSpan{m->begin, m->end, lines.line_of(m->begin), lines.column_of(m->begin)};
}

}  // namespace aid
