#include "aid/interchange.hpp"

#include <algorithm>
#include <set>

#include "aid/taxonomy.hpp"
#include "aid/text.hpp"

namespace aid {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kTextPattern = "^[^:;]*[^:;\\s][^:;]*$";

ordered_json span_json(const SourceSpan& span) {
    return ordered_json{{"start", span.start_byte}, {"end", span.end_byte}, {"line", span.start_line}, {"col", span.start_col}};
}

[[noreturn]] void violation(const std::string& pointer, const std::string& message) {
    throw InterchangeError(InterchangeErrorKind::SchemaViolation, pointer, message);
}

const json& require(const json& object, const std::string& key, const std::string& pointer) {
    auto it = object.find(key);
    if (it == object.end()) violation(pointer, "missing required property '" + key + "'");
    return *it;
}

std::string require_text(const json& value, const std::string& pointer) {
    if (!value.is_string()) violation(pointer, "expected a string");
    const auto& s = value.get_ref<const std::string&>();
    if (!text::is_valid_utf8(s)) violation(pointer, "string is not valid UTF-8");
    if (s.find_first_of(":;") != std::string::npos) violation(pointer, "':' and ';' are not allowed");
    if (text::trim(s).empty()) violation(pointer, "must not be empty");
    return s;
}

SourceSpan read_span(const json& value, const std::string& pointer) {
    if (!value.is_object()) violation(pointer, "expected an object");
    auto field = [&](const char* key, std::size_t minimum) -> std::size_t {
        const json& v = require(value, key, pointer);
        if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(minimum)) {
            violation(pointer + "/" + key, "expected an integer >= " + std::to_string(minimum));
        }
        return v.get<std::size_t>();
    };
    for (const auto& [key, v] : value.items()) {
        if (key != "start" && key != "end" && key != "line" && key != "col") {
            violation(pointer + "/" + key, "unexpected property");
        }
    }
    SourceSpan span{field("start", 0), field("end", 0), field("line", 1), field("col", 1)};
    if (span.end_byte < span.start_byte) violation(pointer + "/end", "end precedes start");
    return span;
}

DisclosurePair read_pair(const json& value, const std::string& pointer) {
    static const std::set<std::string> kKeys{"ordinal", "slug", "display", "raw", "text", "heading_span", "text_span"};
    if (!value.is_object()) violation(pointer, "expected an object");
    for (const auto& [key, v] : value.items()) {
        if (!kKeys.count(key)) violation(pointer + "/" + key, "unexpected property");
    }

    DisclosurePair pair;
    const json& ord = require(value, "ordinal", pointer);
    const json& slug_value = require(value, "slug", pointer);
    const json& display = require(value, "display", pointer);
    pair.heading_raw = require_text(require(value, "raw", pointer), pointer + "/raw");
    pair.statement = require_text(require(value, "text", pointer), pointer + "/text");

    if (ord.is_null()) {
        if (!slug_value.is_null()) violation(pointer + "/slug", "must be null when ordinal is null");
        if (!display.is_null()) violation(pointer + "/display", "must be null when ordinal is null");
        if (Taxonomy::instance().resolve(pair.heading_raw).id) {
            violation(pointer + "/raw", "names a taxonomy heading but ordinal is null");
        }
    } else {
        if (!ord.is_number_integer()) violation(pointer + "/ordinal", "expected an integer or null");
        const auto id = heading_from_ordinal(static_cast<int>(std::clamp<long long>(ord.get<long long>(), 0, 99)));
        if (!id) violation(pointer + "/ordinal", "must be between 1 and 14");
        if (!slug_value.is_string() || slug_value.get<std::string>() != slug(*id)) {
            violation(pointer + "/slug", "expected \"" + std::string(slug(*id)) + "\"");
        }
        if (!display.is_string() || display.get<std::string>() != display_name(*id)) {
            violation(pointer + "/display", "expected \"" + display_name(*id) + "\"");
        }
        if (Taxonomy::instance().resolve(pair.heading_raw).id != id) {
            violation(pointer + "/raw", "does not name heading " + std::to_string(ordinal(*id)));
        }
        pair.heading = id;
    }
    if (auto it = value.find("heading_span"); it != value.end()) pair.heading_span = read_span(*it, pointer + "/heading_span");
    if (auto it = value.find("text_span"); it != value.end()) pair.statement_span = read_span(*it, pointer + "/text_span");
    return pair;
}

ordered_json span_schema() {
    ordered_json positive{{"type", "integer"}, {"minimum", 1}};
    ordered_json offset{{"type", "integer"}, {"minimum", 0}};
    return ordered_json{
        {"type", "object"},
        {"required", {"start", "end", "line", "col"}},
        {"additionalProperties", false},
        {"properties", {{"start", offset}, {"end", offset}, {"line", positive}, {"col", positive}}},
    };
}

ordered_json pair_schema() {
    ordered_json headings = ordered_json::array();
    headings.push_back({{"properties",
                         {{"ordinal", {{"type", "null"}}}, {"slug", {{"type", "null"}}}, {"display", {{"type", "null"}}}}}});
    for (const auto& entry : Taxonomy::instance().all_headings()) {
        headings.push_back({{"properties",
                             {{"ordinal", {{"const", ordinal(entry.id)}}},
                              {"slug", {{"const", slug(entry.id)}}},
                              {"display", {{"const", entry.display}}}}}});
    }
    ordered_json text{{"type", "string"}, {"pattern", kTextPattern}};
    return ordered_json{
        {"type", "object"},
        {"required", {"ordinal", "slug", "display", "raw", "text"}},
        {"additionalProperties", false},
        {"properties",
         {{"ordinal", {{"type", {"integer", "null"}}, {"minimum", 1}, {"maximum", kHeadingCount}}},
          {"slug", {{"type", {"string", "null"}}}},
          {"display", {{"type", {"string", "null"}}}},
          {"raw", text},
          {"text", text},
          {"heading_span", {{"$ref", "#/$defs/span"}}},
          {"text_span", {{"$ref", "#/$defs/span"}}}}},
        {"oneOf", headings},
    };
}

}  // namespace

ordered_json to_json_value(const AidStatement& statement, bool include_spans) {
    ordered_json pairs = ordered_json::array();
    for (const auto& pair : statement.pairs) {
        ordered_json item;
        if (pair.heading) {
            item["ordinal"] = ordinal(*pair.heading);
            item["slug"] = slug(*pair.heading);
            item["display"] = display_name(*pair.heading);
        } else {
            item["ordinal"] = nullptr;
            item["slug"] = nullptr;
            item["display"] = nullptr;
        }
        item["raw"] = pair.heading_raw;
        item["text"] = pair.statement;
        if (include_spans) {
            item["heading_span"] = span_json(pair.heading_span);
            item["text_span"] = span_json(pair.statement_span);
        }
        pairs.push_back(std::move(item));
    }
    return ordered_json{{"aid_version", kInterchangeVersion}, {"pairs", std::move(pairs)}};
}

std::string to_json(const AidStatement& statement, bool include_spans) {
    return to_json_value(statement, include_spans).dump();
}

AidStatement from_json_value(const json& document) {
    if (!document.is_object()) violation("", "expected a JSON object");
    for (const auto& [key, v] : document.items()) {
        if (key != "aid_version" && key != "pairs") violation("/" + key, "unexpected property");
    }
    const json& version = require(document, "aid_version", "");
    if (!version.is_string()) violation("/aid_version", "expected a string");
    if (version.get<std::string>() != kInterchangeVersion) {
        throw InterchangeError(InterchangeErrorKind::UnsupportedVersion, "/aid_version",
                               "unsupported version \"" + version.get<std::string>() + "\"");
    }
    const json& pairs = require(document, "pairs", "");
    if (!pairs.is_array()) violation("/pairs", "expected an array");
    if (pairs.empty()) throw InterchangeError(InterchangeErrorKind::EmptyPairs, "/pairs", "a statement needs at least one pair");

    AidStatement statement;
    statement.origin = Origin::Built;
    statement.terminated = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        statement.pairs.push_back(read_pair(pairs[i], "/pairs/" + std::to_string(i)));
    }
    return statement;
}

AidStatement from_json(std::string_view document) {
    json parsed;
    try {
        parsed = json::parse(document);
    } catch (const json::parse_error& e) {
        throw InterchangeError(InterchangeErrorKind::Malformed, "", e.what());
    }
    return from_json_value(parsed);
}

std::string json_schema() {
    ordered_json schema{
        {"$schema", "https://json-schema.org/draft/2020-12/schema"},
        {"title", "AID Statement"},
        {"description", "Machine-readable Artificial Intelligence Disclosure statement, interchange version 1.0."},
        {"type", "object"},
        {"required", {"aid_version", "pairs"}},
        {"additionalProperties", false},
        {"properties",
         {{"aid_version", {{"const", kInterchangeVersion}}},
          {"pairs", {{"type", "array"}, {"minItems", 1}, {"items", {{"$ref", "#/$defs/pair"}}}}}}},
        {"$defs", {{"pair", pair_schema()}, {"span", span_schema()}}},
    };
    return schema.dump(2) + "\n";
}

}  // namespace aid
