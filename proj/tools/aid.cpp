// aid: lint, format, extract, convert, and generate AID Statements.
//
// Exit codes: 0 success or pass, 1 content failure, 2 usage or I/O failure.

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aid/extractor.hpp"
#include "aid/formatter.hpp"
#include "aid/interchange.hpp"
#include "aid/linter.hpp"
#include "aid/parser.hpp"
#include "aid/taxonomy.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kContentFailure = 1;
constexpr int kUsageFailure = 2;

struct IoError {
    std::string message;
};

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        if (std::cin.bad()) throw IoError{"cannot read standard input"};
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError{"cannot read " + path};
    buffer << file.rdbuf();
    if (file.bad()) throw IoError{"cannot read " + path};
    return buffer.str();
}

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO) == 1; }

void print_diagnostic(const std::string& origin, const aid::Diagnostic& d) {
    const bool color = use_color();
    const bool error = d.severity == aid::Severity::Error;
    std::cerr << origin << ':' << d.span.start_line << ':' << d.span.start_col << ": ";
    if (color) std::cerr << (error ? "\x1b[31m" : "\x1b[33m");
    std::cerr << aid::to_string(d.severity) << ' ' << d.code;
    if (color) std::cerr << "\x1b[0m";
    std::cerr << ": " << d.message;
    if (d.suggestion) std::cerr << " [suggestion: " << *d.suggestion << ']';
    std::cerr << '\n';
}

void print_diagnostics(const std::string& origin, const std::vector<aid::Diagnostic>& diagnostics) {
    for (const auto& d : diagnostics) print_diagnostic(origin, d);
}

ordered_json span_json(const aid::SourceSpan& span) {
    return {{"start", span.start_byte}, {"end", span.end_byte}, {"line", span.start_line}, {"col", span.start_col}};
}

ordered_json diagnostics_json(const std::vector<aid::Diagnostic>& diagnostics) {
    ordered_json out = ordered_json::array();
    for (const auto& d : diagnostics) {
        ordered_json item{{"code", d.code},
                          {"severity", aid::to_string(d.severity)},
                          {"message", d.message},
                          {"span", span_json(d.span)}};
        item["suggestion"] = d.suggestion ? ordered_json(*d.suggestion) : ordered_json(nullptr);
        out.push_back(std::move(item));
    }
    return out;
}

std::string origin_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

// Lenient parse that refuses input with error-level findings.
std::optional<aid::AidStatement> checked_parse(const std::string& input, const std::string& origin) {
    const aid::LintConfig config;
    const aid::LintReport report = aid::lint_text(input, config);
    if (report.verdict == aid::Verdict::Fail) {
        print_diagnostics(origin, report.diagnostics);
        return std::nullopt;
    }
    return aid::parse_statement(input, aid::ParseMode::Lenient).statement;
}

struct LintOptions {
    std::string path = "-";
    bool strict = false;
    bool lenient = false;
    std::string config;
    std::string format = "text";
};

int run_lint(const LintOptions& opt) {
    aid::LintConfig config;
    std::string config_path = opt.config;
    if (config_path.empty()) {
        if (const char* env = std::getenv("AID_CONFIG"); env && *env) config_path = env;
    }
    try {
        if (!config_path.empty()) config = aid::load_config(config_path);
        if (opt.strict) config.mode = aid::ParseMode::Strict;
        if (opt.lenient) config.mode = aid::ParseMode::Lenient;
        config.validate();
    } catch (const aid::ConfigError& e) {
        std::cerr << "aid lint: " << e.what() << '\n';
        return kUsageFailure;
    }

    const std::string input = read_input(opt.path);
    const aid::LintReport report = aid::lint_text(input, config);
    const bool pass = report.verdict == aid::Verdict::Pass;
    if (opt.format == "json") {
        ordered_json out{{"verdict", pass ? "pass" : "fail"},
                         {"error_count", report.error_count},
                         {"warning_count", report.warning_count},
                         {"diagnostics", diagnostics_json(report.diagnostics)}};
        std::cout << out.dump(2) << '\n';
    } else {
        print_diagnostics(origin_name(opt.path), report.diagnostics);
        std::cout << origin_name(opt.path) << ": " << (pass ? "pass" : "fail") << " (" << report.error_count
                  << (report.error_count == 1 ? " error, " : " errors, ") << report.warning_count
                  << (report.warning_count == 1 ? " warning)" : " warnings)") << '\n';
    }
    return pass ? kOk : kContentFailure;
}

struct FmtOptions {
    std::string path = "-";
    bool markdown = false;
    bool reorder = false;
    bool check = false;
};

int run_fmt(const FmtOptions& opt) {
    const std::string input = read_input(opt.path);
    const auto statement = checked_parse(input, origin_name(opt.path));
    if (!statement) return kContentFailure;
    const std::string canonical = aid::format_text(aid::canonicalize(*statement, opt.reorder),
                                                   opt.markdown ? aid::FormatStyle::Markdown : aid::FormatStyle::Plain);
    if (opt.check) {
        std::string_view current = input;
        if (current.ends_with("\r\n")) {
            current.remove_suffix(2);
        } else if (current.ends_with('\n')) {
            current.remove_suffix(1);
        }
        if (current == canonical) return kOk;
        std::cerr << origin_name(opt.path) << ": not in canonical form\n";
        return kContentFailure;
    }
    std::cout << canonical << '\n';
    return kOk;
}

struct ExtractOptions {
    std::vector<std::string> paths;
    std::string format = "text";
    bool markdown_input = false;
    bool fail_if_none = false;
};

int run_extract(const ExtractOptions& opt) {
    std::vector<std::string> paths = opt.paths;
    std::sort(paths.begin(), paths.end());
    std::vector<std::string> documents;
    for (const auto& path : paths) documents.push_back(read_input(path));

    const auto format = opt.markdown_input ? aid::DocumentFormat::Markdown : aid::DocumentFormat::PlainText;
    std::vector<std::future<std::vector<aid::ExtractedStatement>>> jobs;
    for (const auto& document : documents) {
        jobs.push_back(std::async(std::launch::async, [&document, format] { return aid::extract(document, format); }));
    }

    std::size_t total = 0;
    bool failed = false;
    ordered_json listing = ordered_json::array();
    for (std::size_t i = 0; i < paths.size(); ++i) {
        std::vector<aid::ExtractedStatement> found;
        try {
            found = jobs[i].get();
        } catch (const aid::ParseError& e) {
            std::cerr << origin_name(paths[i]) << ": " << e.what() << '\n';
            failed = true;
            continue;
        }
        total += found.size();
        for (const auto& item : found) {
            std::size_t errors = 0;
            for (const auto& d : item.outcome.diagnostics) errors += d.severity == aid::Severity::Error;
            const std::size_t pairs = item.outcome.statement ? item.outcome.statement->pairs.size() : 0;
            if (opt.format == "json") {
                ordered_json entry{{"path", paths[i]},
                                   {"block_index", item.block_index},
                                   {"document_span", span_json(item.document_span)}};
                if (item.outcome.statement) {
                    const ordered_json body = aid::to_json_value(*item.outcome.statement, true);
                    entry["aid_version"] = body["aid_version"];
                    entry["pairs"] = body["pairs"];
                } else {
                    entry["aid_version"] = aid::kInterchangeVersion;
                    entry["pairs"] = ordered_json::array();
                }
                entry["diagnostics"] = diagnostics_json(item.outcome.diagnostics);
                listing.push_back(std::move(entry));
            } else {
                print_diagnostics(origin_name(paths[i]), item.outcome.diagnostics);
                std::cout << origin_name(paths[i]) << ':' << item.document_span.start_line << ':'
                          << item.document_span.start_col << ": statement " << item.block_index << ", " << pairs
                          << (pairs == 1 ? " pair, " : " pairs, ") << errors << (errors == 1 ? " error" : " errors")
                          << '\n';
            }
        }
    }
    if (opt.format == "json") std::cout << listing.dump(2) << '\n';
    if (failed) return kContentFailure;
    return (opt.fail_if_none && total == 0) ? kContentFailure : kOk;
}

struct ConvertOptions {
    std::string path = "-";
    std::string to;
    bool markdown = false;
};

int run_convert(const ConvertOptions& opt) {
    const std::string input = read_input(opt.path);
    if (opt.to == "json") {
        const auto statement = checked_parse(input, origin_name(opt.path));
        if (!statement) return kContentFailure;
        std::cout << aid::to_json(*statement) << '\n';
        return kOk;
    }
    try {
        const aid::AidStatement statement = aid::from_json(input);
        std::cout << aid::format_text(statement, opt.markdown ? aid::FormatStyle::Markdown : aid::FormatStyle::Plain)
                  << '\n';
    } catch (const aid::InterchangeError& e) {
        std::cerr << origin_name(opt.path) << ": " << e.what() << '\n';
        return kContentFailure;
    }
    return kOk;
}

struct NewOptions {
    std::string tool;
    std::vector<std::string> pairs;
    bool markdown = false;
    bool reorder = false;
};

int run_new(const NewOptions& opt) {
    const auto& taxonomy = aid::Taxonomy::instance();
    try {
        aid::StatementBuilder builder(opt.tool);
        for (const auto& spec : opt.pairs) {
            const std::size_t eq = spec.find('=');
            if (eq == std::string::npos) {
                std::cerr << "aid new: --pair expects <Heading>=<text>, got '" << spec << "'\n";
                return kUsageFailure;
            }
            const std::string heading = spec.substr(0, eq);
            const aid::MatchResult match = taxonomy.resolve(heading);
            if (!match.id) {
                std::cerr << "aid new: unknown heading '" << heading << "'";
                const auto candidates = taxonomy.suggest(heading, 3);
                if (!candidates.empty()) {
                    std::cerr << "; did you mean:";
                    for (const auto& c : candidates) std::cerr << "\n  " << c.entry->display;
                } else {
                    std::cerr << "; known headings:";
                    for (const auto& e : taxonomy.all_headings()) std::cerr << "\n  " << e.display;
                }
                std::cerr << '\n';
                return kContentFailure;
            }
            builder.add(*match.id, std::string_view(spec).substr(eq + 1));
        }
        const aid::AidStatement statement = aid::canonicalize(builder.finish(), opt.reorder);
        std::cout << aid::format_text(statement, opt.markdown ? aid::FormatStyle::Markdown : aid::FormatStyle::Plain)
                  << '\n';
    } catch (const aid::BuildError& e) {
        std::cerr << "aid new: " << e.what() << '\n';
        return kContentFailure;
    }
    return kOk;
}

int run_headings(const std::string& format) {
    const auto entries = aid::Taxonomy::instance().all_headings();
    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& entry : entries) {
            out.push_back({{"ordinal", aid::ordinal(entry.id)},
                           {"slug", aid::slug(entry.id)},
                           {"display", entry.display},
                           {"definition", entry.definition},
                           {"aliases", entry.aliases}});
        }
        std::cout << out.dump(2) << '\n';
        return kOk;
    }
    for (const auto& entry : entries) {
        std::cout << aid::ordinal(entry.id) << '\t' << entry.display << '\t' << entry.definition;
        if (!entry.aliases.empty()) {
            std::cout << "\taliases: ";
            for (std::size_t i = 0; i < entry.aliases.size(); ++i) std::cout << (i ? ", " : "") << entry.aliases[i];
        }
        std::cout << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lint, format, extract, and convert AID Statements"};
    app.require_subcommand(1);

    LintOptions lint_opt;
    auto* lint = app.add_subcommand("lint", "Check a statement against the rule catalog");
    lint->add_option("path", lint_opt.path, "Input file, or - for standard input");
    auto* strict = lint->add_flag("--strict", lint_opt.strict, "Unknown headings are errors");
    lint->add_flag("--lenient", lint_opt.lenient, "Unknown headings are warnings (default)")->excludes(strict);
    lint->add_option("--config", lint_opt.config, "Config file (falls back to $AID_CONFIG)");
    lint->add_option("--format", lint_opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));

    FmtOptions fmt_opt;
    auto* fmt = app.add_subcommand("fmt", "Print the canonical form of a statement");
    fmt->add_option("path", fmt_opt.path, "Input file, or - for standard input");
    fmt->add_flag("--markdown", fmt_opt.markdown, "Emphasize headings with asterisks");
    fmt->add_flag("--reorder", fmt_opt.reorder, "Sort pairs into taxonomy order");
    fmt->add_flag("--check", fmt_opt.check, "Exit 1 if the input is not canonical; print nothing");

    ExtractOptions extract_opt;
    auto* extract = app.add_subcommand("extract", "Find statements embedded in documents");
    extract->add_option("paths", extract_opt.paths, "Documents to scan, or - for standard input")->required();
    extract->add_option("--format", extract_opt.format, "Listing format")->check(CLI::IsMember({"text", "json"}));
    extract->add_flag("--markdown-input", extract_opt.markdown_input, "Treat documents as Markdown");
    extract->add_flag("--fail-if-none", extract_opt.fail_if_none, "Exit 1 when no statement is found");

    ConvertOptions convert_opt;
    auto* convert = app.add_subcommand("convert", "Convert between statement text and JSON");
    convert->add_option("path", convert_opt.path, "Input file, or - for standard input");
    convert->add_option("--to", convert_opt.to, "Output representation")
        ->required()
        ->check(CLI::IsMember({"json", "text"}));
    convert->add_flag("--markdown", convert_opt.markdown, "Emphasize headings in text output");

    NewOptions new_opt;
    auto* create = app.add_subcommand("new", "Build a statement from flags");
    create->add_option("--tool", new_opt.tool, "Description of the AI tools used")->required();
    create->add_option("--pair", new_opt.pairs, "<Heading>=<text>, repeatable");
    create->add_flag("--markdown", new_opt.markdown, "Emphasize headings with asterisks");
    create->add_flag("--reorder", new_opt.reorder, "Sort pairs into taxonomy order");

    std::string headings_format = "text";
    auto* headings = app.add_subcommand("headings", "List the heading taxonomy");
    headings->add_option("--format", headings_format, "Listing format")->check(CLI::IsMember({"text", "json"}));

    auto* schema = app.add_subcommand("schema", "Print the JSON Schema for the interchange format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageFailure;
    }

    try {
        if (*lint) return run_lint(lint_opt);
        if (*fmt) return run_fmt(fmt_opt);
        if (*extract) return run_extract(extract_opt);
        if (*convert) return run_convert(convert_opt);
        if (*create) return run_new(new_opt);
        if (*headings) return run_headings(headings_format);
        if (*schema) {
            std::cout << aid::json_schema();
            return kOk;
        }
    } catch (const IoError& e) {
        std::cerr << "aid: " << e.message << '\n';
        return kUsageFailure;
    } catch (const aid::ParseError& e) {
        std::cerr << "aid: " << e.what() << '\n';
        return kContentFailure;
    }
    return kUsageFailure;
}
