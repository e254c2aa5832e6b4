#include "aid/taxonomy.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "aid/text.hpp"

namespace aid {

namespace {

struct HeadingSeed {
    HeadingId id;
    std::string_view slug;
    std::string_view display;
    std::string_view definition;
    std::array<std::string_view, 5> aliases;
};

// Definitions are quoted verbatim from the framework's heading list.
constexpr std::array<HeadingSeed, kHeadingCount> kSeeds{{
    {HeadingId::ArtificialIntelligenceTool, "artificial_intelligence_tool", "Artificial Intelligence Tool",
     "The selection of tool or tools and versions of those tools used and dates of use. May also include note "
     "of any known biases or limitations of the models or data sets.",
     {"Artificial Intelligence Tool(s)", "Artificial Intelligence Tools", "AI Tool", "AI Tools", "AI Tool(s)"}},
    {HeadingId::Conceptualization, "conceptualization", "Conceptualization",
     "The development of the research idea or hypothesis including framing or revision of research questions "
     "and hypotheses.",
     {}},
    {HeadingId::Methodology, "methodology", "Methodology",
     "The planning for the execution of the study including all direct contributions to the study design.",
     {}},
    {HeadingId::InformationCollection, "information_collection", "Information Collection",
     "The use of artificial intelligence to surface patterns in existing literature and identify information "
     "relevant to the framing, development, or design of the study.",
     {}},
    {HeadingId::DataCollectionMethod, "data_collection_method", "Data Collection Method",
     "The development or design of software or instruments used in the study.",
     {"Data Collection Methods"}},
    {HeadingId::Execution, "execution", "Execution",
     "The direct conduct of research procedures or tasks (e.g. AI web scraping, synthetic surveys, etc.)",
     {}},
    {HeadingId::DataCuration, "data_curation", "Data Curation",
     "The management and organization of those data.",
     {}},
    {HeadingId::DataAnalysis, "data_analysis", "Data Analysis",
     "The performance of statistical or mathematical analysis, regressions, text analysis, and more using "
     "artificial intelligence tools.",
     {}},
    {HeadingId::PrivacyAndSecurity, "privacy_and_security", "Privacy and Security",
     "The ways in which data privacy and security were upheld in alignment with the expectations of ethical "
     "conduct of research, disciplinary guidelines, and institutional policies.",
     {}},
    {HeadingId::Interpretation, "interpretation", "Interpretation",
     "The use of artificial intelligence tools to categorize, summarize, or manipulate data and suggest "
     "associated conclusions.",
     {}},
    {HeadingId::Visualization, "visualization", "Visualization",
     "The creation of visualizations or other graphical representations of the data.",
     {}},
    {HeadingId::WritingReviewEditing, "writing_review_editing", "Writing – Review & Editing",
     "The revision and editing of the manuscript.",
     {"Writing Review & Editing", "Review & Editing"}},
    {HeadingId::WritingTranslation, "writing_translation", "Writing – Translation",
     "The use of artificial intelligence to translate text across languages at any point in the drafting "
     "process.",
     {"Writing Translation", "Translation"}},
    {HeadingId::ProjectAdministration, "project_administration", "Project Administration",
     "Any administrative tasks related to the study, including managing budgets, timelines, and "
     "communications.",
     {}},
}};

constexpr std::array<std::string_view, 8> kDashes{
    "-", "‐", "‑", "‒", "–", "—", "―", "−",
};

std::string_view strip_emphasis(std::string_view s) {
    for (;;) {
        const std::size_t before = s.size();
        s = text::trim(s);
        while (!s.empty() && text::is_emphasis(s.front())) s.remove_prefix(1);
        while (!s.empty() && text::is_emphasis(s.back())) s.remove_suffix(1);
        if (s.size() == before) return s;
    }
}

std::string fold(std::string_view surface) {
    std::string out;
    out.reserve(surface.size() + 8);
    std::size_t i = 0;
    while (i < surface.size()) {
        bool matched = false;
        for (std::string_view dash : kDashes) {
            if (surface.substr(i, dash.size()) == dash) {
                out += " - ";
                i += dash.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (surface[i] == '&') {
            out += " and ";
        } else {
            out.push_back(surface[i]);
        }
        ++i;
    }
    return text::collapse_whitespace(out);
}

std::optional<HeadingId> find_key(const std::vector<std::pair<std::string, HeadingId>>& keys,
                                  std::string_view key) {
    auto it = std::lower_bound(keys.begin(), keys.end(), key,
                               [](const auto& entry, std::string_view k) { return entry.first < k; });
    if (it != keys.end() && it->first == key) return it->second;
    return std::nullopt;
}

void insert_key(std::vector<std::pair<std::string, HeadingId>>& keys, std::string key, HeadingId id) {
    for (const auto& [existing, owner] : keys) {
        if (existing == key) {
            if (owner != id) {
                throw std::logic_error("heading key '" + key + "' is claimed by two headings");
            }
            return;
        }
    }
    keys.emplace_back(std::move(key), id);
}

}  // namespace

std::optional<HeadingId> heading_from_ordinal(int value) {
    if (value < 1 || value > kHeadingCount) return std::nullopt;
    return static_cast<HeadingId>(value);
}

std::optional<HeadingId> heading_from_slug(std::string_view s) {
    for (const auto& seed : kSeeds) {
        if (seed.slug == s) return seed.id;
    }
    return std::nullopt;
}

std::string_view slug(HeadingId id) { return kSeeds[static_cast<std::size_t>(ordinal(id) - 1)].slug; }

std::string surface_key(std::string_view raw) { return text::to_lower(text::collapse_whitespace(strip_emphasis(raw))); }

std::string normalize_heading(std::string_view raw) { return fold(surface_key(raw)); }

std::size_t edit_distance(std::string_view a, std::string_view b) {
    const std::u32string x = text::decode_utf8(a);
    const std::u32string y = text::decode_utf8(b);
    std::vector<std::size_t> prev(y.size() + 1);
    std::vector<std::size_t> cur(y.size() + 1);
    for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= y.size(); ++j) {
            const std::size_t substitution = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, substitution});
        }
        std::swap(prev, cur);
    }
    return prev[y.size()];
}

const Taxonomy& Taxonomy::instance() {
    static const Taxonomy registry;
    return registry;
}

Taxonomy::Taxonomy() {
    entries_.reserve(kSeeds.size());
    for (const auto& seed : kSeeds) {
        HeadingEntry entry{seed.id, std::string(seed.display), std::string(seed.definition), {}};
        insert_key(exact_keys_, surface_key(seed.display), seed.id);
        insert_key(folded_keys_, normalize_heading(seed.display), seed.id);
        for (std::string_view alias : seed.aliases) {
            if (alias.empty()) continue;
            std::string key = normalize_heading(alias);
            insert_key(folded_keys_, key, seed.id);
            entry.aliases.push_back(std::move(key));
        }
        entries_.push_back(std::move(entry));
    }
    for (const auto& [key, id] : folded_keys_) {
        if (auto owner = find_key(exact_keys_, key); owner && *owner != id) {
            throw std::logic_error("alias '" + key + "' collides with a canonical heading");
        }
    }
    auto by_key = [](const auto& a, const auto& b) { return a.first < b.first; };
    std::sort(exact_keys_.begin(), exact_keys_.end(), by_key);
    std::sort(folded_keys_.begin(), folded_keys_.end(), by_key);
}

const HeadingEntry& Taxonomy::entry(HeadingId id) const { return entries_.at(static_cast<std::size_t>(ordinal(id) - 1)); }

std::optional<HeadingId> Taxonomy::lookup_exact(std::string_view key) const { return find_key(exact_keys_, key); }

std::optional<HeadingId> Taxonomy::lookup_folded(std::string_view key) const { return find_key(folded_keys_, key); }

MatchResult Taxonomy::resolve(std::string_view raw) const {
    MatchResult result;
    const std::string surface = surface_key(raw);
    result.normalized_input = fold(surface);
    if (surface.empty()) return result;

    if (auto id = lookup_exact(surface)) {
        result.outcome = MatchOutcome::Exact;
        result.id = id;
        return result;
    }
    auto alias = [&](std::optional<HeadingId> id) {
        result.outcome = MatchOutcome::Alias;
        result.id = id;
        return result;
    };
    const std::string& key = result.normalized_input;
    if (auto id = lookup_folded(key)) return alias(id);

    // Plural forms are only accepted when dropping them lands on a known key.
    std::string_view stem = key;
    if (stem.ends_with("(s)")) {
        stem = text::trim(stem.substr(0, stem.size() - 3));
    } else if (stem.size() > 1 && stem.back() == 's') {
        stem.remove_suffix(1);
    } else {
        return result;
    }
    if (auto id = lookup_folded(stem)) return alias(id);
    return result;
}

std::vector<Suggestion> Taxonomy::suggest(std::string_view raw, std::size_t limit) const {
    const std::string key = normalize_heading(raw);
    const std::size_t length = text::codepoint_count(key);
    const std::size_t cutoff = std::max<std::size_t>(3, (length + 2) / 3);

    std::vector<Suggestion> found;
    for (const auto& entry : entries_) {
        const std::size_t d = edit_distance(key, normalize_heading(entry.display));
        if (d <= cutoff) found.push_back({&entry, d});
    }
    std::stable_sort(found.begin(), found.end(), [](const Suggestion& a, const Suggestion& b) {
        return a.distance < b.distance;
    });
    if (found.size() > limit) found.resize(limit);
    return found;
}

}  // namespace aid
