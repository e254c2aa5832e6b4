#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aid {

// The fourteen disclosure headings, numbered as in the framework.
enum class HeadingId : std::uint8_t {
    ArtificialIntelligenceTool = 1,
    Conceptualization = 2,
    Methodology = 3,
    InformationCollection = 4,
    DataCollectionMethod = 5,
    Execution = 6,
    DataCuration = 7,
    DataAnalysis = 8,
    PrivacyAndSecurity = 9,
    Interpretation = 10,
    Visualization = 11,
    WritingReviewEditing = 12,
    WritingTranslation = 13,
    ProjectAdministration = 14,
};

inline constexpr int kHeadingCount = 14;

constexpr int ordinal(HeadingId id) { return static_cast<int>(id); }

std::optional<HeadingId> heading_from_ordinal(int ordinal);
std::optional<HeadingId> heading_from_slug(std::string_view slug);
std::string_view slug(HeadingId id);

struct HeadingEntry {
    HeadingId id;
    std::string display;
    std::string definition;
    // Normalized alias keys (see normalize_heading).
    std::vector<std::string> aliases;
};

enum class MatchOutcome { Exact, Alias, None };

struct MatchResult {
    MatchOutcome outcome = MatchOutcome::None;
    std::optional<HeadingId> id;
    std::string normalized_input;
};

struct Suggestion {
    const HeadingEntry* entry;
    std::size_t distance;
};

// Case-folded surface form: emphasis and surrounding whitespace stripped,
// internal whitespace collapsed, ASCII lowercased.
std::string surface_key(std::string_view raw);

// Full lookup key: surface_key plus dash folding and "&" -> "and".
std::string normalize_heading(std::string_view raw);

// Levenshtein distance over code points.
std::size_t edit_distance(std::string_view a, std::string_view b);

// Immutable registry of the heading taxonomy. Construction validates that
// no key resolves to two headings.
class Taxonomy {
public:
    static const Taxonomy& instance();

    std::span<const HeadingEntry> all_headings() const { return entries_; }
    const HeadingEntry& entry(HeadingId id) const;

    MatchResult resolve(std::string_view raw) const;

    // Up to `limit` entries closest to `raw`, sorted by (distance, ordinal).
    std::vector<Suggestion> suggest(std::string_view raw, std::size_t limit) const;

private:
    Taxonomy();

    std::optional<HeadingId> lookup_exact(std::string_view key) const;
    std::optional<HeadingId> lookup_folded(std::string_view key) const;

    std::vector<HeadingEntry> entries_;
    std::vector<std::pair<std::string, HeadingId>> exact_keys_;
    std::vector<std::pair<std::string, HeadingId>> folded_keys_;
};

inline const std::string& display_name(HeadingId id) { return Taxonomy::instance().entry(id).display; }

}  // namespace aid
