#include "aid/formatter.hpp"

#include <algorithm>

#include "aid/taxonomy.hpp"
#include "aid/text.hpp"

namespace aid {

std::string format_text(const AidStatement& statement, FormatStyle style) {
    std::string out = "AID Statement: ";
    for (std::size_t i = 0; i < statement.pairs.size(); ++i) {
        const DisclosurePair& pair = statement.pairs[i];
        if (i > 0) out += "; ";
        const std::string heading =
            pair.heading ? display_name(*pair.heading) : text::collapse_whitespace(pair.heading_raw);
        if (style == FormatStyle::Markdown) {
            out += '*' + heading + '*';
        } else {
            out += heading;
        }
        out += ": ";
        out += text::collapse_whitespace(pair.statement);
    }
    out += '.';
    return out;
}

AidStatement canonicalize(const AidStatement& statement, bool reorder) {
    AidStatement result = statement;
    result.terminated = true;
    for (auto& pair : result.pairs) {
        if (pair.heading) pair.heading_raw = display_name(*pair.heading);
    }
    if (!reorder) return result;

    // Each group is a resolved pair followed by the unresolved pairs after it;
    // unresolved pairs before the first resolved one form a leading group.
    struct Group {
        int ordinal;
        std::vector<DisclosurePair> pairs;
    };
    std::vector<Group> groups;
    for (auto& pair : result.pairs) {
        if (pair.heading || groups.empty()) {
            groups.push_back({pair.heading ? ordinal(*pair.heading) : 0, {}});
        }
        groups.back().pairs.push_back(std::move(pair));
    }
    std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.ordinal < b.ordinal; });

    result.pairs.clear();
    for (auto& group : groups) {
        for (auto& pair : group.pairs) result.pairs.push_back(std::move(pair));
    }
    return result;
}

}  // namespace aid
