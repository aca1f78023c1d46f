#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "termnb/error.hpp"
#include "termnb/text.hpp"

namespace termnb {

// Maps canonical query keywords to their surface variants (abbreviations,
// common misspellings). The canonical form is always one of its own
// variants; stretched spellings are handled separately by the elongation
// collapse in the matcher, not by the lexicon.
class VariantLexicon {
public:
    VariantLexicon() = default;

    void add(std::string_view canonical, std::string_view variant) {
        std::string c = ascii_lower(canonical);
        map_[c].insert(ascii_lower(variant));
        map_[c].insert(c);
    }

    bool contains(std::string_view canonical) const {
        return map_.count(ascii_lower(canonical)) > 0;
    }

    // Variants sorted longest first so that alternations never let a prefix
    // shadow a longer form; equal lengths sort lexicographically.
    std::vector<std::string> variants(std::string_view canonical) const {
        auto it = map_.find(ascii_lower(canonical));
        if (it == map_.end()) return {std::string(canonical)};
        std::vector<std::string> out(it->second.begin(), it->second.end());
        std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        return out;
    }

    const std::map<std::string, std::set<std::string>>& entries() const { return map_; }

    static VariantLexicon identity() { return VariantLexicon(); }

    // Hand-curated defaults covering the abbreviations seen in real tweets.
    static VariantLexicon defaults() {
        VariantLexicon lex;
        const auto add_all = [&](std::string_view canon,
                                 std::initializer_list<std::string_view> vs) {
            for (auto v : vs) lex.add(canon, v);
        };
        add_all("weeks", {"weeks", "week", "wks", "wk"});
        add_all("days", {"days", "day"});
        add_all("until", {"until", "till", "til"});
        add_all("tomorrow", {"tomorrow", "tmrw", "tmr", "2morrow", "2moro", "tomoro"});
        add_all("today", {"today", "2day", "tday"});
        add_all("pounds", {"pounds", "pound", "lbs", "lb"});
        add_all("ounces", {"ounces", "ounce", "ozs", "oz"});
        add_all("kilograms", {"kilograms", "kilogram", "kilos", "kgs", "kg"});
        add_all("grams", {"grams", "gram", "g"});
        add_all("delivered", {"delivered", "delivering"});
        return lex;
    }

private:
    std::map<std::string, std::set<std::string>> map_;
};

// variants.tsv: canonical<TAB>variant, one pair per line.
inline VariantLexicon parse_variants(std::istream& in) {
    VariantLexicon lex;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = rtrim(line);
        if (sv.empty() || sv[0] == '#') continue;
        auto parts = split(sv, '\t');
        if (parts.size() != 2)
            throw ParseError("variants", "expected canonical<TAB>variant", lineno);
        if (trim(parts[0]).empty() || trim(parts[1]).empty())
            throw ParseError("variants", "empty field", lineno);
        lex.add(trim(parts[0]), trim(parts[1]));
    }
    return lex;
}

inline std::string escape_regex(std::string_view s) {
    static const std::string_view meta = R"(\^$.|?*+()[]{})";
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (meta.find(c) != std::string_view::npos) out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

// Non-capturing alternation over all variants of `term`, longest first.
// A term absent from the lexicon expands to itself.
inline std::string expand_variants(std::string_view term, const VariantLexicon& lexicon) {
    const auto vs = lexicon.variants(term);
    if (vs.size() == 1) return escape_regex(vs[0]);
    std::string out = "(?:";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out.push_back('|');
        out += escape_regex(vs[i]);
    }
    out.push_back(')');
    return out;
}

} // namespace termnb
