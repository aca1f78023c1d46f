#pragma once

#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/regex.hpp>

#include "termnb/corpus.hpp"
#include "termnb/error.hpp"
#include "termnb/text.hpp"
#include "termnb/variants.hpp"

namespace termnb {

enum class Outcome { TERM, NB };

inline std::string to_string(Outcome o) { return o == Outcome::TERM ? "TERM" : "NB"; }

inline Outcome parse_outcome(std::string_view s, long line = -1) {
    if (s == "TERM") return Outcome::TERM;
    if (s == "NB") return Outcome::NB;
    throw ParseError("patterns", "unknown outcome '" + std::string(s) + "'", line);
}

// One compiled retrieval query. Capture group 1 marks the gestation or
// weight subexpression that later gets normalized to a placeholder; when a
// pattern has no group 1, the full match is the normalization target.
struct QueryPattern {
    int pattern_id = 0;
    Outcome outcome = Outcome::TERM;
    std::string source;
    std::string description;
    boost::regex regex;

    QueryPattern() = default;
    QueryPattern(int id, Outcome out, std::string src, std::string desc)
        : pattern_id(id), outcome(out), source(std::move(src)), description(std::move(desc)) {
        try {
            regex.assign(source, boost::regex::perl);
        } catch (const boost::regex_error& e) {
            throw Error("patterns", "pattern " + std::to_string(id) +
                                        " does not compile: " + e.what());
        }
    }
};

namespace detail {

// Replaces %keyword% markers with variant alternations.
inline std::string expand_template(std::string_view tpl, const VariantLexicon& lexicon) {
    std::string out;
    size_t i = 0;
    while (i < tpl.size()) {
        if (tpl[i] == '%') {
            const size_t j = tpl.find('%', i + 1);
            if (j == std::string_view::npos)
                throw Error("patterns", "unterminated %keyword% marker in template");
            out += expand_variants(tpl.substr(i + 1, j - i - 1), lexicon);
            i = j + 1;
        } else {
            out.push_back(tpl[i++]);
        }
    }
    return out;
}

} // namespace detail

// The seven retrieval queries. Patterns 1-5 detect a term pregnancy
// (37-42 weeks of gestation, "full term", or a due date at most 21 days /
// 3 weeks away); patterns 6-7 detect a normal birthweight (5 lb 8 oz
// through 10 lb 15 oz, or 2.5-4.9 kg / 2500-4999 g). Matching happens on
// lowercased, elongation-collapsed text, so the sources are lowercase and
// plain forms; the lexicon supplies abbreviations like "wks" and "lb".
inline std::vector<QueryPattern> compile_patterns(const VariantLexicon& lexicon) {
    struct Template {
        int id;
        Outcome outcome;
        const char* tpl;
        const char* desc;
    };
    // Day counts cap at 21 and week counts at 3 (a due date further out
    // than that does not evidence a term pregnancy). The pound/ounce range
    // is "5 lb + 8..15 oz" or "6..10 lb + 0..15 oz"; the glue between the
    // pound and ounce parts absorbs ", " / " and " / " & " / no space.
    static const Template templates[] = {
        {1, Outcome::TERM,
         R"((?<!until\s)(?<!like\s)(?<!when\s)\bi(?:\W?m|\sam)\s((?:(?:3[7-9]|4[0-2])\W?%weeks%)|(?:full\W?term)))",
         "i'm 37-42 weeks / i'm full term"},
        {2, Outcome::TERM,
         R"((?<!be\s)(?<!&\s)(?<!and\s)(?<!was\s)\b((?:\d|1[0-9]|2[0-1])\W?%days%|[1-3]\W?%weeks%)\s(?:%until%|away\sfrom|from|to)\s(?:my\sdue\sdate|i(?:\W?m|\sam)\sdue\b))",
         "N days/weeks until my due date"},
        {3, Outcome::TERM,
         R"(\b(?:my\sdue\sdate(?:\W?s|\sis)|i(?:\W?m|\sam)\sdue)\s(?:in\s)?((?:\d|1[0-9]|2[0-1])\W?%days%|[1-3]\W?%weeks%)(?!\sfrom|\ssooner|\sbefore|\safter))",
         "due (in) N days/weeks"},
        {4, Outcome::TERM,
         R"((?<!from\s)\b((?:(?:%tomorrow%|%today%)(?:\W?s|\sis)|yesterday\swas)\smy\sdue\sdate))",
         "tomorrow/today is my due date"},
        {5, Outcome::TERM,
         R"(\b((?:my\sdue\sdate(?:\W?s|\sis)|i(?:\W?m|\sam)\sdue)\s(?:%tomorrow%|%today%)|my\sdue\sdate\swas\syesterday|i\swas\sdue\syesterday))",
         "due tomorrow/today / was due yesterday"},
        {6, Outcome::NB,
         R"(\b(?:%born%|birth|%delivered%|arrived|came|meet|welcome|is.*here|introducing|debut|entrance)\b.*\b(5\W?%pounds%.?(?:\s?(?:\W|&|and)\s)?(?:[8-9]|1[0-5])\W?%ounces%|(?:[6-9]|10)\W?%pounds%.?(?:\s?(?:\W|&|and)\s)?(?:[0-9]|1[0-5])\W?%ounces%))",
         "birth announcement with pounds/ounces in the normal range"},
        {7, Outcome::NB,
         R"(\b%born%\b.*\b((?:2\.[5-9]|[3-4]\.[0-9])\W?%kilograms%|(?:2[,.]?[5-9][0-9][0-9]|[3-4][,.]?[0-9][0-9][0-9])\W?%grams%)\b)",
         "birth announcement with kilograms/grams in the normal range"},
    };
    std::vector<QueryPattern> out;
    out.reserve(7);
    for (const Template& t : templates)
        out.emplace_back(t.id, t.outcome, detail::expand_template(t.tpl, lexicon), t.desc);
    return out;
}

// patterns.txt override: id<TAB>TERM|NB<TAB>regex, one per line. Sources
// are compiled verbatim (no variant expansion).
inline std::vector<QueryPattern> parse_patterns(std::istream& in) {
    std::vector<QueryPattern> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = rtrim(line);
        if (sv.empty() || sv[0] == '#') continue;
        auto parts = split(sv, '\t');
        if (parts.size() != 3)
            throw ParseError("patterns", "expected id<TAB>TERM|NB<TAB>regex", lineno);
        int id = 0;
        for (char c : parts[0]) {
            if (!is_ascii_digit(c)) throw ParseError("patterns", "bad pattern id", lineno);
            id = id * 10 + (c - '0');
        }
        out.emplace_back(id, parse_outcome(parts[1], lineno), std::string(parts[2]),
                         "user-supplied pattern");
    }
    if (out.empty()) throw ParseError("patterns", "no patterns in file");
    return out;
}

struct PatternMatch {
    int pattern_id = 0;
    size_t begin = 0; // byte offsets into the original tweet text
    size_t end = 0;

    bool operator==(const PatternMatch&) const = default;
};

struct MatchResult {
    std::string tweet_id;
    std::vector<PatternMatch> matched; // first match per pattern, ordered by pattern_id
    std::set<Outcome> outcomes;

    bool has(Outcome o) const { return outcomes.count(o) > 0; }
};

namespace detail {

inline bool is_retweet(std::string_view lowered) {
    return starts_with(ltrim(lowered), "rt @");
}

} // namespace detail

// Matches one tweet against the compiled patterns. Retweets ("RT @...")
// and unmatched tweets yield no result. Spans refer to the original text
// even though matching runs on the lowercased, elongation-collapsed copy.
inline std::optional<MatchResult> match_tweet(const Tweet& tweet,
                                              const std::vector<QueryPattern>& patterns) {
    const std::string lowered = ascii_lower(tweet.text);
    if (detail::is_retweet(lowered)) return std::nullopt;
    const CollapsedText collapsed = collapse_elongation(lowered);

    MatchResult result;
    result.tweet_id = tweet.tweet_id;
    for (const QueryPattern& p : patterns) {
        boost::smatch m;
        if (boost::regex_search(collapsed.text, m, p.regex)) {
            const auto pos = static_cast<size_t>(m.position(size_t{0}));
            const auto [b, e] = collapsed.to_original(
                pos, pos + static_cast<size_t>(m.length(0)), tweet.text.size());
            result.matched.push_back({p.pattern_id, b, e});
            result.outcomes.insert(p.outcome);
        }
    }
    if (result.matched.empty()) return std::nullopt;
    return result;
}

// All normalization-target spans (capture group 1, or the full match when
// absent) of one pattern within `text`, in ascending order. Used by text
// preprocessing to substitute placeholders; re-scans rather than reusing
// MatchResult spans because substitution needs every occurrence.
inline std::vector<std::pair<size_t, size_t>> normalization_spans(const std::string& text,
                                                                  const QueryPattern& pattern) {
    std::vector<std::pair<size_t, size_t>> spans;
    const CollapsedText collapsed = collapse_elongation(text);
    auto begin = boost::sregex_iterator(collapsed.text.begin(), collapsed.text.end(),
                                        pattern.regex);
    for (auto it = begin, end = boost::sregex_iterator(); it != end; ++it) {
        const boost::smatch& m = *it;
        const size_t group = m.size() > 1 && m[1].matched ? 1 : 0;
        const auto pos = static_cast<size_t>(m.position(group));
        spans.push_back(collapsed.to_original(pos, pos + static_cast<size_t>(m.length(group)),
                                              text.size()));
    }
    return spans;
}

// Convenience: match a whole corpus, keyed and ordered by tweet.
inline std::vector<MatchResult> match_corpus(const Corpus& corpus,
                                             const std::vector<QueryPattern>& patterns) {
    std::vector<MatchResult> out;
    for (const Tweet& t : corpus.tweets())
        if (auto m = match_tweet(t, patterns)) out.push_back(std::move(*m));
    return out;
}

} // namespace termnb
