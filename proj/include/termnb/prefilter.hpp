#pragma once

#include <cmath>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "termnb/corpus.hpp"
#include "termnb/error.hpp"
#include "termnb/patterns.hpp"
#include "termnb/text.hpp"

namespace termnb {

// Prefix rules identifying accounts that relay other people's pregnancy
// reports (baby clubs, advice forums, fan pages). All lowercase; matching
// ignores leading whitespace. Single-letter-ish prefixes like "fq" must be
// followed by a non-letter so ordinary words cannot trigger them.
struct PrefixRuleSet {
    std::vector<std::string> prefixes;

    static PrefixRuleSet defaults() {
        return {{"ccb", "baby club update", "from our inbox", "a question from our inbox", "fq",
                 "fan share", "#fanquestion", "mummy to be advice"}};
    }

    bool matches(std::string_view text) const {
        const std::string lowered = ascii_lower(ltrim(text));
        for (const std::string& p : prefixes) {
            if (!starts_with(lowered, p)) continue;
            const bool prefix_ends_alpha = !p.empty() && is_ascii_alpha(p.back());
            if (prefix_ends_alpha && lowered.size() > p.size() && is_ascii_alpha(lowered[p.size()]))
                continue; // "fq" must not fire inside "fqword"
            return true;
        }
        return false;
    }
};

// prefixes.txt: one prefix per line, '#'-prefixed comments allowed except
// that a leading "#" followed by letters is a legitimate hashtag prefix,
// so comments require "# " (hash + space).
inline PrefixRuleSet parse_prefixes(std::istream& in) {
    PrefixRuleSet rules;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view sv = trim(line);
        if (sv.empty() || starts_with(sv, "# ")) continue;
        rules.prefixes.push_back(ascii_lower(sv));
    }
    if (rules.prefixes.empty()) throw ParseError("prefixes", "no prefixes in file");
    return rules;
}

// Matched tweets grouped per user; the unit the pre-filter reasons about.
using MatchedByUser = std::map<std::string, std::vector<MatchResult>>;

inline MatchedByUser group_matches_by_user(const std::vector<MatchResult>& matches,
                                           const Corpus& corpus) {
    MatchedByUser by_user;
    for (const MatchResult& m : matches) by_user[corpus.at(m.tweet_id).user_id].push_back(m);
    return by_user;
}

// Keeps only users with at least one TERM-tagged and one NB-tagged match
// (a single dual-tagged tweet satisfies both). Users who never mention
// both outcomes cannot be comparator candidates.
inline MatchedByUser restrict_dual_outcome(const MatchedByUser& by_user) {
    MatchedByUser out;
    for (const auto& [user, matches] : by_user) {
        bool term = false, nb = false;
        for (const MatchResult& m : matches) {
            term |= m.has(Outcome::TERM);
            nb |= m.has(Outcome::NB);
        }
        if (term && nb) out.emplace(user, matches);
    }
    return out;
}

// Users with any matched tweet starting with a listed prefix.
inline std::set<std::string> flag_prefix_users(const MatchedByUser& by_user, const Corpus& corpus,
                                               const PrefixRuleSet& rules) {
    std::set<std::string> flagged;
    for (const auto& [user, matches] : by_user)
        for (const MatchResult& m : matches)
            if (rules.matches(corpus.at(m.tweet_id).text)) {
                flagged.insert(user);
                break;
            }
    return flagged;
}

struct OutlierStats {
    std::set<std::string> flagged;
    double mean = 0.0;
    double stddev = 0.0;
    double threshold = 0.0;
};

// Flags users whose matched-tweet count exceeds mean + k * stddev
// (population stddev). These are surfaced for review, not removed.
inline OutlierStats flag_frequency_outliers(const MatchedByUser& by_user, double k = 3.0) {
    if (by_user.size() < 2)
        throw Error("prefilter", "frequency statistics need at least 2 users");
    OutlierStats stats;
    double sum = 0.0, sumsq = 0.0;
    for (const auto& [user, matches] : by_user) {
        const double c = static_cast<double>(matches.size());
        sum += c;
        sumsq += c * c;
    }
    const double n = static_cast<double>(by_user.size());
    stats.mean = sum / n;
    const double var = sumsq / n - stats.mean * stats.mean;
    stats.stddev = var > 0 ? std::sqrt(var) : 0.0;
    stats.threshold = stats.mean + k * stats.stddev;
    for (const auto& [user, matches] : by_user)
        if (static_cast<double>(matches.size()) > stats.threshold) stats.flagged.insert(user);
    return stats;
}

struct PrefilterReport {
    std::set<std::string> prefix_flagged;
    std::set<std::string> outlier_flagged;
    size_t input_users = 0;
    size_t input_tweets = 0;
    size_t removed_users = 0;
    size_t removed_tweet_count = 0;
    double mean_tweets_per_user = 0.0;
    double stddev_tweets_per_user = 0.0;
    double threshold_count = 0.0;
};

// Removes every tweet of the given users. Idempotent; the report counts
// reconcile exactly: input = output + removed.
inline MatchedByUser apply_prefilter(const MatchedByUser& by_user,
                                     const std::set<std::string>& flagged,
                                     PrefilterReport* report = nullptr) {
    MatchedByUser out;
    size_t removed_tweets = 0;
    for (const auto& [user, matches] : by_user) {
        if (flagged.count(user))
            removed_tweets += matches.size();
        else
            out.emplace(user, matches);
    }
    if (report) {
        report->input_users = by_user.size();
        report->input_tweets = 0;
        for (const auto& [user, matches] : by_user) report->input_tweets += matches.size();
        report->removed_users = by_user.size() - out.size();
        report->removed_tweet_count = removed_tweets;
    }
    return out;
}

} // namespace termnb
