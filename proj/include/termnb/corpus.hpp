#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "termnb/date.hpp"
#include "termnb/error.hpp"
#include "termnb/text.hpp"

namespace termnb {

enum class Label { POSITIVE, NEGATIVE };

inline std::string to_string(Label l) { return l == Label::POSITIVE ? "positive" : "negative"; }

inline Label parse_label(std::string_view s, long line = -1) {
    if (s == "positive") return Label::POSITIVE;
    if (s == "negative") return Label::NEGATIVE;
    throw ParseError("labels", "unknown label '" + std::string(s) + "'", line);
}

// Stratum used for the user-level train/test split: same pregnancy,
// different pregnancies, or no positive term/NB pair at all.
enum class Stratum { SAME_PREGNANCY, DIFFERENT_PREGNANCY, NO_POSITIVE_PAIR };

inline std::string to_string(Stratum s) {
    switch (s) {
        case Stratum::SAME_PREGNANCY: return "same";
        case Stratum::DIFFERENT_PREGNANCY: return "different";
        default: return "none";
    }
}

inline Stratum parse_stratum(std::string_view s, long line = -1) {
    if (s == "same") return Stratum::SAME_PREGNANCY;
    if (s == "different") return Stratum::DIFFERENT_PREGNANCY;
    if (s == "none") return Stratum::NO_POSITIVE_PAIR;
    throw ParseError("user_gold", "unknown stratum '" + std::string(s) + "'", line);
}

struct Tweet {
    std::string tweet_id;
    std::string user_id;
    Date posted_at;
    std::string text;

    bool operator==(const Tweet&) const = default;
};

struct TweetLabel {
    std::string tweet_id;
    Label label = Label::POSITIVE;
};

struct UserGold {
    std::string user_id;
    Stratum stratum = Stratum::NO_POSITIVE_PAIR;
};

// Immutable after parsing; safe to share across threads.
class Corpus {
public:
    Corpus() = default;

    void add(Tweet t) {
        if (index_.count(t.tweet_id))
            throw ParseError("corpus", "duplicate tweet_id '" + t.tweet_id + "'");
        index_.emplace(t.tweet_id, tweets_.size());
        tweets_.push_back(std::move(t));
        by_user_dirty_ = true;
    }

    const std::vector<Tweet>& tweets() const { return tweets_; }
    size_t size() const { return tweets_.size(); }
    bool empty() const { return tweets_.empty(); }

    const Tweet* find(std::string_view tweet_id) const {
        auto it = index_.find(std::string(tweet_id));
        return it == index_.end() ? nullptr : &tweets_[it->second];
    }

    const Tweet& at(std::string_view tweet_id) const {
        const Tweet* t = find(tweet_id);
        if (!t) throw Error("corpus", "unknown tweet_id '" + std::string(tweet_id) + "'");
        return *t;
    }

    // user_id -> indices into tweets(), sorted chronologically (ties by
    // tweet_id for a stable order). std::map keeps user iteration sorted.
    const std::map<std::string, std::vector<size_t>>& by_user() const {
        if (by_user_dirty_) {
            by_user_.clear();
            for (size_t i = 0; i < tweets_.size(); ++i)
                by_user_[tweets_[i].user_id].push_back(i);
            for (auto& [user, idx] : by_user_)
                std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
                    const Tweet& ta = tweets_[a];
                    const Tweet& tb = tweets_[b];
                    if (ta.posted_at != tb.posted_at) return ta.posted_at < tb.posted_at;
                    return ta.tweet_id < tb.tweet_id;
                });
            by_user_dirty_ = false;
        }
        return by_user_;
    }

    size_t user_count() const { return by_user().size(); }

    bool operator==(const Corpus& other) const { return tweets_ == other.tweets_; }

private:
    std::vector<Tweet> tweets_;
    std::unordered_map<std::string, size_t> index_;
    mutable std::map<std::string, std::vector<size_t>> by_user_;
    mutable bool by_user_dirty_ = true;
};

struct ParsePolicy {
    bool skip_bad_records = false; // false: abort on first malformed line
};

struct ParseDiagnostics {
    std::vector<std::string> warnings;
    size_t skipped_records = 0;
};

// tweets.jsonl: one object per line with fields id, user_id, created_at, text.
inline Corpus parse_corpus(std::istream& in, const ParsePolicy& policy = {},
                           ParseDiagnostics* diag = nullptr) {
    Corpus corpus;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        try {
            if (!utf8_valid(line)) throw ParseError("corpus", "invalid UTF-8", lineno);
            nlohmann::json j = nlohmann::json::parse(line, nullptr, true);
            if (!j.is_object()) throw ParseError("corpus", "record is not an object", lineno);
            for (const char* field : {"id", "user_id", "created_at", "text"})
                if (!j.contains(field) || !j[field].is_string())
                    throw ParseError("corpus",
                                     std::string("missing or non-string field '") + field + "'",
                                     lineno);
            Tweet t;
            t.tweet_id = j["id"].get<std::string>();
            t.user_id = j["user_id"].get<std::string>();
            t.posted_at = parse_date(j["created_at"].get<std::string>(), "corpus");
            t.text = j["text"].get<std::string>();
            if (t.tweet_id.empty()) throw ParseError("corpus", "empty id", lineno);
            if (t.user_id.empty()) throw ParseError("corpus", "empty user_id", lineno);
            if (t.text.empty()) throw ParseError("corpus", "empty text", lineno);
            if (corpus.find(t.tweet_id))
                // Duplicate ids are never skippable: downstream joins would
                // silently pick one of the two records.
                throw ParseError("corpus", "duplicate tweet_id '" + t.tweet_id + "'", lineno);
            corpus.add(std::move(t));
        } catch (const nlohmann::json::exception& e) {
            if (!policy.skip_bad_records) throw ParseError("corpus", e.what(), lineno);
            if (diag) {
                diag->warnings.push_back("corpus line " + std::to_string(lineno) + ": " + e.what());
                ++diag->skipped_records;
            }
        } catch (const ParseError& e) {
            if (!policy.skip_bad_records || line.find("duplicate tweet_id") != std::string::npos ||
                std::string(e.what()).find("duplicate tweet_id") != std::string::npos)
                throw;
            if (diag) {
                diag->warnings.push_back(e.what());
                ++diag->skipped_records;
            }
        }
    }
    return corpus;
}

inline void serialize_corpus(const Corpus& corpus, std::ostream& out) {
    for (const Tweet& t : corpus.tweets()) {
        nlohmann::ordered_json j;
        j["id"] = t.tweet_id;
        j["user_id"] = t.user_id;
        j["created_at"] = t.posted_at.iso();
        j["text"] = t.text;
        out << j.dump() << "\n";
    }
}

struct Annotations {
    std::vector<TweetLabel> tweet_labels;
    std::vector<UserGold> user_gold;

    std::unordered_map<std::string, Label> label_map() const {
        std::unordered_map<std::string, Label> m;
        for (const auto& tl : tweet_labels) m[tl.tweet_id] = tl.label;
        return m;
    }

    std::unordered_map<std::string, Stratum> gold_map() const {
        std::unordered_map<std::string, Stratum> m;
        for (const auto& ug : user_gold) m[ug.user_id] = ug.stratum;
        return m;
    }
};

// tweet_labels.tsv: tweet_id<TAB>positive|negative
inline std::vector<TweetLabel> parse_tweet_labels(std::istream& in) {
    std::vector<TweetLabel> out;
    std::unordered_set<std::string> seen;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = rtrim(line);
        if (sv.empty()) continue;
        auto parts = split(sv, '\t');
        if (parts.size() != 2)
            throw ParseError("labels", "expected 2 tab-separated fields", lineno);
        TweetLabel tl;
        tl.tweet_id = std::string(parts[0]);
        tl.label = parse_label(parts[1], lineno);
        if (!seen.insert(tl.tweet_id).second)
            throw ParseError("labels", "duplicate tweet_id '" + tl.tweet_id + "'", lineno);
        out.push_back(std::move(tl));
    }
    return out;
}

// user_gold.tsv: user_id<TAB>same|different|none. Duplicate users take the
// last row, with a warning.
inline std::vector<UserGold> parse_user_gold(std::istream& in, ParseDiagnostics* diag = nullptr) {
    std::vector<UserGold> out;
    std::unordered_map<std::string, size_t> pos;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = rtrim(line);
        if (sv.empty()) continue;
        auto parts = split(sv, '\t');
        if (parts.size() != 2)
            throw ParseError("user_gold", "expected 2 tab-separated fields", lineno);
        UserGold ug;
        ug.user_id = std::string(parts[0]);
        ug.stratum = parse_stratum(parts[1], lineno);
        auto it = pos.find(ug.user_id);
        if (it != pos.end()) {
            if (diag)
                diag->warnings.push_back("user_gold line " + std::to_string(lineno) +
                                         ": duplicate user '" + ug.user_id +
                                         "', keeping the later row");
            out[it->second] = ug;
        } else {
            pos.emplace(ug.user_id, out.size());
            out.push_back(std::move(ug));
        }
    }
    return out;
}

inline Annotations parse_annotations(std::istream& labels_in, std::istream& gold_in,
                                     ParseDiagnostics* diag = nullptr) {
    Annotations a;
    a.tweet_labels = parse_tweet_labels(labels_in);
    a.user_gold = parse_user_gold(gold_in, diag);
    return a;
}

// Join check: every labelled tweet and gold user must exist in the corpus.
inline void validate_annotations(const Annotations& a, const Corpus& corpus) {
    for (const auto& tl : a.tweet_labels)
        if (!corpus.find(tl.tweet_id))
            throw Error("labels", "label references unknown tweet '" + tl.tweet_id + "'");
    for (const auto& ug : a.user_gold)
        if (!corpus.by_user().count(ug.user_id))
            throw Error("user_gold", "gold references unknown user '" + ug.user_id + "'");
}

} // namespace termnb
