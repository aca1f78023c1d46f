#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace termnb {

inline bool is_ascii_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

// Byte-wise ASCII lowercasing. Multi-byte UTF-8 sequences pass through
// untouched so byte offsets into the original text stay valid.
inline std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = ascii_lower(c);
    return out;
}

inline std::string_view ltrim(std::string_view s) {
    size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n'))
        ++i;
    return s.substr(i);
}

inline std::string_view rtrim(std::string_view s) {
    size_t n = s.size();
    while (n > 0 && (s[n - 1] == ' ' || s[n - 1] == '\t' || s[n - 1] == '\r' || s[n - 1] == '\n'))
        --n;
    return s.substr(0, n);
}

inline std::string_view trim(std::string_view s) { return rtrim(ltrim(s)); }

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

// Strict UTF-8 validation (rejects overlongs, surrogates, > U+10FFFF).
inline bool utf8_valid(std::string_view s) {
    size_t i = 0;
    const size_t n = s.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        size_t len;
        uint32_t cp;
        if (b0 < 0x80) {
            ++i;
            continue;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1Fu;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0Fu;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07u;
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (size_t k = 1; k < len; ++k) {
            const auto bk = static_cast<unsigned char>(s[i + k]);
            if ((bk & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (bk & 0x3Fu);
        }
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && cp < 0x800) return false;
        if (len == 4 && cp < 0x10000) return false;
        if (cp >= 0xD800 && cp <= 0xDFFF) return false;
        if (cp > 0x10FFFF) return false;
        i += len;
    }
    return true;
}

// Result of collapsing character elongations ("dayssssss" -> "days").
// orig_pos[i] is the byte offset in the original string that produced
// collapsed byte i, so match spans can be mapped back.
struct CollapsedText {
    std::string text;
    std::vector<size_t> orig_pos;

    // Maps a [begin,end) span in collapsed coordinates back to original
    // byte offsets, widening the end to cover a collapsed run fully.
    std::pair<size_t, size_t> to_original(size_t begin, size_t end, size_t orig_size) const {
        const size_t ob = begin < orig_pos.size() ? orig_pos[begin] : orig_size;
        const size_t oe = end < orig_pos.size() ? orig_pos[end] : orig_size;
        return {ob, oe};
    }
};

// Runs of 3+ identical ASCII letters collapse to a single letter; shorter
// runs and non-letters are kept as-is.
inline CollapsedText collapse_elongation(std::string_view s) {
    CollapsedText out;
    out.text.reserve(s.size());
    out.orig_pos.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        size_t j = i + 1;
        if (is_ascii_alpha(s[i]))
            while (j < s.size() && s[j] == s[i]) ++j;
        const size_t run = j - i;
        const size_t keep = run >= 3 ? 1 : run;
        for (size_t k = 0; k < keep; ++k) {
            out.text.push_back(s[i]);
            out.orig_pos.push_back(i + k);
        }
        i = j;
    }
    return out;
}

// FNV-1a, used for vocabulary fingerprints.
inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ull) {
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string to_hex(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

} // namespace termnb
