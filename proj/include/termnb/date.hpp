#pragma once

#include <compare>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "termnb/error.hpp"
#include "termnb/text.hpp"

namespace termnb {

// Calendar date (UTC). Timelines only ever need day-level arithmetic, so
// full timestamps are truncated to a date at parse time.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    static bool is_leap(int y) {
        return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0);
    }

    static int days_in_month(int y, int m) {
        static const int d[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
        return m == 2 && is_leap(y) ? 29 : d[m - 1];
    }

    bool valid() const {
        return month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
    }

    // Days since 1970-01-01 (civil calendar, proleptic Gregorian).
    int64_t to_days() const {
        const int y = year - (month <= 2 ? 1 : 0);
        const int64_t era = (y >= 0 ? y : y - 399) / 400;
        const unsigned yoe = static_cast<unsigned>(y - era * 400);
        const unsigned doy =
            static_cast<unsigned>((153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1);
        const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
        return era * 146097 + static_cast<int64_t>(doe) - 719468;
    }

    std::string iso() const {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
        return buf;
    }
};

// Absolute calendar-day gap between two dates.
inline int64_t day_gap(const Date& a, const Date& b) {
    const int64_t d = a.to_days() - b.to_days();
    return d < 0 ? -d : d;
}

// Accepts "YYYY-MM-DD" or a full ISO-8601 datetime ("YYYY-MM-DDTHH:MM:SSZ",
// offset suffixes allowed); anything beyond the date part is discarded.
inline Date parse_date(std::string_view s, std::string_view ctx = "date") {
    const auto bad = [&](const std::string& why) -> Date {
        throw ParseError(std::string(ctx), "invalid date '" + std::string(s) + "': " + why);
    };
    if (s.size() < 10) return bad("too short");
    for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (!is_ascii_digit(s[i])) return bad("expected digits in YYYY-MM-DD");
    if (s[4] != '-' || s[7] != '-') return bad("expected '-' separators");
    if (s.size() > 10 && s[10] != 'T' && s[10] != ' ') return bad("trailing garbage after date");
    Date d;
    d.year = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
    d.month = (s[5] - '0') * 10 + (s[6] - '0');
    d.day = (s[8] - '0') * 10 + (s[9] - '0');
    if (!d.valid()) return bad("not a valid calendar day");
    return d;
}

} // namespace termnb
