#include "detpred/core/time.hpp"

#include <cstdio>

#include "detpred/core/error.hpp"

namespace detpred {

// Howard Hinnant's civil-days algorithm.
Date days_from_civil(const CivilDate& c) {
    int y = c.year;
    const int m = c.month;
    const int d = c.day;
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);             // [0, 399]
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;  // [0, 365]
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;            // [0, 146096]
    return static_cast<Date>(era * 146097 + static_cast<int>(doe) - 719468);
}

CivilDate civil_from_days(Date z) {
    std::int64_t zz = static_cast<std::int64_t>(z) + 719468;
    const std::int64_t era = (zz >= 0 ? zz : zz - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(zz - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

std::string format_date(Date d) {
    CivilDate c = civil_from_days(d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", c.year, c.month, c.day);
    return buf;
}

namespace {

bool parse_int(const char* s, int len, int& out) {
    out = 0;
    for (int i = 0; i < len; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        out = out * 10 + (s[i] - '0');
    }
    return true;
}

bool parse_civil(const std::string& t, CivilDate& c) {
    if (t.size() < 10 || t[4] != '-' || t[7] != '-') return false;
    if (!parse_int(t.data(), 4, c.year) || !parse_int(t.data() + 5, 2, c.month) ||
        !parse_int(t.data() + 8, 2, c.day))
        return false;
    if (c.month < 1 || c.month > 12 || c.day < 1 || c.day > 31) return false;
    return true;
}

}  // namespace

Date parse_date(const std::string& text) {
    CivilDate c;
    if (!parse_civil(text, c) || text.size() != 10)
        throw data_error("invalid date '" + text + "', expected YYYY-MM-DD");
    return days_from_civil(c);
}

std::string format_minute(Minute m) {
    CivilDate c = civil_from_days(date_of(m));
    int mod = minute_of_day(m);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02dZ", c.year, c.month, c.day,
                  mod / 60, mod % 60);
    return buf;
}

Minute parse_minute(const std::string& text) {
    CivilDate c;
    int hh = 0, mm = 0;
    bool ok = parse_civil(text, c);
    if (ok) {
        ok = text.size() >= 16 && text[10] == 'T' && parse_int(text.data() + 11, 2, hh) &&
             text[13] == ':' && parse_int(text.data() + 14, 2, mm) && hh < 24 && mm < 60;
    }
    if (ok) {
        // tail: "", "Z", ":ss" or ":ssZ"
        std::string tail = text.substr(16);
        if (!tail.empty() && tail.back() == 'Z') tail.pop_back();
        if (!tail.empty()) {
            int ss;
            ok = tail.size() == 3 && tail[0] == ':' && parse_int(tail.data() + 1, 2, ss) && ss < 60;
        }
    }
    if (!ok)
        throw data_error("invalid timestamp '" + text + "', expected YYYY-MM-DDThh:mm[:ss]Z");
    return start_of_day(days_from_civil(c)) + hh * 60 + mm;
}

}  // namespace detpred
