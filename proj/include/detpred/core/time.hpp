#pragma once

#include <cstdint>
#include <string>

namespace detpred {

// Minute-resolution UTC instant: minutes since the Unix epoch.
using Minute = std::int64_t;

// Calendar day: days since the Unix epoch.
using Date = std::int32_t;

constexpr std::int64_t kMinutesPerDay = 1440;
constexpr std::int64_t kMinutesPerHour = 60;

constexpr Date date_of(Minute m) {
    // floor division, minutes may predate the epoch in constructed tests
    std::int64_t d = m / kMinutesPerDay;
    if (m % kMinutesPerDay < 0) --d;
    return static_cast<Date>(d);
}

constexpr int minute_of_day(Minute m) {
    std::int64_t r = m % kMinutesPerDay;
    if (r < 0) r += kMinutesPerDay;
    return static_cast<int>(r);
}

constexpr Minute start_of_day(Date d) { return static_cast<Minute>(d) * kMinutesPerDay; }

struct CivilDate {
    int year;
    int month;  // 1..12
    int day;    // 1..31
};

Date days_from_civil(const CivilDate& c);
CivilDate civil_from_days(Date d);

// "YYYY-MM-DD"
std::string format_date(Date d);
Date parse_date(const std::string& text);

// "YYYY-MM-DDThh:mmZ"; parsing also accepts an optional ":ss" component
// (truncated to the minute) and a missing trailing 'Z'.
std::string format_minute(Minute m);
Minute parse_minute(const std::string& text);

}  // namespace detpred
