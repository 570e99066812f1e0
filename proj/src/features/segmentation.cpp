#include "detpred/features/segmentation.hpp"

#include <algorithm>

namespace detpred::features {
namespace {

constexpr int kWakeSearchStart = 7 * 60;    // 07:00
constexpr int kLullSearchStart = 19 * 60;   // 19:00
constexpr int kLullWindow = 30;             // minutes
constexpr int kLullThreshold = 10;          // steps

}  // namespace

std::optional<AwakeWindow> segment_awake(const SampleSeries& steps, Date date) {
    const Minute day_begin = start_of_day(date);
    const Minute day_end = start_of_day(date + 1);

    auto lo = std::lower_bound(steps.samples.begin(), steps.samples.end(), day_begin,
                               [](const ingest::TimedSample& s, Minute m) { return s.timestamp < m; });
    auto hi = std::lower_bound(lo, steps.samples.end(), day_end,
                               [](const ingest::TimedSample& s, Minute m) { return s.timestamp < m; });
    if (lo == hi) return std::nullopt;

    std::optional<Minute> awake;
    for (auto it = lo; it != hi; ++it) {
        if (it->value > 0 && it->timestamp >= day_begin + kWakeSearchStart) {
            awake = it->timestamp;
            break;
        }
    }
    if (!awake) return std::nullopt;

    // first t >= 19:00 whose trailing window [t-30, t) totals fewer than 10
    // steps; sliding-window sum over the day's samples
    Minute sleep = day_end;
    auto enter = lo, leave = lo;
    double total = 0.0;
    for (Minute t = day_begin + kLullSearchStart; t <= day_end; ++t) {
        while (enter != hi && enter->timestamp < t) total += (enter++)->value;
        while (leave != hi && leave->timestamp < t - kLullWindow) total -= (leave++)->value;
        if (total < kLullThreshold) {
            sleep = t;
            break;
        }
    }
    if (*awake >= sleep) return std::nullopt;
    return AwakeWindow{date, *awake, sleep};
}

std::vector<SedentaryBout> extract_sedentary_bouts(const SampleSeries& steps,
                                                   const AwakeWindow& window) {
    std::vector<SedentaryBout> bouts;
    bool in_bout = false;
    Minute bout_start = 0;
    Minute next = 0;  // minute that would extend the current bout
    for (const auto& s : steps.samples) {
        if (s.timestamp < window.awake_time) continue;
        if (s.timestamp >= window.sleep_time) break;
        if (in_bout && s.timestamp != next) {  // missing minute broke the run
            bouts.push_back({bout_start, next});
            in_bout = false;
        }
        if (s.value == 0.0) {
            if (!in_bout) {
                in_bout = true;
                bout_start = s.timestamp;
            }
            next = s.timestamp + 1;
        } else if (in_bout) {
            bouts.push_back({bout_start, s.timestamp});
            in_bout = false;
        }
    }
    if (in_bout) bouts.push_back({bout_start, next});
    return bouts;
}

}  // namespace detpred::features
