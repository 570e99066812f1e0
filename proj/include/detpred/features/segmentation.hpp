#pragma once

#include <optional>
#include <vector>

#include "detpred/ingest/types.hpp"

namespace detpred::features {

using ingest::SampleSeries;

// Awake window for one day: from the first non-zero step at or after 07:00
// to the first instant at or after 19:00 whose trailing 30-minute step total
// drops below 10 (end of day when no such lull exists).
struct AwakeWindow {
    Date date = 0;
    Minute awake_time = 0;
    Minute sleep_time = 0;  // exclusive
};

// nullopt when the day has no post-07:00 step or the bounds cross.
std::optional<AwakeWindow> segment_awake(const SampleSeries& steps, Date date);

// Maximal run of observed zero-step minutes inside the awake window.
// A missing minute breaks a bout: absence is not evidence of stillness.
struct SedentaryBout {
    Minute start = 0;
    Minute end = 0;  // exclusive
    std::int64_t duration() const { return end - start; }
};

std::vector<SedentaryBout> extract_sedentary_bouts(const SampleSeries& steps,
                                                   const AwakeWindow& window);

}  // namespace detpred::features
