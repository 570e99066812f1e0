#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "detpred/ingest/types.hpp"

namespace detpred::ingest {

struct RejectedRow {
    int line = 0;  // 1-based, header is line 1
    std::string reason;
};

struct IntradayParseResult {
    SampleSeries series;
    std::vector<RejectedRow> rejected;
};

// CSV schema: header "timestamp,value", ISO-8601 UTC minute timestamps.
// Heart-rate values outside (20, 250) bpm are rejected row by row and
// reported; malformed rows, ordering violations, invalid sleep levels and
// negative step counts abort with a data_error naming the line.
IntradayParseResult parse_intraday(std::istream& in, Modality modality);
IntradayParseResult parse_intraday_file(const std::string& path, Modality modality);
void write_intraday(std::ostream& out, const SampleSeries& series);

// CSV schema: header "date,time_in_bed,min_to_fall_asleep,min_asleep,
// min_awake,min_after_wakeup,awake_count,restless_count,restless_duration".
std::vector<SleepEpisodeSummary> parse_sleep_summaries(std::istream& in);
void write_sleep_summaries(std::ostream& out, const std::vector<SleepEpisodeSummary>& summaries);

// CSV schema: header "capture_time,arrival_time,battery".
std::vector<SyncEvent> parse_sync_log(std::istream& in);
void write_sync_log(std::ostream& out, const std::vector<SyncEvent>& events);

}  // namespace detpred::ingest
