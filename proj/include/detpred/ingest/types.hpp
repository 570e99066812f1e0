#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "detpred/core/time.hpp"

namespace detpred::ingest {

enum class Modality { HeartRate, Step, SleepStatus };

const char* modality_name(Modality m);  // "heart_rate" / "steps" / "sleep_status"
Modality modality_from_name(const std::string& name);

// Sleep status levels as delivered per minute by the device.
enum SleepLevel : int {
    kSleepNoMeasurement = 0,
    kSleepAsleep = 1,
    kSleepRestless = 2,
    kSleepAwake = 3,
};

struct TimedSample {
    Minute timestamp = 0;
    double value = 0.0;
};

// Time-ordered per-minute stream for one modality. Missing minutes are
// absent, never zero-filled: a zero is a legal step count, so gap and yield
// accounting must be derivable from the timestamps alone.
struct SampleSeries {
    Modality modality = Modality::HeartRate;
    std::vector<TimedSample> samples;  // strictly increasing timestamps

    bool empty() const { return samples.empty(); }
    std::size_t size() const { return samples.size(); }
};

// Per-episode sleep record. time_in_bed always equals
// minutes_to_fall_asleep + minutes_asleep + minutes_awake + minutes_after_wakeup.
struct SleepEpisodeSummary {
    Date episode_date = 0;
    int time_in_bed = 0;
    int minutes_to_fall_asleep = 0;
    int minutes_asleep = 0;
    int minutes_awake = 0;
    int minutes_after_wakeup = 0;
    int awake_count = 0;
    int restless_count = 0;
    int restless_duration = 0;
};

// Ordered: "below medium" means Low or Empty.
enum class BatteryLevel { Empty = 0, Low = 1, Medium = 2, High = 3 };

const char* battery_name(BatteryLevel b);
BatteryLevel battery_from_name(const std::string& name);

struct SyncEvent {
    Minute device_capture_time = 0;
    Minute cloud_arrival_time = 0;  // >= device_capture_time
    BatteryLevel battery = BatteryLevel::High;
};

struct OutcomeLabel {
    bool deteriorated = false;
    std::vector<Date> deterioration_dates;  // non-empty iff deteriorated
};

struct LaceInputs {
    int length_of_stay_days = 0;
    bool acute_admission = false;
    int charlson_index = 0;
    int ed_visits_6mo = 0;
};

struct PatientRecord {
    std::string patient_id;
    SampleSeries heart_rate{Modality::HeartRate, {}};
    SampleSeries steps{Modality::Step, {}};
    SampleSeries sleep_status{Modality::SleepStatus, {}};
    std::vector<SleepEpisodeSummary> sleep_summaries;
    std::vector<SyncEvent> sync_events;
    Date monitoring_start = 0;
    Date monitoring_end = 0;  // inclusive
    OutcomeLabel outcome;
    LaceInputs lace;

    int monitored_days() const { return monitoring_end - monitoring_start + 1; }
    Minute span_begin() const { return start_of_day(monitoring_start); }
    Minute span_end() const { return start_of_day(monitoring_end + 1); }  // exclusive
};

// Throws data_error when a series violates strict timestamp monotonicity or
// a record violates span containment / outcome consistency.
void validate_series(const SampleSeries& series, const std::string& context);
void validate_record(const PatientRecord& record);

}  // namespace detpred::ingest
