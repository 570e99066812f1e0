#include "detpred/ingest/types.hpp"

#include "detpred/core/error.hpp"

namespace detpred::ingest {

const char* modality_name(Modality m) {
    switch (m) {
        case Modality::HeartRate: return "heart_rate";
        case Modality::Step: return "steps";
        case Modality::SleepStatus: return "sleep_status";
    }
    return "?";
}

Modality modality_from_name(const std::string& name) {
    if (name == "heart_rate") return Modality::HeartRate;
    if (name == "steps") return Modality::Step;
    if (name == "sleep_status") return Modality::SleepStatus;
    throw data_error("unknown modality '" + name + "'");
}

const char* battery_name(BatteryLevel b) {
    switch (b) {
        case BatteryLevel::Empty: return "empty";
        case BatteryLevel::Low: return "low";
        case BatteryLevel::Medium: return "medium";
        case BatteryLevel::High: return "high";
    }
    return "?";
}

BatteryLevel battery_from_name(const std::string& name) {
    if (name == "empty") return BatteryLevel::Empty;
    if (name == "low") return BatteryLevel::Low;
    if (name == "medium") return BatteryLevel::Medium;
    if (name == "high") return BatteryLevel::High;
    throw data_error("unknown battery level '" + name + "'");
}

void validate_series(const SampleSeries& series, const std::string& context) {
    for (std::size_t i = 1; i < series.samples.size(); ++i) {
        if (series.samples[i].timestamp <= series.samples[i - 1].timestamp)
            throw data_error(context + ": timestamps not strictly increasing at sample " +
                             std::to_string(i));
    }
}

void validate_record(const PatientRecord& r) {
    if (r.monitoring_end < r.monitoring_start)
        throw data_error(r.patient_id + ": monitoring_end precedes monitoring_start");
    const Minute lo = r.span_begin();
    const Minute hi = r.span_end();
    for (const SampleSeries* s : {&r.heart_rate, &r.steps, &r.sleep_status}) {
        validate_series(*s, r.patient_id + "/" + modality_name(s->modality));
        if (!s->samples.empty() &&
            (s->samples.front().timestamp < lo || s->samples.back().timestamp >= hi))
            throw data_error(r.patient_id + "/" + std::string(modality_name(s->modality)) +
                             ": samples outside the monitoring span");
    }
    for (const auto& e : r.sync_events) {
        if (e.cloud_arrival_time < e.device_capture_time)
            throw data_error(r.patient_id + ": sync event arrives before capture");
    }
    if (r.outcome.deteriorated != !r.outcome.deterioration_dates.empty())
        throw data_error(r.patient_id + ": outcome flag inconsistent with deterioration dates");
    for (Date d : r.outcome.deterioration_dates) {
        if (d < r.monitoring_start || d > r.monitoring_end)
            throw data_error(r.patient_id + ": deterioration date " + format_date(d) +
                             " outside the monitoring span");
    }
}

}  // namespace detpred::ingest
