#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detpred/ingest/types.hpp"

namespace detpred::metrics {

using ingest::BatteryLevel;
using ingest::Modality;
using ingest::PatientRecord;
using ingest::SampleSeries;
using ingest::SyncEvent;

// A minute is "collected" if at least one sample carries that timestamp;
// expected = span minutes / sampling period.
double compute_yield(const SampleSeries& series, Minute span_begin, Minute span_end,
                     int sampling_period_minutes = 1);

// Fraction of monitored days with at least one sleep episode summary.
double compute_sleep_yield(const PatientRecord& record);

struct GapEvent {
    Modality modality;
    Minute gap_start = 0;
    Minute gap_end = 0;  // exclusive
    std::int64_t duration() const { return gap_end - gap_start; }
};

// Partition of a span into alternating maximal complete runs (time-to-failure)
// and maximal gaps (time-to-recovery). Boundary gaps count as gaps, so
// sum(ttf) + sum(ttr) always equals the span length exactly.
struct GapAnalysis {
    std::vector<GapEvent> gaps;
    std::vector<std::int64_t> time_to_failure;   // complete-run lengths, minutes
    std::vector<std::int64_t> time_to_recovery;  // gap lengths, == gaps[i].duration()
    double failures_per_day = 0.0;
};

GapAnalysis gap_analysis(const SampleSeries& series, Minute span_begin, Minute span_end);

// Nearest-rank percentile over an unsorted sample; p in (0, 100].
double percentile_nearest_rank(std::vector<double> values, double p);

struct CdfPoint {
    double x = 0.0;
    double cum_fraction = 0.0;
};

// Right-continuous step CDF (one point per distinct value), ends at 1.
struct CdfTable {
    std::vector<CdfPoint> points;
    double value_at_or_below(double x) const;  // CDF(x)
    double percentile(double p) const;         // nearest-rank
    double median() const { return percentile(50.0); }
};

CdfTable make_cdf(std::vector<double> values);

// Per-event latency = cloud arrival - device capture, minutes.
CdfTable latency_cdf(const std::vector<SyncEvent>& events);

enum class AlertReason { LowHeartRateCount, LowBattery };
const char* alert_reason_name(AlertReason r);

struct ComplianceAlert {
    std::string patient_id;
    Date date = 0;
    AlertReason reason = AlertReason::LowHeartRateCount;
    double observed = 0.0;  // sample count, or battery level as ordinal
};

struct AlertRuleConfig {
    int hr_daily_count_threshold = 5400;  // alert when strictly below
    BatteryLevel battery_floor = BatteryLevel::Medium;  // alert when strictly below
};

// Pure rule core: same (count, battery) always produces the same alert set.
std::vector<AlertReason> alert_reasons(std::int64_t hr_daily_count,
                                       std::optional<BatteryLevel> last_known_battery,
                                       const AlertRuleConfig& config = {});

std::vector<ComplianceAlert> compliance_check(const PatientRecord& record, Date date,
                                              const AlertRuleConfig& config = {});

// Cohort-level reports.
struct PatientYield {
    std::string patient_id;
    double heart_rate = 0.0;
    double step = 0.0;
    double sleep = 0.0;
};

struct YieldReport {
    std::vector<PatientYield> per_patient;
    double hr_mean = 0.0, hr_std = 0.0;
    double step_mean = 0.0, step_std = 0.0;
    double sleep_mean = 0.0, sleep_std = 0.0;
};

YieldReport cohort_yield_report(const std::vector<PatientRecord>& cohort);

struct ModalityReliability {
    Modality modality;
    std::vector<double> time_to_failure;
    std::vector<double> time_to_recovery;
    double ttf_median = 0.0, ttf_p95 = 0.0;
    double ttr_median = 0.0, ttr_p95 = 0.0;
    double failures_per_patient_day = 0.0;
};

// Heart rate and step streams only; sleep status is not a continuous stream.
struct ReliabilityReport {
    ModalityReliability heart_rate;
    ModalityReliability step;
};

ReliabilityReport cohort_reliability_report(const std::vector<PatientRecord>& cohort);

}  // namespace detpred::metrics
