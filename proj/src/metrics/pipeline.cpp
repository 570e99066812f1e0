#include "detpred/metrics/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "detpred/core/error.hpp"

namespace detpred::metrics {
namespace {

std::int64_t count_in_span(const SampleSeries& series, Minute begin, Minute end) {
    std::int64_t n = 0;
    for (const auto& s : series.samples)
        if (s.timestamp >= begin && s.timestamp < end) ++n;
    return n;
}

void mean_std(const std::vector<double>& v, double& mean, double& sd) {
    mean = sd = 0.0;
    if (v.empty()) return;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    for (double x : v) sd += (x - mean) * (x - mean);
    sd = std::sqrt(sd / static_cast<double>(v.size()));
}

}  // namespace

double compute_yield(const SampleSeries& series, Minute span_begin, Minute span_end,
                     int sampling_period_minutes) {
    if (span_end <= span_begin) throw data_error("compute_yield: empty span");
    if (sampling_period_minutes <= 0) throw data_error("compute_yield: bad sampling period");
    const double expected =
        static_cast<double>(span_end - span_begin) / sampling_period_minutes;
    const double collected = static_cast<double>(count_in_span(series, span_begin, span_end));
    return std::clamp(collected / expected, 0.0, 1.0);
}

double compute_sleep_yield(const PatientRecord& record) {
    const int days = record.monitored_days();
    if (days < 1) throw data_error("compute_sleep_yield: monitoring span shorter than a day");
    std::set<Date> with_summary;
    for (const auto& s : record.sleep_summaries)
        if (s.episode_date >= record.monitoring_start && s.episode_date <= record.monitoring_end)
            with_summary.insert(s.episode_date);
    return static_cast<double>(with_summary.size()) / days;
}

GapAnalysis gap_analysis(const SampleSeries& series, Minute span_begin, Minute span_end) {
    if (span_end <= span_begin) throw data_error("gap_analysis: empty span");
    GapAnalysis out;

    // walk the alternating run structure; timestamps are strictly increasing
    Minute cursor = span_begin;
    Minute run_start = span_begin;
    bool in_run = false;
    auto close_gap = [&](Minute gap_start, Minute gap_end) {
        if (gap_end > gap_start) {
            out.gaps.push_back({series.modality, gap_start, gap_end});
            out.time_to_recovery.push_back(gap_end - gap_start);
        }
    };
    for (const auto& s : series.samples) {
        if (s.timestamp < span_begin || s.timestamp >= span_end) continue;
        if (in_run && s.timestamp == cursor) {
            ++cursor;
            continue;
        }
        if (in_run) {
            out.time_to_failure.push_back(cursor - run_start);
            close_gap(cursor, s.timestamp);
        } else {
            close_gap(span_begin, s.timestamp);
        }
        run_start = s.timestamp;
        cursor = s.timestamp + 1;
        in_run = true;
    }
    if (in_run) {
        out.time_to_failure.push_back(cursor - run_start);
        close_gap(cursor, span_end);
    } else {
        close_gap(span_begin, span_end);
    }

    const double span_days =
        static_cast<double>(span_end - span_begin) / static_cast<double>(kMinutesPerDay);
    out.failures_per_day = static_cast<double>(out.gaps.size()) / span_days;
    return out;
}

double percentile_nearest_rank(std::vector<double> values, double p) {
    if (values.empty()) throw data_error("percentile of empty sample");
    if (p <= 0.0 || p > 100.0) throw data_error("percentile rank out of (0, 100]");
    std::sort(values.begin(), values.end());
    std::size_t rank = static_cast<std::size_t>(
        std::ceil(p / 100.0 * static_cast<double>(values.size())));
    if (rank == 0) rank = 1;
    return values[rank - 1];
}

double CdfTable::value_at_or_below(double x) const {
    double cum = 0.0;
    for (const auto& pt : points) {
        if (pt.x > x) break;
        cum = pt.cum_fraction;
    }
    return cum;
}

double CdfTable::percentile(double p) const {
    if (points.empty()) throw data_error("percentile of empty CDF");
    const double target = p / 100.0;
    for (const auto& pt : points)
        if (pt.cum_fraction >= target - 1e-12) return pt.x;
    return points.back().x;
}

CdfTable make_cdf(std::vector<double> values) {
    if (values.empty()) throw data_error("CDF of an empty sample");
    std::sort(values.begin(), values.end());
    CdfTable table;
    const double n = static_cast<double>(values.size());
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        table.points.push_back({values[i], static_cast<double>(j) / n});
        i = j;
    }
    return table;
}

CdfTable latency_cdf(const std::vector<SyncEvent>& events) {
    if (events.empty()) throw data_error("latency_cdf: no sync events");
    std::vector<double> latencies;
    latencies.reserve(events.size());
    for (const auto& e : events)
        latencies.push_back(static_cast<double>(e.cloud_arrival_time - e.device_capture_time));
    return make_cdf(std::move(latencies));
}

const char* alert_reason_name(AlertReason r) {
    switch (r) {
        case AlertReason::LowHeartRateCount: return "low_heart_rate_count";
        case AlertReason::LowBattery: return "low_battery";
    }
    return "?";
}

std::vector<AlertReason> alert_reasons(std::int64_t hr_daily_count,
                                       std::optional<BatteryLevel> last_known_battery,
                                       const AlertRuleConfig& config) {
    std::vector<AlertReason> out;
    if (hr_daily_count < config.hr_daily_count_threshold)
        out.push_back(AlertReason::LowHeartRateCount);
    if (last_known_battery &&
        static_cast<int>(*last_known_battery) < static_cast<int>(config.battery_floor))
        out.push_back(AlertReason::LowBattery);
    return out;
}

std::vector<ComplianceAlert> compliance_check(const PatientRecord& record, Date date,
                                              const AlertRuleConfig& config) {
    if (date < record.monitoring_start || date > record.monitoring_end)
        throw data_error(record.patient_id + ": compliance date outside monitoring span");
    const Minute day_begin = start_of_day(date);
    const Minute day_end = start_of_day(date + 1);
    const std::int64_t hr_count = count_in_span(record.heart_rate, day_begin, day_end);

    // last battery level known to the cloud by the end of this day
    std::optional<BatteryLevel> battery;
    Minute best = -1;
    for (const auto& e : record.sync_events) {
        if (e.cloud_arrival_time < day_end && e.cloud_arrival_time > best) {
            best = e.cloud_arrival_time;
            battery = e.battery;
        }
    }

    std::vector<ComplianceAlert> alerts;
    for (AlertReason reason : alert_reasons(hr_count, battery, config)) {
        ComplianceAlert a;
        a.patient_id = record.patient_id;
        a.date = date;
        a.reason = reason;
        a.observed = reason == AlertReason::LowHeartRateCount
                         ? static_cast<double>(hr_count)
                         : static_cast<double>(static_cast<int>(*battery));
        alerts.push_back(a);
    }
    return alerts;
}

YieldReport cohort_yield_report(const std::vector<PatientRecord>& cohort) {
    YieldReport report;
    std::vector<double> hr, step, sleep;
    for (const auto& r : cohort) {
        PatientYield y;
        y.patient_id = r.patient_id;
        y.heart_rate = compute_yield(r.heart_rate, r.span_begin(), r.span_end());
        y.step = compute_yield(r.steps, r.span_begin(), r.span_end());
        y.sleep = compute_sleep_yield(r);
        hr.push_back(y.heart_rate);
        step.push_back(y.step);
        sleep.push_back(y.sleep);
        report.per_patient.push_back(std::move(y));
    }
    mean_std(hr, report.hr_mean, report.hr_std);
    mean_std(step, report.step_mean, report.step_std);
    mean_std(sleep, report.sleep_mean, report.sleep_std);
    return report;
}

ReliabilityReport cohort_reliability_report(const std::vector<PatientRecord>& cohort) {
    ReliabilityReport report;
    report.heart_rate.modality = Modality::HeartRate;
    report.step.modality = Modality::Step;
    double patient_days = 0.0;
    std::size_t hr_gaps = 0, step_gaps = 0;
    for (const auto& r : cohort) {
        patient_days += r.monitored_days();
        GapAnalysis hr = gap_analysis(r.heart_rate, r.span_begin(), r.span_end());
        GapAnalysis st = gap_analysis(r.steps, r.span_begin(), r.span_end());
        for (auto v : hr.time_to_failure)
            report.heart_rate.time_to_failure.push_back(static_cast<double>(v));
        for (auto v : hr.time_to_recovery)
            report.heart_rate.time_to_recovery.push_back(static_cast<double>(v));
        for (auto v : st.time_to_failure)
            report.step.time_to_failure.push_back(static_cast<double>(v));
        for (auto v : st.time_to_recovery)
            report.step.time_to_recovery.push_back(static_cast<double>(v));
        hr_gaps += hr.gaps.size();
        step_gaps += st.gaps.size();
    }
    auto finish = [&](ModalityReliability& m, std::size_t gaps) {
        if (!m.time_to_failure.empty()) {
            m.ttf_median = percentile_nearest_rank(m.time_to_failure, 50.0);
            m.ttf_p95 = percentile_nearest_rank(m.time_to_failure, 95.0);
        }
        if (!m.time_to_recovery.empty()) {
            m.ttr_median = percentile_nearest_rank(m.time_to_recovery, 50.0);
            m.ttr_p95 = percentile_nearest_rank(m.time_to_recovery, 95.0);
        }
        m.failures_per_patient_day = patient_days > 0 ? gaps / patient_days : 0.0;
    };
    finish(report.heart_rate, hr_gaps);
    finish(report.step, step_gaps);
    return report;
}

}  // namespace detpred::metrics
