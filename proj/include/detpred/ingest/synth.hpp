#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "detpred/ingest/types.hpp"

namespace detpred::ingest {

// Desk-scale cohort generator. Deteriorated patients carry an injected
// pre-event signal (elevated heart rate, reduced activity, fragmented sleep)
// in the 3 days preceding each deterioration date, scaled by
// anomaly_signal_strength; strength 0 produces a null cohort whose labels
// carry no signal at all.
struct SynthConfig {
    int n_patients = 25;
    int n_deteriorated = 7;
    int days_per_patient = 30;
    double anomaly_signal_strength = 1.0;

    double hr_missing_rate = 0.2;
    double step_missing_rate = 0.05;
    double sleep_status_missing_rate = 0.1;
    double sleep_summary_missing_rate = 0.15;

    int sync_cadence_minutes = 15;
    double sync_delay_noise = 2.0;  // 0 disables the heavy-tailed delay component

    std::uint64_t rng_seed = 1;
    Date monitoring_start = 19723;  // 2024-01-01

    void validate() const;  // throws config_error
};

SynthConfig synth_config_from_json_file(const std::string& path);
std::string synth_config_to_json(const SynthConfig& config);

std::vector<PatientRecord> generate_synthetic_cohort(const SynthConfig& config);

}  // namespace detpred::ingest
