#pragma once

#include <string>
#include <vector>

#include "detpred/ingest/parse.hpp"
#include "detpred/ingest/types.hpp"

namespace detpred::ingest {

// A cohort directory holds manifest.json (outcomes + LACE inputs) and per
// patient data files named <patient_id>.<kind>.csv where kind is one of
// heart_rate, steps, sleep_status, sleep_summary, sync.
struct CohortLoadReport {
    // soft rejections collected across intraday files, keyed "<file>:<line>"
    std::vector<std::string> rejected_rows;
};

std::vector<PatientRecord> load_cohort(const std::string& directory,
                                       CohortLoadReport* report = nullptr);

// Writes manifest + per-patient files in the schemas load_cohort reads.
void save_cohort(const std::string& directory, const std::vector<PatientRecord>& cohort);

}  // namespace detpred::ingest
