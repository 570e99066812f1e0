#pragma once

#include "detpred/features/catalog.hpp"
#include "detpred/ingest/types.hpp"

namespace detpred::features {

using ingest::PatientRecord;

// Co-occurrence defaults; the quantization level count and lag the paper
// leaves open are fixed here and picked up by every HR texture feature.
constexpr int kCooccurrenceLevels = 16;
constexpr int kCooccurrenceLag = 1;

// Computes every catalog feature over the inclusive day window [first, last].
// Features whose inputs are absent in the window are marked missing; the
// result depends only on the record's contents inside the window.
FeatureVector assemble_daily_features(const PatientRecord& record, Date first, Date last);

// Same catalog over the first k days of monitoring.
FeatureVector assemble_patient_features(const PatientRecord& record, int first_k_days);

}  // namespace detpred::features
