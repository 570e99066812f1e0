#include "detpred/features/catalog.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

#include <json.hpp>

#include "detpred/core/error.hpp"

namespace detpred::features {

const char* modality_tag_name(ModalityTag t) {
    switch (t) {
        case ModalityTag::Step: return "step";
        case ModalityTag::HR: return "hr";
        case ModalityTag::Sleep: return "sleep";
    }
    return "?";
}

const std::vector<CatalogEntry>& feature_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        std::vector<CatalogEntry> c;
        auto add = [&](const char* name, ModalityTag tag, const char* def) {
            c.push_back({name, tag, def});
        };

        add("step_daily_total_min", ModalityTag::Step, "min over days of awake-window step total");
        add("step_daily_total_max", ModalityTag::Step, "max over days of awake-window step total");
        add("step_daily_total_mean", ModalityTag::Step,
            "mean over days of awake-window step total");
        add("activity_quality", ModalityTag::Step,
            "fraction of observed awake-window minutes with steps > 0");
        add("sedentary_bout_daily_count", ModalityTag::Step,
            "mean per day of maximal zero-step runs in the awake window");
        add("sedentary_minutes_per_bout", ModalityTag::Step,
            "total sedentary minutes / total bout count");

        add("hr_mean", ModalityTag::HR, "first-order mean");
        add("hr_std", ModalityTag::HR, "first-order population stddev");
        add("hr_skewness", ModalityTag::HR, "first-order skewness");
        add("hr_kurtosis", ModalityTag::HR, "first-order excess kurtosis");
        add("hr_energy", ModalityTag::HR, "co-occurrence energy, Q=16 d=1");
        add("hr_entropy", ModalityTag::HR, "co-occurrence entropy, Q=16 d=1");
        add("hr_correlation", ModalityTag::HR, "co-occurrence correlation, Q=16 d=1");
        add("hr_inertia", ModalityTag::HR, "co-occurrence inertia, Q=16 d=1");
        add("hr_local_homogeneity", ModalityTag::HR,
            "co-occurrence local homogeneity, Q=16 d=1");
        add("hr_dfa_10min", ModalityTag::HR, "detrended fluctuation, 10-minute segments");

        add("sleep_status_skewness", ModalityTag::Sleep, "first-order skewness of status levels");
        add("sleep_status_kurtosis", ModalityTag::Sleep,
            "first-order excess kurtosis of status levels");
        add("sleep_dfa_60min", ModalityTag::Sleep, "detrended fluctuation, 60-minute segments");
        add("sleep_dfa_120min", ModalityTag::Sleep, "detrended fluctuation, 120-minute segments");
        add("sleep_dfa_360min", ModalityTag::Sleep, "detrended fluctuation, 360-minute segments");
        add("sleep_efficiency", ModalityTag::Sleep,
            "mean over episodes of minutes_asleep / time_in_bed");

        const char* fields[] = {"time_in_bed",        "minutes_to_fall_asleep",
                                "minutes_asleep",     "minutes_awake",
                                "minutes_after_wakeup", "awake_count",
                                "restless_count",     "restless_duration"};
        for (const char* field : fields) {
            for (const char* agg : {"min", "max", "mean"}) {
                std::string name = std::string(field) + "_" + agg;
                std::string def = std::string(agg) + " over sleep episode summaries";
                c.push_back({name, ModalityTag::Sleep, def});
            }
        }
        return c;
    }();
    return catalog;
}

std::size_t catalog_size() { return feature_catalog().size(); }

std::size_t catalog_index(const std::string& name) {
    static const std::unordered_map<std::string, std::size_t> index = [] {
        std::unordered_map<std::string, std::size_t> m;
        const auto& cat = feature_catalog();
        for (std::size_t i = 0; i < cat.size(); ++i) m[cat[i].name] = i;
        return m;
    }();
    auto it = index.find(name);
    if (it == index.end()) throw data_error("unknown feature '" + name + "'");
    return it->second;
}

FeatureVector::FeatureVector(std::string id)
    : example_id(std::move(id)),
      values(catalog_size(), std::numeric_limits<double>::quiet_NaN()),
      missing(catalog_size(), true) {}

void FeatureVector::set(std::size_t index, double value) {
    if (!std::isfinite(value)) {
        set_missing(index);
        return;
    }
    values[index] = value;
    missing[index] = false;
}

void FeatureVector::set_missing(std::size_t index) {
    values[index] = std::numeric_limits<double>::quiet_NaN();
    missing[index] = true;
}

std::string catalog_manifest_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : feature_catalog())
        arr.push_back({{"name", e.name},
                       {"modality", modality_tag_name(e.tag)},
                       {"definition", e.definition}});
    return arr.dump(2);
}

}  // namespace detpred::features
