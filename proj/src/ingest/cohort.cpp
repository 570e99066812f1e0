#include "detpred/ingest/cohort.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "detpred/core/error.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace detpred::ingest {
namespace {

std::string patient_file(const std::string& dir, const std::string& id, const char* kind) {
    return dir + "/" + id + "." + kind + ".csv";
}

json lace_to_json(const LaceInputs& l) {
    return json{{"length_of_stay_days", l.length_of_stay_days},
                {"acute_admission", l.acute_admission},
                {"charlson_index", l.charlson_index},
                {"ed_visits_6mo", l.ed_visits_6mo}};
}

LaceInputs lace_from_json(const json& j, const std::string& id) {
    LaceInputs l;
    l.length_of_stay_days = j.at("length_of_stay_days").get<int>();
    l.acute_admission = j.at("acute_admission").get<bool>();
    l.charlson_index = j.at("charlson_index").get<int>();
    l.ed_visits_6mo = j.at("ed_visits_6mo").get<int>();
    if (l.length_of_stay_days < 0 || l.charlson_index < 0 || l.ed_visits_6mo < 0)
        throw data_error(id + ": negative LACE input");
    return l;
}

}  // namespace

std::vector<PatientRecord> load_cohort(const std::string& directory, CohortLoadReport* report) {
    const std::string manifest_path = directory + "/manifest.json";
    std::ifstream in(manifest_path);
    if (!in) throw data_error("cannot open cohort manifest '" + manifest_path + "'");
    json manifest;
    try {
        in >> manifest;
    } catch (const json::exception& e) {
        throw data_error(manifest_path + ": " + e.what());
    }
    if (!manifest.is_array()) throw data_error(manifest_path + ": manifest must be a JSON array");

    std::vector<PatientRecord> cohort;
    std::set<std::string> seen_ids;
    for (const auto& entry : manifest) {
        PatientRecord r;
        try {
            r.patient_id = entry.at("patient_id").get<std::string>();
            r.monitoring_start = parse_date(entry.at("monitoring_start").get<std::string>());
            r.monitoring_end = parse_date(entry.at("monitoring_end").get<std::string>());
            for (const auto& d : entry.at("deterioration_dates"))
                r.outcome.deterioration_dates.push_back(parse_date(d.get<std::string>()));
            r.outcome.deteriorated = !r.outcome.deterioration_dates.empty();
            r.lace = lace_from_json(entry.at("lace"), r.patient_id);
        } catch (const json::exception& e) {
            throw data_error(manifest_path + ": " + e.what());
        }
        if (!seen_ids.insert(r.patient_id).second)
            throw data_error("duplicate patient_id '" + r.patient_id + "' in manifest");

        bool any_file = false;
        struct {
            const char* kind;
            SampleSeries PatientRecord::* member;
            Modality modality;
        } streams[] = {
            {"heart_rate", &PatientRecord::heart_rate, Modality::HeartRate},
            {"steps", &PatientRecord::steps, Modality::Step},
            {"sleep_status", &PatientRecord::sleep_status, Modality::SleepStatus},
        };
        for (const auto& s : streams) {
            const std::string path = patient_file(directory, r.patient_id, s.kind);
            (r.*s.member).modality = s.modality;
            if (!fs::exists(path)) continue;  // fully-missing modality, not an error
            any_file = true;
            IntradayParseResult parsed = parse_intraday_file(path, s.modality);
            r.*s.member = std::move(parsed.series);
            if (report) {
                for (const auto& rej : parsed.rejected)
                    report->rejected_rows.push_back(path + ":" + std::to_string(rej.line) + ": " +
                                                    rej.reason);
            }
        }
        const std::string sleep_path = patient_file(directory, r.patient_id, "sleep_summary");
        if (fs::exists(sleep_path)) {
            any_file = true;
            std::ifstream f(sleep_path);
            try {
                r.sleep_summaries = parse_sleep_summaries(f);
            } catch (const data_error& e) {
                throw data_error(sleep_path + ": " + e.what());
            }
        }
        const std::string sync_path = patient_file(directory, r.patient_id, "sync");
        if (fs::exists(sync_path)) {
            any_file = true;
            std::ifstream f(sync_path);
            try {
                r.sync_events = parse_sync_log(f);
            } catch (const data_error& e) {
                throw data_error(sync_path + ": " + e.what());
            }
        }
        if (!any_file)
            throw data_error("manifest entry '" + r.patient_id + "' has no data files in " +
                             directory);
        validate_record(r);
        cohort.push_back(std::move(r));
    }
    return cohort;
}

void save_cohort(const std::string& directory, const std::vector<PatientRecord>& cohort) {
    fs::create_directories(directory);
    json manifest = json::array();
    for (const auto& r : cohort) {
        json dates = json::array();
        for (Date d : r.outcome.deterioration_dates) dates.push_back(format_date(d));
        manifest.push_back(json{{"patient_id", r.patient_id},
                                {"monitoring_start", format_date(r.monitoring_start)},
                                {"monitoring_end", format_date(r.monitoring_end)},
                                {"deterioration_dates", dates},
                                {"lace", lace_to_json(r.lace)}});

        auto write_file = [&](const char* kind, auto&& writer) {
            std::ofstream out(patient_file(directory, r.patient_id, kind));
            if (!out) throw data_error("cannot write " + patient_file(directory, r.patient_id, kind));
            writer(out);
        };
        write_file("heart_rate", [&](std::ostream& o) { write_intraday(o, r.heart_rate); });
        write_file("steps", [&](std::ostream& o) { write_intraday(o, r.steps); });
        write_file("sleep_status", [&](std::ostream& o) { write_intraday(o, r.sleep_status); });
        write_file("sleep_summary",
                   [&](std::ostream& o) { write_sleep_summaries(o, r.sleep_summaries); });
        write_file("sync", [&](std::ostream& o) { write_sync_log(o, r.sync_events); });
    }
    std::ofstream out(directory + "/manifest.json");
    if (!out) throw data_error("cannot write " + directory + "/manifest.json");
    out << manifest.dump(2) << '\n';
}

}  // namespace detpred::ingest
