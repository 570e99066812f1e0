#include "detpred/ingest/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

#include "detpred/core/error.hpp"

using nlohmann::json;

namespace detpred::ingest {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    // splitmix64 step, keeps per-patient streams independent of each other
    std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct DayPlan {
    int wake_minute;        // end of the morning sleep episode
    int bed_minute;         // start of the evening episode, minute of day
    double signal;          // anomaly_signal_strength on flagged days, else 0
};

double pareto_delay(std::mt19937_64& rng, double scale) {
    // heavy tail, finite median; scale 0 disables the noise entirely
    if (scale <= 0.0) return 0.0;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double u = 1.0 - unif(rng);
    return scale * (std::pow(u, -1.0 / 1.5) - 1.0);
}

}  // namespace

void SynthConfig::validate() const {
    if (n_patients <= 0) throw config_error("n_patients must be positive");
    if (days_per_patient <= 0) throw config_error("days_per_patient must be positive");
    if (n_deteriorated < 0 || n_deteriorated > n_patients)
        throw config_error("n_deteriorated must lie in [0, n_patients]");
    if (anomaly_signal_strength < 0) throw config_error("anomaly_signal_strength must be >= 0");
    for (double r : {hr_missing_rate, step_missing_rate, sleep_status_missing_rate,
                     sleep_summary_missing_rate}) {
        if (r < 0.0 || r > 1.0) throw config_error("missingness rates must lie in [0, 1]");
    }
    if (sync_cadence_minutes <= 0) throw config_error("sync_cadence_minutes must be positive");
    if (sync_delay_noise < 0) throw config_error("sync_delay_noise must be >= 0");
}

SynthConfig synth_config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open synth config '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw config_error(path + ": " + e.what());
    }
    SynthConfig c;
    try {
        c.n_patients = j.value("n_patients", c.n_patients);
        c.n_deteriorated = j.value("n_deteriorated", c.n_deteriorated);
        c.days_per_patient = j.value("days_per_patient", c.days_per_patient);
        c.anomaly_signal_strength = j.value("anomaly_signal_strength", c.anomaly_signal_strength);
        c.hr_missing_rate = j.value("hr_missing_rate", c.hr_missing_rate);
        c.step_missing_rate = j.value("step_missing_rate", c.step_missing_rate);
        c.sleep_status_missing_rate =
            j.value("sleep_status_missing_rate", c.sleep_status_missing_rate);
        c.sleep_summary_missing_rate =
            j.value("sleep_summary_missing_rate", c.sleep_summary_missing_rate);
        c.sync_cadence_minutes = j.value("sync_cadence_minutes", c.sync_cadence_minutes);
        c.sync_delay_noise = j.value("sync_delay_noise", c.sync_delay_noise);
        c.rng_seed = j.value("rng_seed", c.rng_seed);
        if (j.contains("monitoring_start"))
            c.monitoring_start = parse_date(j.at("monitoring_start").get<std::string>());
    } catch (const json::exception& e) {
        throw config_error(path + ": " + e.what());
    }
    c.validate();
    return c;
}

std::string synth_config_to_json(const SynthConfig& c) {
    json j{{"n_patients", c.n_patients},
           {"n_deteriorated", c.n_deteriorated},
           {"days_per_patient", c.days_per_patient},
           {"anomaly_signal_strength", c.anomaly_signal_strength},
           {"hr_missing_rate", c.hr_missing_rate},
           {"step_missing_rate", c.step_missing_rate},
           {"sleep_status_missing_rate", c.sleep_status_missing_rate},
           {"sleep_summary_missing_rate", c.sleep_summary_missing_rate},
           {"sync_cadence_minutes", c.sync_cadence_minutes},
           {"sync_delay_noise", c.sync_delay_noise},
           {"rng_seed", c.rng_seed},
           {"monitoring_start", format_date(c.monitoring_start)}};
    return j.dump(2);
}

namespace {

PatientRecord generate_patient(const SynthConfig& cfg, int index, bool deteriorated,
                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    PatientRecord r;
    {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "p%03d", index + 1);
        r.patient_id = buf;
    }
    r.monitoring_start = cfg.monitoring_start;
    r.monitoring_end = cfg.monitoring_start + cfg.days_per_patient - 1;

    const int days = cfg.days_per_patient;
    const double s = cfg.anomaly_signal_strength;

    if (deteriorated) {
        int lo = std::min(7, days - 1);
        std::uniform_int_distribution<int> pick(lo, days - 1);
        r.outcome.deterioration_dates.push_back(r.monitoring_start + pick(rng));
        r.outcome.deteriorated = true;
    }
    auto day_signal = [&](Date d) {
        for (Date ev : r.outcome.deterioration_dates)
            if (d >= ev - 3 && d <= ev - 1) return s;
        return 0.0;
    };

    // LACE inputs are drawn independently of the wearable streams, so the
    // index carries no injected signal.
    {
        std::uniform_int_distribution<int> los(1, 14), charlson(0, 6), ed(0, 5);
        r.lace.length_of_stay_days = los(rng);
        r.lace.acute_admission = unif(rng) < 0.6;
        r.lace.charlson_index = charlson(rng);
        r.lace.ed_visits_6mo = ed(rng);
    }

    // Per-day schedule. Episode for date d runs from bed_minute on day d-1 to
    // wake_minute on day d; the first monitored day sleeps from midnight so
    // every date has an episode ending on it.
    std::vector<DayPlan> plan(days);
    for (int d = 0; d < days; ++d) {
        plan[d].wake_minute = 390 + static_cast<int>(std::clamp(gauss(rng) * 25.0, -60.0, 90.0));
        plan[d].bed_minute = 1350 + static_cast<int>(std::clamp(gauss(rng) * 20.0, -60.0, 60.0));
        plan[d].signal = day_signal(r.monitoring_start + d);
    }

    const double hr_rest = 62.0 + gauss(rng) * 4.0;
    const double activity_level = std::clamp(0.25 + gauss(rng) * 0.05, 0.1, 0.45);

    const Minute span_begin = r.span_begin();
    const int span_minutes = days * static_cast<int>(kMinutesPerDay);

    // Minute grids built dense first; dropout is applied when emitting.
    std::vector<int> steps(span_minutes, -1);        // -1 = not awake, no sample
    std::vector<int> status(span_minutes, 0);        // 0 = no episode
    std::vector<int> hr(span_minutes, 0);

    // sleep episodes + summaries
    for (int d = 0; d < days; ++d) {
        const double sig = plan[d].signal;
        const int ep_start =
            d == 0 ? 0 : (d - 1) * static_cast<int>(kMinutesPerDay) + plan[d - 1].bed_minute;
        const int ep_end = d * static_cast<int>(kMinutesPerDay) + plan[d].wake_minute;
        if (ep_end <= ep_start) continue;

        std::uniform_int_distribution<int> fall(8, 25);
        int fall_len = static_cast<int>(fall(rng) * (1.0 + sig));
        fall_len = std::min(fall_len, (ep_end - ep_start) / 3);
        std::uniform_int_distribution<int> after(2, 8);
        int after_len = std::min(after(rng), (ep_end - ep_start) / 6);

        const double p_restless = std::min(0.25, 0.012 * (1.0 + 2.0 * sig));
        const double p_awake = std::min(0.12, 0.004 * (1.0 + 2.0 * sig));

        int t = ep_start;
        for (; t < ep_start + fall_len; ++t) status[t] = kSleepRestless;
        while (t < ep_end - after_len) {
            if (unif(rng) < p_awake) {
                int len = 1 + static_cast<int>(-2.0 * std::log(1.0 - unif(rng)));
                for (int k = 0; k < len && t < ep_end - after_len; ++k, ++t)
                    status[t] = kSleepAwake;
            } else if (unif(rng) < p_restless) {
                int len = 1 + static_cast<int>(-3.0 * std::log(1.0 - unif(rng)));
                for (int k = 0; k < len && t < ep_end - after_len; ++k, ++t)
                    status[t] = kSleepRestless;
            } else {
                status[t++] = kSleepAsleep;
            }
        }
        for (; t < ep_end; ++t) status[t] = kSleepAwake;

        // summary from the device's own (pre-dropout) minutes
        SleepEpisodeSummary sum;
        sum.episode_date = r.monitoring_start + d;
        sum.time_in_bed = ep_end - ep_start;
        sum.minutes_to_fall_asleep = fall_len;
        sum.minutes_after_wakeup = after_len;
        int awake_mid = 0, restless_mid = 0, awake_runs = 0, restless_runs = 0;
        int prev = -1;
        for (int u = ep_start + fall_len; u < ep_end - after_len; ++u) {
            if (status[u] == kSleepAwake) {
                ++awake_mid;
                if (prev != kSleepAwake) ++awake_runs;
            } else if (status[u] == kSleepRestless) {
                ++restless_mid;
                if (prev != kSleepRestless) ++restless_runs;
            }
            prev = status[u];
        }
        sum.minutes_awake = awake_mid;
        sum.awake_count = awake_runs;
        sum.restless_count = restless_runs;
        sum.restless_duration = restless_mid;
        sum.minutes_asleep =
            sum.time_in_bed - sum.minutes_to_fall_asleep - sum.minutes_awake -
            sum.minutes_after_wakeup;
        if (unif(rng) >= cfg.sleep_summary_missing_rate) r.sleep_summaries.push_back(sum);
    }

    // steps while not in an episode
    for (int t = 0; t < span_minutes; ++t) {
        if (status[t] != 0) continue;
        const int d = t / static_cast<int>(kMinutesPerDay);
        const double sig = plan[d].signal;
        const int mod = t % static_cast<int>(kMinutesPerDay);
        const double hour = mod / 60.0;
        // two activity humps, late morning and early evening
        double shape = 0.55 + 0.45 * std::sin((hour - 9.0) / 24.0 * 2.0 * kPi) +
                       0.25 * std::sin((hour - 17.0) / 12.0 * 2.0 * kPi);
        double p_active = std::clamp(activity_level * shape, 0.0, 0.9) / (1.0 + 1.5 * sig);
        if (unif(rng) < p_active) {
            std::uniform_int_distribution<int> burst(5, 60);
            steps[t] = std::max(1, static_cast<int>(burst(rng) / (1.0 + sig)));
        } else {
            steps[t] = 0;
        }
    }

    // heart rate everywhere
    for (int t = 0; t < span_minutes; ++t) {
        const int d = t / static_cast<int>(kMinutesPerDay);
        const double sig = plan[d].signal;
        const int mod = t % static_cast<int>(kMinutesPerDay);
        double v = hr_rest + 10.0 * sig + 6.0 * std::sin((mod / 60.0 - 9.0) / 24.0 * 2.0 * kPi);
        if (status[t] != 0)
            v -= 7.0;
        else if (steps[t] > 0)
            v += 0.35 * steps[t];
        v += gauss(rng) * 2.5;
        hr[t] = std::clamp(static_cast<int>(std::lround(v)), 35, 215);
    }

    for (int t = 0; t < span_minutes; ++t) {
        const Minute ts = span_begin + t;
        if (unif(rng) >= cfg.hr_missing_rate)
            r.heart_rate.samples.push_back({ts, static_cast<double>(hr[t])});
        if (steps[t] >= 0 && unif(rng) >= cfg.step_missing_rate)
            r.steps.samples.push_back({ts, static_cast<double>(steps[t])});
        if (status[t] != 0 && unif(rng) >= cfg.sleep_status_missing_rate)
            r.sleep_status.samples.push_back({ts, static_cast<double>(status[t])});
    }

    // sync ticks; capture is the oldest pending sample in the batch
    BatteryLevel battery = BatteryLevel::High;
    for (Minute tick = span_begin + cfg.sync_cadence_minutes; tick < r.span_end();
         tick += cfg.sync_cadence_minutes) {
        double p = unif(rng);
        if (battery == BatteryLevel::Low || battery == BatteryLevel::Empty) {
            if (p < 0.4) battery = BatteryLevel::High;  // recharged
        } else if (p < 0.015) {
            battery = static_cast<BatteryLevel>(static_cast<int>(battery) - 1);
        }
        SyncEvent e;
        e.device_capture_time = tick - cfg.sync_cadence_minutes;
        e.cloud_arrival_time =
            tick + static_cast<Minute>(std::llround(pareto_delay(rng, cfg.sync_delay_noise)));
        e.battery = battery;
        r.sync_events.push_back(e);
    }

    validate_record(r);
    return r;
}

}  // namespace

std::vector<PatientRecord> generate_synthetic_cohort(const SynthConfig& config) {
    config.validate();
    std::mt19937_64 cohort_rng(mix_seed(config.rng_seed, 0));
    std::vector<int> order(config.n_patients);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), cohort_rng);
    std::set<int> deteriorated(order.begin(), order.begin() + config.n_deteriorated);

    std::vector<PatientRecord> cohort;
    cohort.reserve(config.n_patients);
    for (int i = 0; i < config.n_patients; ++i)
        cohort.push_back(generate_patient(config, i, deteriorated.count(i) > 0,
                                          mix_seed(config.rng_seed, 1 + i)));
    return cohort;
}

}  // namespace detpred::ingest
