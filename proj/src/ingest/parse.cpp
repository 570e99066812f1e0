#include "detpred/ingest/parse.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "detpred/core/error.hpp"

namespace detpred::ingest {
namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_number(const std::string& s, int line, const char* what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw data_error(std::string("line ") + std::to_string(line) + ": invalid " + what +
                         " '" + s + "'");
    }
}

int parse_nonneg_int(const std::string& s, int line, const char* what) {
    double v = parse_number(s, line, what);
    if (v < 0 || v != std::floor(v))
        throw data_error(std::string("line ") + std::to_string(line) + ": " + what +
                         " must be a non-negative integer, got '" + s + "'");
    return static_cast<int>(v);
}

void expect_header(std::istream& in, const std::string& expected, const char* schema) {
    std::string line;
    if (!std::getline(in, line)) throw data_error(std::string(schema) + ": missing header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected)
        throw data_error(std::string(schema) + ": bad header '" + line + "', expected '" +
                         expected + "'");
}

std::string format_value(double v) {
    char buf[32];
    if (v == std::floor(v) && std::fabs(v) < 1e15)
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
    else
        std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

IntradayParseResult parse_intraday(std::istream& in, Modality modality) {
    IntradayParseResult result;
    result.series.modality = modality;
    expect_header(in, "timestamp,value", "intraday");

    std::string line;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv(line);
        if (fields.size() != 2)
            throw data_error("line " + std::to_string(lineno) + ": expected 2 fields, got " +
                             std::to_string(fields.size()));
        Minute ts;
        try {
            ts = parse_minute(fields[0]);
        } catch (const data_error& e) {
            throw data_error("line " + std::to_string(lineno) + ": " + e.what());
        }
        double value = parse_number(fields[1], lineno, "value");

        switch (modality) {
            case Modality::HeartRate:
                // open range; out-of-range bpm is a soft reject, not an abort
                if (!(value > 20.0 && value < 250.0)) {
                    result.rejected.push_back(
                        {lineno, "heart rate " + fields[1] + " outside (20, 250) bpm"});
                    continue;
                }
                break;
            case Modality::Step:
                if (value < 0 || value != std::floor(value))
                    throw data_error("line " + std::to_string(lineno) +
                                     ": step count must be a non-negative integer, got '" +
                                     fields[1] + "'");
                break;
            case Modality::SleepStatus:
                if (value != 0 && value != 1 && value != 2 && value != 3)
                    throw data_error("line " + std::to_string(lineno) + ": sleep level '" +
                                     fields[1] + "' not in {0,1,2,3}");
                break;
        }

        if (!result.series.samples.empty() && ts <= result.series.samples.back().timestamp)
            throw data_error("line " + std::to_string(lineno) +
                             ": timestamp not strictly increasing");
        result.series.samples.push_back({ts, value});
    }
    return result;
}

IntradayParseResult parse_intraday_file(const std::string& path, Modality modality) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open '" + path + "'");
    try {
        return parse_intraday(in, modality);
    } catch (const data_error& e) {
        throw data_error(path + ": " + e.what());
    }
}

void write_intraday(std::ostream& out, const SampleSeries& series) {
    out << "timestamp,value\n";
    for (const auto& s : series.samples)
        out << format_minute(s.timestamp) << ',' << format_value(s.value) << '\n';
}

std::vector<SleepEpisodeSummary> parse_sleep_summaries(std::istream& in) {
    expect_header(in,
                  "date,time_in_bed,min_to_fall_asleep,min_asleep,min_awake,min_after_wakeup,"
                  "awake_count,restless_count,restless_duration",
                  "sleep summary");
    std::vector<SleepEpisodeSummary> out;
    std::string line;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 9)
            throw data_error("line " + std::to_string(lineno) + ": expected 9 fields, got " +
                             std::to_string(f.size()));
        SleepEpisodeSummary s;
        try {
            s.episode_date = parse_date(f[0]);
        } catch (const data_error& e) {
            throw data_error("line " + std::to_string(lineno) + ": " + e.what());
        }
        s.time_in_bed = parse_nonneg_int(f[1], lineno, "time_in_bed");
        s.minutes_to_fall_asleep = parse_nonneg_int(f[2], lineno, "min_to_fall_asleep");
        s.minutes_asleep = parse_nonneg_int(f[3], lineno, "min_asleep");
        s.minutes_awake = parse_nonneg_int(f[4], lineno, "min_awake");
        s.minutes_after_wakeup = parse_nonneg_int(f[5], lineno, "min_after_wakeup");
        s.awake_count = parse_nonneg_int(f[6], lineno, "awake_count");
        s.restless_count = parse_nonneg_int(f[7], lineno, "restless_count");
        s.restless_duration = parse_nonneg_int(f[8], lineno, "restless_duration");
        if (s.time_in_bed != s.minutes_to_fall_asleep + s.minutes_asleep + s.minutes_awake +
                                 s.minutes_after_wakeup)
            throw data_error("line " + std::to_string(lineno) +
                             ": time_in_bed does not equal the sum of its parts");
        out.push_back(s);
    }
    return out;
}

void write_sleep_summaries(std::ostream& out, const std::vector<SleepEpisodeSummary>& summaries) {
    out << "date,time_in_bed,min_to_fall_asleep,min_asleep,min_awake,min_after_wakeup,"
           "awake_count,restless_count,restless_duration\n";
    for (const auto& s : summaries) {
        out << format_date(s.episode_date) << ',' << s.time_in_bed << ','
            << s.minutes_to_fall_asleep << ',' << s.minutes_asleep << ',' << s.minutes_awake
            << ',' << s.minutes_after_wakeup << ',' << s.awake_count << ',' << s.restless_count
            << ',' << s.restless_duration << '\n';
    }
}

std::vector<SyncEvent> parse_sync_log(std::istream& in) {
    expect_header(in, "capture_time,arrival_time,battery", "sync log");
    std::vector<SyncEvent> out;
    std::string line;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 3)
            throw data_error("line " + std::to_string(lineno) + ": expected 3 fields, got " +
                             std::to_string(f.size()));
        SyncEvent e;
        try {
            e.device_capture_time = parse_minute(f[0]);
            e.cloud_arrival_time = parse_minute(f[1]);
            e.battery = battery_from_name(f[2]);
        } catch (const data_error& err) {
            throw data_error("line " + std::to_string(lineno) + ": " + err.what());
        }
        if (e.cloud_arrival_time < e.device_capture_time)
            throw data_error("line " + std::to_string(lineno) + ": arrival precedes capture");
        out.push_back(e);
    }
    return out;
}

void write_sync_log(std::ostream& out, const std::vector<SyncEvent>& events) {
    out << "capture_time,arrival_time,battery\n";
    for (const auto& e : events)
        out << format_minute(e.device_capture_time) << ',' << format_minute(e.cloud_arrival_time)
            << ',' << battery_name(e.battery) << '\n';
}

}  // namespace detpred::ingest
