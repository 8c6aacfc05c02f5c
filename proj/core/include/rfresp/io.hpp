#pragma once

#include <string>
#include <vector>

#include "rfresp/estimate.hpp"
#include "rfresp/evaluate.hpp"
#include "rfresp/rate_series.hpp"
#include "rfresp/synth.hpp"
#include "rfresp/trace.hpp"

namespace rfresp {

/// Sidecar manifest accompanying a trace data file.
struct TraceManifest {
    int format_version = 1;
    Technology technology = Technology::rss;
    double fs_nominal = 1.0;
    std::size_t stream_count = 1;
    std::vector<std::string> stream_labels;
    ValueKind value_kind = ValueKind::real_value;
    double start_time = 0.0;
};

/// Reads the canonical trace format: `<path>.manifest.json` plus a text data
/// file of `timestamp stream value` records (complex values carry `re im`).
/// Throws std::runtime_error with the offending line number on malformed
/// records, and on manifest/data disagreement.
RawTrace read_trace(const std::string& path);
void write_trace(const RawTrace& trace, const std::string& path);

/// Rate series as `t,f_hat,suppressed` lines; an absent rate is an empty
/// field, never a sentinel number.
RateSeries read_rate_series(const std::string& path);
void write_rate_series(const RateSeries& series, const std::string& path);

EvalReport read_report(const std::string& path);
void write_report(const EvalReport& report, const std::string& path);

/// One `t_start t_end` pair per line.
std::vector<Interval> read_intervals(const std::string& path);
void write_intervals(const std::vector<Interval>& intervals, const std::string& path);

struct ScenarioFile {
    Technology technology = Technology::csi;
    SynthScenario scenario;
};

ScenarioFile read_scenario(const std::string& path);
void write_scenario(const ScenarioFile& scenario, const std::string& path);

/// JSON run configuration; every field is optional and falls back to the
/// defaults in PipelineConfig (motion thresholds fall back to the shipped
/// per-technology defaults). Validated on load.
PipelineConfig read_run_config(const std::string& path);

}  // namespace rfresp
